#pragma once

#include "tdrl/pattern.hpp"
#include "tdrl/permutation.hpp"

namespace tdrl {

// One operation confined to a window of consecutive positions. The window
// width is the pattern length; `start` is 1-based.
struct WindowedOp {
  OpKind kind;
  int start;
  Pattern pattern;
};

// Keeps the symbols at 1-bits in order, then appends the symbols at 0-bits
// in order.
Permutation apply_tdrl(const Permutation& p, const Pattern& b);

// Keeps the symbols at 1-bits in order, then appends the symbols at 0-bits
// in reversed position order.
Permutation apply_mtdrl(const Permutation& p, const Pattern& b);

Permutation apply(const Permutation& p, OpKind kind, const Pattern& b);

// Applies the operation to the window [start, start + k - 1]; positions
// outside the window are unchanged.
Permutation apply_windowed(const Permutation& p, const WindowedOp& op);

// Symbol-wise composition sigma∘p: element i of the result is sigma applied
// to element i of p.
Permutation relabel(const Permutation& sigma, const Permutation& p);

}  // namespace tdrl
