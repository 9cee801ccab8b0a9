#include "tdrl/ops.hpp"

#include <stdexcept>

namespace tdrl {

namespace {

void check_lengths(const Permutation& p, const Pattern& b) {
  if (p.size() != b.size()) {
    throw std::invalid_argument("pattern length must equal permutation length");
  }
}

// Shared core over a raw symbol span so windowed segments reuse it.
std::vector<int> split_concat(const std::vector<int>& symbols, const Pattern& b,
                              bool reverse_second) {
  std::vector<int> out;
  out.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (b.bit(static_cast<int>(i))) out.push_back(symbols[i]);
  }
  if (reverse_second) {
    for (std::size_t i = symbols.size(); i-- > 0;) {
      if (!b.bit(static_cast<int>(i))) out.push_back(symbols[i]);
    }
  } else {
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (!b.bit(static_cast<int>(i))) out.push_back(symbols[i]);
    }
  }
  return out;
}

}  // namespace

Permutation apply_tdrl(const Permutation& p, const Pattern& b) {
  check_lengths(p, b);
  return Permutation::unchecked(split_concat(p.elements(), b, false));
}

Permutation apply_mtdrl(const Permutation& p, const Pattern& b) {
  check_lengths(p, b);
  return Permutation::unchecked(split_concat(p.elements(), b, true));
}

Permutation apply(const Permutation& p, OpKind kind, const Pattern& b) {
  return kind == OpKind::TDRL ? apply_tdrl(p, b) : apply_mtdrl(p, b);
}

Permutation apply_windowed(const Permutation& p, const WindowedOp& op) {
  const int n = p.size();
  const int k = op.pattern.size();
  if (k > n) {
    throw std::out_of_range("window width exceeds permutation length");
  }
  if (op.start < 1 || op.start > n - k + 1) {
    throw std::out_of_range("window start out of range");
  }
  std::vector<int> segment(p.elements().begin() + (op.start - 1),
                           p.elements().begin() + (op.start - 1) + k);
  std::vector<int> replaced =
      split_concat(segment, op.pattern, op.kind == OpKind::MTDRL);
  std::vector<int> out = p.elements();
  std::copy(replaced.begin(), replaced.end(), out.begin() + (op.start - 1));
  return Permutation::unchecked(std::move(out));
}

Permutation relabel(const Permutation& sigma, const Permutation& p) {
  if (sigma.size() != p.size()) {
    throw std::invalid_argument("relabeling permutation length mismatch");
  }
  std::vector<int> out;
  out.reserve(p.elements().size());
  for (int x : p.elements()) {
    out.push_back(sigma.elements()[static_cast<std::size_t>(x - 1)]);
  }
  return Permutation::unchecked(std::move(out));
}

}  // namespace tdrl
