#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tdrl {

enum class OpKind { TDRL, MTDRL };

std::string to_string(OpKind kind);
OpKind parse_op_kind(std::string_view text);

// A binary pattern defining one rearrangement operation. Bit i = 1 means the
// symbol at position i+1 survives in the first copy. Leftmost bit is
// position 1.
class Pattern {
 public:
  explicit Pattern(std::vector<bool> bits);

  // Text form over {0,1}, e.g. "01101".
  static Pattern from_string(std::string_view text);

  // The length-`length` binary rendering of `value` (MSB = position 1).
  static Pattern from_index(std::uint64_t value, int length);

  static Pattern zeros(int length);
  static Pattern ones(int length);

  int size() const noexcept { return static_cast<int>(bits_.size()); }
  bool bit(int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<bool>& bits() const noexcept { return bits_; }
  int ones_count() const;

  bool operator==(const Pattern&) const = default;
  bool operator<(const Pattern& other) const;  // lexicographic on bits

  std::string str() const;

 private:
  std::vector<bool> bits_;
};

// The canonical representative of the operation a pattern induces: two
// patterns induce the same operation on every permutation iff their
// canonical forms are equal. For TDRL, the identity-inducing prefix-block
// patterns 1^r 0^(n-r) all map to all-zeros; for MTDRL, the last bit is
// forced to 1.
Pattern canonical_pattern(const Pattern& b, OpKind kind);

// True iff b = 1^r 0^s 1^t 0^u: at most two blocks of ones, and if two,
// one of them is the leading block. Exactly the TDRL operations that can
// be undone by a single TDRL operation.
bool is_reversible_pattern(const Pattern& b);

// For b = 1^r 0^s 1^t 0^u returns 1^r 0^t 1^s 0^u, the pattern that undoes
// b. Requires is_reversible_pattern(b).
Pattern inverse_reversible_pattern(const Pattern& b);

}  // namespace tdrl
