#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace tdrl {

// A permutation of {1,...,n}, stored as the sequence of its symbols.
// Validity (each symbol 1..n exactly once) is checked at construction;
// operations that provably preserve validity use the unchecked factory.
class Permutation {
 public:
  explicit Permutation(std::vector<int> elements);

  static Permutation identity(int n);

  // Caller guarantees `elements` is a bijection on {1..n}.
  static Permutation unchecked(std::vector<int> elements);

  int size() const noexcept { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elements() const noexcept { return elems_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;  // lexicographic

  // Text format: whitespace-separated 1-based symbols, e.g. "2 3 5 1 4".
  std::string str() const;
  static Permutation parse(std::string_view text);

 private:
  struct unchecked_t {};
  Permutation(unchecked_t, std::vector<int> elements);

  std::vector<int> elems_;
};

bool is_valid_permutation(const std::vector<int>& elements);

// True iff the sequence is strictly increasing then strictly decreasing
// (either part may be empty).
bool is_unimodular(const Permutation& p);

}  // namespace tdrl
