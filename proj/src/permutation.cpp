#include "tdrl/permutation.hpp"

#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tdrl {

bool is_valid_permutation(const std::vector<int>& elements) {
  const int n = static_cast<int>(elements.size());
  if (n < 1) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : elements) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) return false;
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<int> elements) : elems_(std::move(elements)) {
  if (!is_valid_permutation(elems_)) {
    throw std::invalid_argument("not a permutation of {1..n}: each symbol 1..n must appear exactly once");
  }
}

Permutation::Permutation(unchecked_t, std::vector<int> elements)
    : elems_(std::move(elements)) {
  assert(is_valid_permutation(elems_));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation length must be at least 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(unchecked_t{}, std::move(e));
}

Permutation Permutation::unchecked(std::vector<int> elements) {
  return Permutation(unchecked_t{}, std::move(elements));
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(elems_[i]);
  }
  return out;
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> elems;
  int x = 0;
  while (in >> x) elems.push_back(x);
  if (!in.eof()) {
    throw std::invalid_argument("permutation text must be whitespace-separated integers");
  }
  if (elems.empty()) {
    throw std::invalid_argument("permutation text is empty");
  }
  return Permutation(std::move(elems));
}

bool is_unimodular(const Permutation& p) {
  const auto& e = p.elements();
  std::size_t i = 0;
  while (i + 1 < e.size() && e[i] < e[i + 1]) ++i;
  while (i + 1 < e.size() && e[i] > e[i + 1]) ++i;
  return i + 1 == e.size() || e.size() == 1;
}

}  // namespace tdrl
