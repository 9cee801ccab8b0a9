#include "tdrl/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdrl {

std::string to_string(OpKind kind) {
  return kind == OpKind::TDRL ? "tdrl" : "mtdrl";
}

OpKind parse_op_kind(std::string_view text) {
  if (text == "tdrl") return OpKind::TDRL;
  if (text == "mtdrl") return OpKind::MTDRL;
  throw std::invalid_argument("operation kind must be 'tdrl' or 'mtdrl'");
}

Pattern::Pattern(std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("pattern must be nonempty");
}

Pattern Pattern::from_string(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("pattern text must be a nonempty string over {0,1}");
    }
    bits.push_back(c == '1');
  }
  return Pattern(std::move(bits));
}

Pattern Pattern::from_index(std::uint64_t value, int length) {
  if (length < 1 || length > 63) {
    throw std::invalid_argument("pattern index length must be in [1, 63]");
  }
  std::vector<bool> bits(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    bits[static_cast<std::size_t>(i)] = (value >> (length - 1 - i)) & 1u;
  }
  return Pattern(std::move(bits));
}

Pattern Pattern::zeros(int length) {
  return Pattern(std::vector<bool>(static_cast<std::size_t>(length), false));
}

Pattern Pattern::ones(int length) {
  return Pattern(std::vector<bool>(static_cast<std::size_t>(length), true));
}

int Pattern::ones_count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

bool Pattern::operator<(const Pattern& other) const {
  return std::lexicographical_compare(bits_.begin(), bits_.end(),
                                      other.bits_.begin(), other.bits_.end());
}

std::string Pattern::str() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

namespace {

// b = 1^r 0^(n-r) for some r (including all-ones and all-zeros)?
bool is_prefix_block(const Pattern& b) {
  int i = 0;
  while (i < b.size() && b.bit(i)) ++i;
  while (i < b.size() && !b.bit(i)) ++i;
  return i == b.size();
}

}  // namespace

Pattern canonical_pattern(const Pattern& b, OpKind kind) {
  if (kind == OpKind::TDRL) {
    return is_prefix_block(b) ? Pattern::zeros(b.size()) : b;
  }
  std::vector<bool> bits = b.bits();
  bits.back() = true;
  return Pattern(std::move(bits));
}

bool is_reversible_pattern(const Pattern& b) {
  int one_blocks = 0;
  bool prev = false;
  for (int i = 0; i < b.size(); ++i) {
    if (b.bit(i) && !prev) ++one_blocks;
    prev = b.bit(i);
  }
  return one_blocks <= 1 || (one_blocks == 2 && b.bit(0));
}

Pattern inverse_reversible_pattern(const Pattern& b) {
  if (!is_reversible_pattern(b)) {
    throw std::invalid_argument("pattern is not of the reversible form 1^r 0^s 1^t 0^u");
  }
  int i = 0;
  int r = 0, s = 0, t = 0;
  while (i < b.size() && b.bit(i)) ++r, ++i;
  while (i < b.size() && !b.bit(i)) ++s, ++i;
  while (i < b.size() && b.bit(i)) ++t, ++i;
  const int u = b.size() - i;

  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(b.size()));
  bits.insert(bits.end(), static_cast<std::size_t>(r), true);
  bits.insert(bits.end(), static_cast<std::size_t>(t), false);
  bits.insert(bits.end(), static_cast<std::size_t>(s), true);
  bits.insert(bits.end(), static_cast<std::size_t>(u), false);
  return Pattern(std::move(bits));
}

}  // namespace tdrl
