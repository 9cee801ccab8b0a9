#include "tdrl/neighborhood.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace tdrl {

std::string to_string(Direction d) {
  switch (d) {
    case Direction::OUT: return "out";
    case Direction::IN: return "in";
    case Direction::REVERSIBLE: return "reversible";
  }
  return "out";
}

Direction parse_direction(std::string_view text) {
  if (text == "out") return Direction::OUT;
  if (text == "in") return Direction::IN;
  if (text == "reversible") return Direction::REVERSIBLE;
  throw std::invalid_argument("direction must be 'out', 'in' or 'reversible'");
}

bool NeighborSet::insert(Permutation p, Witness w) {
  return entries_.emplace(std::move(p), std::move(w)).second;
}

std::vector<Permutation> NeighborSet::perms() const {
  std::vector<Permutation> out;
  out.reserve(entries_.size());
  for (const auto& [p, w] : entries_) out.push_back(p);
  return out;
}

bool NeighborSet::same_elements(const NeighborSet& other) const {
  if (size() != other.size()) return false;
  return is_subset_of(other);
}

bool NeighborSet::is_subset_of(const NeighborSet& other) const {
  for (const auto& [p, w] : entries_) {
    if (!other.contains(p)) return false;
  }
  return true;
}

NeighborSet NeighborSet::intersect(const NeighborSet& other) const {
  NeighborSet out;
  for (const auto& [p, w] : entries_) {
    if (other.contains(p)) out.insert(p, w);
  }
  return out;
}

namespace {

int resolve_width(const Permutation& p, std::optional<int> k) {
  const int width = k.value_or(p.size());
  if (width < 1 || width > p.size()) {
    throw std::out_of_range("window width must satisfy 1 <= k <= n");
  }
  return width;
}

void check_ball_guard(int n, int guard) {
  if (n > guard) {
    throw guard_error("n=" + std::to_string(n) +
                      " exceeds the single-ball enumeration guard (n <= " +
                      std::to_string(guard) + ")");
  }
}

// The window segment after one operation: symbols at mask 1-bits in order,
// then the rest in order (reversed order for MTDRL). Mask bit (k-1-i)
// corresponds to window position i+1, matching Pattern::from_index.
std::vector<int> transform_segment(const std::vector<int>& seg,
                                   std::uint64_t mask, OpKind kind) {
  const int k = static_cast<int>(seg.size());
  std::vector<int> out;
  out.reserve(seg.size());
  for (int i = 0; i < k; ++i) {
    if ((mask >> (k - 1 - i)) & 1u) out.push_back(seg[static_cast<std::size_t>(i)]);
  }
  if (kind == OpKind::TDRL) {
    for (int i = 0; i < k; ++i) {
      if (!((mask >> (k - 1 - i)) & 1u)) out.push_back(seg[static_cast<std::size_t>(i)]);
    }
  } else {
    for (int i = k; i-- > 0;) {
      if (!((mask >> (k - 1 - i)) & 1u)) out.push_back(seg[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

// An in-neighbor of the window segment: place seg's first j symbols at mask
// 1-bits (j = popcount) and the remaining ones at 0-bits, in order for TDRL
// and in reversed order for MTDRL. Applying the mask's pattern to the result
// recovers seg.
std::vector<int> interleave_segment(const std::vector<int>& seg,
                                    std::uint64_t mask, OpKind kind) {
  const int k = static_cast<int>(seg.size());
  const int j = std::popcount(mask);
  std::vector<int> out(seg.size());
  int next_kept = 0;
  int next_rest = j;
  int rest_last = k - 1;
  for (int i = 0; i < k; ++i) {
    if ((mask >> (k - 1 - i)) & 1u) {
      out[static_cast<std::size_t>(i)] = seg[static_cast<std::size_t>(next_kept++)];
    } else if (kind == OpKind::TDRL) {
      out[static_cast<std::size_t>(i)] = seg[static_cast<std::size_t>(next_rest++)];
    } else {
      out[static_cast<std::size_t>(i)] = seg[static_cast<std::size_t>(rest_last--)];
    }
  }
  return out;
}

template <typename SegmentFn>
NeighborSet enumerate_windows(const Permutation& p, int k, SegmentFn&& make_segment) {
  const int n = p.size();
  NeighborSet out;
  for (int start = 1; start <= n - k + 1; ++start) {
    std::vector<int> seg(p.elements().begin() + (start - 1),
                         p.elements().begin() + (start - 1) + k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<int> replaced = make_segment(seg, mask);
      std::vector<int> full = p.elements();
      std::copy(replaced.begin(), replaced.end(), full.begin() + (start - 1));
      out.insert(Permutation::unchecked(std::move(full)),
                 Witness{start, Pattern::from_index(mask, k)});
    }
  }
  return out;
}

}  // namespace

NeighborSet ball_out(const Permutation& p, OpKind kind, std::optional<int> k,
                     int guard) {
  const int width = resolve_width(p, k);
  check_ball_guard(p.size(), guard);
  return enumerate_windows(p, width, [kind](const std::vector<int>& seg, std::uint64_t mask) {
    return transform_segment(seg, mask, kind);
  });
}

NeighborSet ball_in(const Permutation& p, OpKind kind, std::optional<int> k,
                    int guard) {
  const int width = resolve_width(p, k);
  check_ball_guard(p.size(), guard);
  return enumerate_windows(p, width, [kind](const std::vector<int>& seg, std::uint64_t mask) {
    return interleave_segment(seg, mask, kind);
  });
}

NeighborSet ball_in_exhaustive(const Permutation& p, OpKind kind,
                               std::optional<int> k, int guard) {
  const int width = resolve_width(p, k);
  const int n = p.size();
  if (n > guard) {
    throw guard_error("n=" + std::to_string(n) +
                      " exceeds the inverse-search enumeration guard (n <= " +
                      std::to_string(guard) + ")");
  }
  NeighborSet out;
  std::vector<int> cand(static_cast<std::size_t>(n));
  std::iota(cand.begin(), cand.end(), 1);
  do {
    const Permutation rho = Permutation::unchecked(cand);
    bool found = false;
    for (int start = 1; !found && start <= n - width + 1; ++start) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
        const WindowedOp op{kind, start, Pattern::from_index(mask, width)};
        if (apply_windowed(rho, op) == p) {
          out.insert(rho, Witness{start, op.pattern});
          found = true;
          break;
        }
      }
    }
  } while (std::next_permutation(cand.begin(), cand.end()));
  return out;
}

NeighborSet reversible_set(const Permutation& p, OpKind kind,
                           std::optional<int> k, int guard) {
  return ball_out(p, kind, k, guard).intersect(ball_in(p, kind, k, guard));
}

NeighborSet intersect_out(const Permutation& p, const Permutation& q,
                          OpKind kind, int guard) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("intersecting balls requires equal lengths");
  }
  return ball_out(p, kind, std::nullopt, guard)
      .intersect(ball_out(q, kind, std::nullopt, guard));
}

namespace {

std::vector<Permutation> sorted_ball_out(const Permutation& p, OpKind kind, int guard) {
  return ball_out(p, kind, std::nullopt, guard).perms();  // map order: already sorted
}

std::int64_t sorted_intersection_size(const std::vector<Permutation>& a,
                                      const std::vector<Permutation>& b) {
  std::int64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count, ++i, ++j;
    }
  }
  return count;
}

}  // namespace

MaxIntersection max_intersection(int n, OpKind kind, bool exhaustive_pairs,
                                 int guard) {
  if (n < 2) {
    throw std::invalid_argument("max_intersection requires n >= 2");
  }
  if (n > guard) {
    throw guard_error("n=" + std::to_string(n) +
                      " exceeds the pairwise-intersection guard (n <= " +
                      std::to_string(guard) + ")");
  }

  MaxIntersection best{0, {}};
  auto consider = [&](const Permutation& pi, const Permutation& rho,
                      std::int64_t value) {
    if (value > best.value) {
      best.value = value;
      best.witnesses.clear();
    }
    if (value == best.value) best.witnesses.emplace_back(pi, rho);
  };

  if (exhaustive_pairs) {
    std::vector<Permutation> all;
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    do {
      all.push_back(Permutation::unchecked(e));
    } while (std::next_permutation(e.begin(), e.end()));
    std::vector<std::vector<Permutation>> balls;
    balls.reserve(all.size());
    for (const auto& p : all) balls.push_back(sorted_ball_out(p, kind, guard));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        consider(all[i], all[j], sorted_intersection_size(balls[i], balls[j]));
      }
    }
    return best;
  }

  // Relabeling invariance: the maximum over all pairs equals the maximum
  // over pairs whose first element is the identity.
  const Permutation id = Permutation::identity(n);
  const std::vector<Permutation> id_ball = sorted_ball_out(id, kind, guard);
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  while (std::next_permutation(e.begin(), e.end())) {
    const Permutation rho = Permutation::unchecked(e);
    consider(id, rho, sorted_intersection_size(id_ball, sorted_ball_out(rho, kind, guard)));
  }
  return best;
}

std::string to_string(WitnessFamily family) {
  switch (family) {
    case WitnessFamily::CYCLIC_SHIFT: return "cyclic-shift";
    case WitnessFamily::ADJACENT_TRANSPOSITION: return "adjacent-transposition";
    case WitnessFamily::SWAP_LAST_TWO: return "swap-last-two";
  }
  return "cyclic-shift";
}

WitnessFamily parse_witness_family(std::string_view text) {
  if (text == "cyclic-shift") return WitnessFamily::CYCLIC_SHIFT;
  if (text == "adjacent-transposition") return WitnessFamily::ADJACENT_TRANSPOSITION;
  if (text == "swap-last-two") return WitnessFamily::SWAP_LAST_TWO;
  throw std::invalid_argument(
      "family must be 'cyclic-shift', 'adjacent-transposition' or 'swap-last-two'");
}

std::pair<Permutation, Permutation> witness_pair(int n, WitnessFamily family) {
  if (n < 2) throw std::invalid_argument("witness pairs require n >= 2");
  const Permutation id = Permutation::identity(n);
  std::vector<int> e = id.elements();
  switch (family) {
    case WitnessFamily::CYCLIC_SHIFT:
      std::rotate(e.begin(), e.begin() + 1, e.end());
      break;
    case WitnessFamily::ADJACENT_TRANSPOSITION:
      std::swap(e[0], e[1]);
      break;
    case WitnessFamily::SWAP_LAST_TWO:
      std::swap(e[e.size() - 2], e[e.size() - 1]);
      break;
  }
  return {id, Permutation::unchecked(std::move(e))};
}

bool family_matches_kind(WitnessFamily family, OpKind kind) {
  if (family == WitnessFamily::SWAP_LAST_TWO) return kind == OpKind::MTDRL;
  return kind == OpKind::TDRL;
}

NeighborSet neighbors(const Permutation& p, OpKind kind, Direction direction,
                      std::optional<int> k, int guard) {
  switch (direction) {
    case Direction::OUT: return ball_out(p, kind, k, guard);
    case Direction::IN: return ball_in(p, kind, k, guard);
    case Direction::REVERSIBLE: return reversible_set(p, kind, k, guard);
  }
  return ball_out(p, kind, k, guard);
}

}  // namespace tdrl
