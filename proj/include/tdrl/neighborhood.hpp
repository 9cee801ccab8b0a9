#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdrl/ops.hpp"

namespace tdrl {

// Enumeration guards: desk-scale ceilings, overridable per call.
inline constexpr int kBallGuardDefault = 20;           // 2^n pattern sweeps
inline constexpr int kInverseSearchGuardDefault = 10;  // n! candidate sweeps
inline constexpr int kPairwiseGuardDefault = 7;        // (n!)^2-ish pair sweeps

// Raised when a requested n exceeds the applicable enumeration guard.
class guard_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Direction { OUT, IN, REVERSIBLE };

std::string to_string(Direction d);
Direction parse_direction(std::string_view text);

// The operation that witnesses an element's membership: for out-balls, the
// op producing the element from the center; for in-balls, the op producing
// the center from the element. `start` is 1 for unbounded operations.
struct Witness {
  int start;
  Pattern pattern;
};

// A deduplicated set of equal-length permutations with one witness per
// element; iteration and serialization order is lexicographic ascending.
class NeighborSet {
 public:
  using Map = std::map<Permutation, Witness>;

  NeighborSet() = default;

  // Keeps the first witness inserted for each permutation.
  bool insert(Permutation p, Witness w);

  bool contains(const Permutation& p) const { return entries_.count(p) > 0; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  std::vector<Permutation> perms() const;

  bool same_elements(const NeighborSet& other) const;
  bool is_subset_of(const NeighborSet& other) const;

  // Elements present in both; witnesses are taken from *this.
  NeighborSet intersect(const NeighborSet& other) const;

 private:
  Map entries_;
};

// All permutations reachable from p by one operation of the given kind on
// one window of width k (every start position). k absent means k = n.
NeighborSet ball_out(const Permutation& p, OpKind kind,
                     std::optional<int> k = std::nullopt,
                     int guard = kBallGuardDefault);

// All permutations from which p is reachable by one operation, built by the
// interleaving construction: riffle merges of p's prefix and suffix (suffix
// reversed for MTDRL) over all split points, per window.
NeighborSet ball_in(const Permutation& p, OpKind kind,
                    std::optional<int> k = std::nullopt,
                    int guard = kBallGuardDefault);

// Independent fallback: scans all of Π(n) for candidates whose out-ball
// contains p. Used to cross-check ball_in on small instances.
NeighborSet ball_in_exhaustive(const Permutation& p, OpKind kind,
                               std::optional<int> k = std::nullopt,
                               int guard = kInverseSearchGuardDefault);

// ball_out ∩ ball_in; witnesses are the producing (out) patterns.
NeighborSet reversible_set(const Permutation& p, OpKind kind,
                           std::optional<int> k = std::nullopt,
                           int guard = kBallGuardDefault);

// Unbounded out-ball intersection of two equal-length permutations.
NeighborSet intersect_out(const Permutation& p, const Permutation& q,
                          OpKind kind, int guard = kBallGuardDefault);

struct MaxIntersection {
  std::int64_t value;
  // Every pair attaining the maximum, in search order.
  std::vector<std::pair<Permutation, Permutation>> witnesses;
};

// Exact maximum of |intersect_out| over unordered pairs of distinct
// permutations. By relabeling invariance the first element may be fixed to
// the identity, which is the default search; `exhaustive_pairs` scans every
// pair instead.
MaxIntersection max_intersection(int n, OpKind kind,
                                 bool exhaustive_pairs = false,
                                 int guard = kPairwiseGuardDefault);

enum class WitnessFamily { CYCLIC_SHIFT, ADJACENT_TRANSPOSITION, SWAP_LAST_TWO };

std::string to_string(WitnessFamily family);
WitnessFamily parse_witness_family(std::string_view text);

// (id(n), transformed id(n)) for the named family. CYCLIC_SHIFT and
// ADJACENT_TRANSPOSITION attain the maximum TDRL intersection; SWAP_LAST_TWO
// attains the MTDRL one. A mismatched kind is not an error, just a pair with
// no attainment claim; family_matches_kind reports which case holds.
std::pair<Permutation, Permutation> witness_pair(int n, WitnessFamily family);

bool family_matches_kind(WitnessFamily family, OpKind kind);

// Dispatch on Direction.
NeighborSet neighbors(const Permutation& p, OpKind kind, Direction direction,
                      std::optional<int> k = std::nullopt,
                      int guard = kBallGuardDefault);

}  // namespace tdrl
