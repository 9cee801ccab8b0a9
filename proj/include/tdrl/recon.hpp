#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tdrl/neighborhood.hpp"

namespace tdrl {

// Distinct noisy observations of an unknown source permutation; duplicates
// collapse on ingestion. Nonempty, all of equal length.
class ObservationSet {
 public:
  explicit ObservationSet(const std::vector<Permutation>& observations);

  // One permutation per line; blank lines and '#' comments ignored.
  static ObservationSet read(std::istream& in);

  const std::vector<Permutation>& observations() const { return obs_; }
  int n() const { return n_; }
  std::size_t size() const { return obs_.size(); }

 private:
  std::vector<Permutation> obs_;  // deduplicated, sorted
  int n_;
};

struct ReconstructionResult {
  NeighborSet candidates;
  bool unique = false;
  // Number of distinct observations that always forces a unique candidate;
  // absent when no count within one ball can (the MTDRL case, and n = 2).
  std::optional<std::int64_t> guaranteed_threshold;
};

// All permutations whose out-ball contains every observation, computed by
// intersecting the observations' in-balls.
NeighborSet candidates(const ObservationSet& o, OpKind kind,
                       int guard = kBallGuardDefault);

ReconstructionResult reconstruct(const ObservationSet& o, OpKind kind,
                                 int guard = kBallGuardDefault);

}  // namespace tdrl
