#include "tdrl/recon.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tdrl {

ObservationSet::ObservationSet(const std::vector<Permutation>& observations) {
  if (observations.empty()) {
    throw std::invalid_argument("observation set must be nonempty");
  }
  obs_ = observations;
  std::sort(obs_.begin(), obs_.end());
  obs_.erase(std::unique(obs_.begin(), obs_.end()), obs_.end());
  n_ = obs_.front().size();
  for (const auto& p : obs_) {
    if (p.size() != n_) {
      throw std::invalid_argument("observations must all have the same length");
    }
  }
}

ObservationSet ObservationSet::read(std::istream& in) {
  std::vector<Permutation> obs;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    obs.push_back(Permutation::parse(line));
  }
  return ObservationSet(obs);
}

NeighborSet candidates(const ObservationSet& o, OpKind kind, int guard) {
  NeighborSet acc = ball_in(o.observations().front(), kind, std::nullopt, guard);
  for (std::size_t i = 1; i < o.size(); ++i) {
    acc = acc.intersect(ball_in(o.observations()[i], kind, std::nullopt, guard));
  }
  return acc;
}

ReconstructionResult reconstruct(const ObservationSet& o, OpKind kind, int guard) {
  ReconstructionResult result;
  result.candidates = candidates(o, kind, guard);
  result.unique = (result.candidates.size() == 1);
  const int n = o.n();
  if (kind == OpKind::TDRL && n >= 3) {
    // One more observation than the largest pairwise ball intersection.
    result.guaranteed_threshold = (std::int64_t{1} << (n - 1)) + 1;
  } else if (kind == OpKind::TDRL && n == 1) {
    result.guaranteed_threshold = 1;  // the one-element ball is a singleton
  }
  // MTDRL (any n) and TDRL at n = 2: distinct sources can share a whole
  // ball, so no observation count suffices.
  return result;
}

}  // namespace tdrl
