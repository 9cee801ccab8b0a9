#pragma once

#include <iosfwd>
#include <vector>

#include "tdrl/formulas.hpp"
#include "tdrl/neighborhood.hpp"

namespace tdrl {

inline constexpr int kCodeGuardDefault = 8;

// A set of codewords in Π(n) meant to survive one width-k operation:
// correctable iff the words' width-k out-balls are pairwise disjoint.
struct Code {
  int n = 0;
  int k = 0;
  OpKind kind = OpKind::TDRL;
  std::vector<Permutation> words;
};

// True iff every pair of distinct words has disjoint width-k out-balls.
bool verify_code(const Code& c, int guard = kBallGuardDefault);

// Scans Π(n) in lexicographic order, adding a word iff its ball is disjoint
// from the balls of all words added so far. Deterministic.
Code greedy_code(int n, int k, OpKind kind, int guard = kCodeGuardDefault);

// Code file format: header line "n k kind", then one codeword per line.
Code read_code(std::istream& in);
void write_code(std::ostream& out, const Code& c);

struct CodeReport {
  int n = 0;
  int k = 0;
  OpKind kind = OpKind::TDRL;
  std::size_t size = 0;
  BigInt bound;
  BigRational ratio;  // size / bound
};

CodeReport make_code_report(const Code& c);

}  // namespace tdrl
