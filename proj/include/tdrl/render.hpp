#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tdrl/codes.hpp"
#include "tdrl/formulas.hpp"
#include "tdrl/neighborhood.hpp"
#include "tdrl/recon.hpp"

namespace tdrl {

enum class OutputFormat { TABLE, CSV, JSON };

OutputFormat parse_output_format(std::string_view text);

enum class TableWhich { TDRL5, MTDRL4 };

// The full 2^n-row pattern table for the named model: one row per pattern in
// descending lexicographic pattern order (all-ones first), each row the
// resulting permutation, two spaces, the pattern.
std::string render_table(TableWhich which);
std::string render_table(TableWhich which, OutputFormat format);

std::string render_count_report(const CountReport& r, OutputFormat format);

// One permutation per line for TABLE; permutation,pattern,start columns for
// CSV; an object with metadata plus an elements array for JSON.
std::string render_neighbor_set(const NeighborSet& s, const Permutation& center,
                                OpKind kind, Direction direction, int k,
                                OutputFormat format);

std::string render_reconstruction(const ReconstructionResult& r, OpKind kind,
                                  std::size_t observation_count,
                                  OutputFormat format);

std::string render_bound(int n, int k, OpKind kind, const BigInt& bound,
                         OutputFormat format);

std::string render_code_report(const CodeReport& r, OutputFormat format);

struct WitnessRow {
  WitnessFamily family;
  OpKind kind;
  int n = 0;
  Permutation pi;
  Permutation rho;
  std::int64_t intersection = 0;
  BigInt expected;
  bool family_matches_kind = true;
};

std::string render_witness(const WitnessRow& row, OutputFormat format);

}  // namespace tdrl
