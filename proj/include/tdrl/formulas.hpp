#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "tdrl/pattern.hpp"

namespace tdrl {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Formulas are cheap; only enumeration is expensive. Still cap the inputs.
inline constexpr int kFormulaMaxN = 10000;

enum class CountKind { S_OUT, S_IN, S_REV, N_MAX };

std::string to_string(CountKind c);
CountKind parse_count_kind(std::string_view text);

struct Quantity {
  CountKind count;
  OpKind kind;
};

// The exact closed-form value of the named count. k absent means the
// unbounded model (k = n); S_IN equals S_OUT for matching kind and k.
// N_MAX requires n >= 2 and rejects a window width.
BigInt closed_form(Quantity q, int n, std::optional<int> k = std::nullopt);

// floor(n! / S_out(n; k)): the cardinality ceiling for a code whose words
// stay uniquely recoverable after one width-k operation. Requires 2 <= k <= n.
BigInt sphere_packing_bound(int n, int k, OpKind kind);

// S_rev(n) / S_out(n) as an exact rational (unbounded model).
BigRational reversible_fraction(int n, OpKind kind);

BigInt factorial(int n);
BigInt binomial(int n, int r);

struct CountReport {
  Quantity quantity;
  int n = 0;
  std::optional<int> k;
  BigInt formula_value;
  std::optional<BigInt> enumerated_value;
  std::optional<bool> match;
};

CountReport make_count_report(Quantity q, int n, std::optional<int> k,
                              BigInt formula_value,
                              std::optional<BigInt> enumerated_value);

}  // namespace tdrl
