#include "tdrl/formulas.hpp"

#include <stdexcept>

namespace tdrl {

std::string to_string(CountKind c) {
  switch (c) {
    case CountKind::S_OUT: return "sout";
    case CountKind::S_IN: return "sin";
    case CountKind::S_REV: return "srev";
    case CountKind::N_MAX: return "nmax";
  }
  return "sout";
}

CountKind parse_count_kind(std::string_view text) {
  if (text == "sout") return CountKind::S_OUT;
  if (text == "sin") return CountKind::S_IN;
  if (text == "srev") return CountKind::S_REV;
  if (text == "nmax") return CountKind::N_MAX;
  throw std::invalid_argument("quantity must be 'sout', 'sin', 'srev' or 'nmax'");
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial requires n >= 0");
  if (n > kFormulaMaxN) throw std::invalid_argument("factorial input too large");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int r) {
  if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt out = 1;
  for (int i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;  // exact: out is C(n-r+i, i) after each step
  }
  return out;
}

namespace {

BigInt pow2(int e) { return BigInt(1) << e; }

void check_range(int n, std::optional<int> k) {
  if (n < 1 || n > kFormulaMaxN) {
    throw std::invalid_argument("n must satisfy 1 <= n <= " +
                                std::to_string(kFormulaMaxN));
  }
  if (k && (*k < 1 || *k > n)) {
    throw std::out_of_range("window width must satisfy 1 <= k <= n");
  }
}

}  // namespace

BigInt closed_form(Quantity q, int n, std::optional<int> k) {
  check_range(n, k);
  if (q.count == CountKind::N_MAX) {
    if (k) {
      throw std::invalid_argument("the pairwise maximum has no windowed form");
    }
    if (n < 2) {
      throw std::invalid_argument("the pairwise maximum requires n >= 2");
    }
    return pow2(n - 1);  // same value for both operation kinds
  }

  // The windowed formulas at k = n reduce to the unbounded ones, so a single
  // path suffices.
  const int w = k.value_or(n);
  const BigInt half = pow2(w - 1) - 1;  // 2^(k-1) - 1
  switch (q.count) {
    case CountKind::S_OUT:
    case CountKind::S_IN:
      if (q.kind == OpKind::TDRL) {
        return BigInt(n - w + 2) * half - w + 2;
      }
      return BigInt(n - w + 1) * half + 1;
    case CountKind::S_REV:
      if (q.kind == OpKind::TDRL) {
        return BigInt(n - w + 1) * binomial(w, 2) + binomial(w, 3) + 1;
      }
      return BigInt(n - w + 1) * (w - 1) + 1;
    case CountKind::N_MAX:
      break;  // handled above
  }
  throw std::logic_error("unreachable count kind");
}

BigInt sphere_packing_bound(int n, int k, OpKind kind) {
  if (n < 2 || n > kFormulaMaxN) {
    throw std::invalid_argument("bound requires 2 <= n <= " +
                                std::to_string(kFormulaMaxN));
  }
  if (k < 2 || k > n) {
    throw std::out_of_range("bound requires 2 <= k <= n");
  }
  const BigInt ball = closed_form({CountKind::S_OUT, kind}, n, k);
  return factorial(n) / ball;  // positive operands: division floors
}

BigRational reversible_fraction(int n, OpKind kind) {
  check_range(n, std::nullopt);
  const BigInt rev = closed_form({CountKind::S_REV, kind}, n);
  const BigInt out = closed_form({CountKind::S_OUT, kind}, n);
  return BigRational(rev, out);
}

CountReport make_count_report(Quantity q, int n, std::optional<int> k,
                              BigInt formula_value,
                              std::optional<BigInt> enumerated_value) {
  CountReport report;
  report.quantity = q;
  report.n = n;
  report.k = k;
  report.formula_value = std::move(formula_value);
  report.enumerated_value = std::move(enumerated_value);
  if (report.enumerated_value) {
    report.match = (*report.enumerated_value == report.formula_value);
  }
  return report;
}

}  // namespace tdrl
