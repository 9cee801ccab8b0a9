#include "tdrl/codes.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tdrl {

namespace {

void check_code_shape(int n, int k) {
  if (n < 2) throw std::invalid_argument("codes require n >= 2");
  if (k < 2 || k > n) {
    throw std::out_of_range("code window width must satisfy 2 <= k <= n");
  }
}

}  // namespace

bool verify_code(const Code& c, int guard) {
  check_code_shape(c.n, c.k);
  std::set<Permutation> covered;
  for (const auto& word : c.words) {
    if (word.size() != c.n) {
      throw std::invalid_argument("codeword length differs from the code's n");
    }
    for (const auto& [p, w] : ball_out(word, c.kind, c.k, guard)) {
      if (!covered.insert(p).second) return false;  // some earlier ball has p
    }
  }
  return true;
}

Code greedy_code(int n, int k, OpKind kind, int guard) {
  check_code_shape(n, k);
  if (n > guard) {
    throw guard_error("n=" + std::to_string(n) +
                      " exceeds the code-search guard (n <= " +
                      std::to_string(guard) + ")");
  }
  Code code{n, k, kind, {}};
  std::set<Permutation> covered;
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    const Permutation cand = Permutation::unchecked(e);
    const NeighborSet ball = ball_out(cand, kind, k, guard);
    bool clash = false;
    for (const auto& [p, w] : ball) {
      if (covered.count(p)) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    code.words.push_back(cand);
    for (const auto& [p, w] : ball) covered.insert(p);
  } while (std::next_permutation(e.begin(), e.end()));

  const BigInt bound = sphere_packing_bound(n, k, kind);
  if (BigInt(code.words.size()) > bound) {
    throw std::logic_error("greedy code exceeds the packing bound");
  }
  return code;
}

Code read_code(std::istream& in) {
  std::string line;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      const auto hash = out.find('#');
      if (hash != std::string::npos) out.erase(hash);
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_content_line(line)) {
    throw std::invalid_argument("code file is empty");
  }
  std::istringstream header(line);
  int n = 0, k = 0;
  std::string kind_text;
  if (!(header >> n >> k >> kind_text)) {
    throw std::invalid_argument("code header must be 'n k kind'");
  }
  std::string extra;
  if (header >> extra) {
    throw std::invalid_argument("code header must be 'n k kind'");
  }
  Code code{n, k, parse_op_kind(kind_text), {}};
  check_code_shape(n, k);
  while (next_content_line(line)) {
    Permutation word = Permutation::parse(line);
    if (word.size() != n) {
      throw std::invalid_argument("codeword length differs from the header's n");
    }
    code.words.push_back(std::move(word));
  }
  if (code.words.empty()) {
    throw std::invalid_argument("code file lists no codewords");
  }
  return code;
}

void write_code(std::ostream& out, const Code& c) {
  out << c.n << ' ' << c.k << ' ' << to_string(c.kind) << '\n';
  for (const auto& word : c.words) out << word.str() << '\n';
}

CodeReport make_code_report(const Code& c) {
  CodeReport report;
  report.n = c.n;
  report.k = c.k;
  report.kind = c.kind;
  report.size = c.words.size();
  report.bound = sphere_packing_bound(c.n, c.k, c.kind);
  report.ratio = BigRational(BigInt(report.size), report.bound);
  return report;
}

}  // namespace tdrl
