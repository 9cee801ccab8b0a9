#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tdrl/codes.hpp"

using namespace tdrl;

namespace {

Permutation perm(std::initializer_list<int> e) {
  return Permutation(std::vector<int>(e));
}

}  // namespace

TEST_CASE("verify_code checks pairwise ball disjointness") {
  CHECK(verify_code({4, 2, OpKind::TDRL,
                     {Permutation::identity(4), perm({4, 3, 2, 1})}}));
  CHECK_FALSE(verify_code({4, 2, OpKind::TDRL,
                           {Permutation::identity(4), perm({2, 1, 3, 4})}}));
  CHECK(verify_code({4, 2, OpKind::TDRL, {Permutation::identity(4)}}));
  CHECK_FALSE(verify_code({4, 2, OpKind::TDRL,
                           {Permutation::identity(4), Permutation::identity(4)}}));
  CHECK_THROWS_AS(verify_code({4, 2, OpKind::TDRL, {perm({1, 2, 3})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_code({4, 1, OpKind::TDRL, {Permutation::identity(4)}}),
                  std::out_of_range);
}

TEST_CASE("greedy_code stays within the packing bound and verifies") {
  for (const OpKind kind : {OpKind::TDRL, OpKind::MTDRL}) {
    for (int n = 2; n <= 5; ++n) {
      for (int k = 2; k <= n; ++k) {
        const Code c = greedy_code(n, k, kind);
        CHECK(verify_code(c));
        CHECK(BigInt(c.words.size()) <= sphere_packing_bound(n, k, kind));
        CHECK_FALSE(c.words.empty());  // the identity always fits first
        CHECK(c.words.front() == Permutation::identity(n));
      }
    }
  }

  SUBCASE("published size ceilings") {
    CHECK(BigInt(greedy_code(4, 2, OpKind::TDRL).words.size()) <= 6);
    CHECK(BigInt(greedy_code(4, 4, OpKind::MTDRL).words.size()) <= 3);
    const Code tiny = greedy_code(2, 2, OpKind::TDRL);
    CHECK(tiny.words.size() == 1);
    CHECK(tiny.words.front() == Permutation::identity(2));
  }

  SUBCASE("deterministic") {
    const Code a = greedy_code(5, 3, OpKind::TDRL);
    const Code b = greedy_code(5, 3, OpKind::TDRL);
    CHECK(a.words == b.words);
  }

  CHECK_THROWS_AS(greedy_code(9, 2, OpKind::TDRL), guard_error);
  CHECK_THROWS_AS(greedy_code(4, 1, OpKind::TDRL), std::out_of_range);
}

TEST_CASE("code files round-trip") {
  const Code c = greedy_code(4, 2, OpKind::MTDRL);
  std::ostringstream out;
  write_code(out, c);

  std::istringstream in(out.str());
  const Code back = read_code(in);
  CHECK(back.n == c.n);
  CHECK(back.k == c.k);
  CHECK(back.kind == c.kind);
  CHECK(back.words == c.words);

  SUBCASE("format errors are rejected") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_code(empty), std::invalid_argument);
    std::istringstream bad_header("4 x tdrl\n1 2 3 4\n");
    CHECK_THROWS_AS(read_code(bad_header), std::invalid_argument);
    std::istringstream bad_kind("4 2 sideways\n1 2 3 4\n");
    CHECK_THROWS_AS(read_code(bad_kind), std::invalid_argument);
    std::istringstream short_word("4 2 tdrl\n1 2 3\n");
    CHECK_THROWS_AS(read_code(short_word), std::invalid_argument);
    std::istringstream no_words("4 2 tdrl\n# empty\n");
    CHECK_THROWS_AS(read_code(no_words), std::invalid_argument);
  }

  SUBCASE("comments and blank lines are tolerated") {
    std::istringstream commented(
        "# width-2 code\n"
        "4 2 tdrl\n"
        "\n"
        "1 2 3 4  # the identity\n"
        "4 3 2 1\n");
    const Code parsed = read_code(commented);
    CHECK(parsed.words.size() == 2);
    CHECK(verify_code(parsed));
  }
}

TEST_CASE("code reports relate size to the bound") {
  const Code c = greedy_code(4, 2, OpKind::TDRL);
  const CodeReport r = make_code_report(c);
  CHECK(r.n == 4);
  CHECK(r.k == 2);
  CHECK(r.bound == 6);
  CHECK(r.size == c.words.size());
  CHECK(r.ratio == BigRational(BigInt(r.size), BigInt(6)));
  CHECK(r.ratio <= BigRational(1));
}
