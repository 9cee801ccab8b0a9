#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tdrl/render.hpp"

using namespace tdrl;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing data file: ", path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string data_path(const char* name) {
  return std::string(TDRL_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("rendered tables are byte-identical to the transcribed ones") {
  CHECK(render_table(TableWhich::TDRL5) == slurp(data_path("table_tdrl5.txt")));
  CHECK(render_table(TableWhich::MTDRL4) == slurp(data_path("table_mtdrl4.txt")));
}

TEST_CASE("table JSON carries the same rows") {
  const auto j = nlohmann::json::parse(render_table(TableWhich::MTDRL4, OutputFormat::JSON));
  CHECK(j["kind"] == "mtdrl");
  CHECK(j["n"] == 4);
  REQUIRE(j["rows"].size() == 16);
  CHECK(j["rows"][0]["pattern"] == "1111");
  CHECK(j["rows"][0]["permutation"] == "1 2 3 4");
  CHECK(j["rows"][15]["pattern"] == "0000");
  CHECK(j["rows"][15]["permutation"] == "4 3 2 1");
}

TEST_CASE("count report rendering") {
  const CountReport r = make_count_report({CountKind::S_REV, OpKind::TDRL}, 5,
                                          std::nullopt, BigInt(21), BigInt(21));
  CHECK(render_count_report(r, OutputFormat::TABLE) ==
        "quantity: srev\n"
        "kind: tdrl\n"
        "n: 5\n"
        "k: -\n"
        "formula_value: 21\n"
        "enumerated_value: 21\n"
        "match: true\n");
  CHECK(render_count_report(r, OutputFormat::CSV) ==
        "quantity,kind,n,k,formula_value,enumerated_value,match\n"
        "srev,tdrl,5,,21,21,true\n");

  const auto j = nlohmann::json::parse(render_count_report(r, OutputFormat::JSON));
  CHECK(j["quantity"] == "srev");
  CHECK(j["kind"] == "tdrl");
  CHECK(j["n"] == 5);
  CHECK(j["k"].is_null());
  CHECK(j["formula_value"] == "21");
  CHECK(j["enumerated_value"] == "21");
  CHECK(j["match"] == true);
}

TEST_CASE("neighbor set rendering") {
  const Permutation id3 = Permutation::identity(3);
  const NeighborSet s = ball_out(id3, OpKind::TDRL);
  CHECK(render_neighbor_set(s, id3, OpKind::TDRL, Direction::OUT, 3,
                            OutputFormat::TABLE) ==
        "1 2 3\n"
        "1 3 2\n"
        "2 1 3\n"
        "2 3 1\n"
        "3 1 2\n");

  const std::string csv =
      render_neighbor_set(s, id3, OpKind::TDRL, Direction::OUT, 3, OutputFormat::CSV);
  CHECK(csv.substr(0, 25) == "permutation,pattern,start");

  const auto j = nlohmann::json::parse(
      render_neighbor_set(s, id3, OpKind::TDRL, Direction::OUT, 3, OutputFormat::JSON));
  CHECK(j["center"] == "1 2 3");
  CHECK(j["size"] == 5);
  REQUIRE(j["elements"].size() == 5);
  for (const auto& e : j["elements"]) {
    const Permutation element = Permutation::parse(e["permutation"].get<std::string>());
    const Pattern witness = Pattern::from_string(e["pattern"].get<std::string>());
    CHECK(apply_windowed(id3, {OpKind::TDRL, e["start"].get<int>(), witness}) ==
          element);
  }
}

TEST_CASE("reconstruction rendering marks impossible guarantees") {
  const ObservationSet o(ball_out(Permutation::identity(4), OpKind::MTDRL).perms());
  const ReconstructionResult r = reconstruct(o, OpKind::MTDRL);
  const std::string table =
      render_reconstruction(r, OpKind::MTDRL, o.size(), OutputFormat::TABLE);
  CHECK(table.find("guaranteed_threshold: IMPOSSIBLE\n") != std::string::npos);
  CHECK(table.find("unique: false\n") != std::string::npos);

  const auto j = nlohmann::json::parse(
      render_reconstruction(r, OpKind::MTDRL, o.size(), OutputFormat::JSON));
  CHECK(j["guaranteed_threshold"] == "IMPOSSIBLE");
  CHECK(j["candidate_count"] == j["candidates"].size());

  const ObservationSet o2({Permutation::identity(3)});
  const ReconstructionResult r2 = reconstruct(o2, OpKind::TDRL);
  const auto j2 = nlohmann::json::parse(
      render_reconstruction(r2, OpKind::TDRL, o2.size(), OutputFormat::JSON));
  CHECK(j2["guaranteed_threshold"] == 5);
}

TEST_CASE("bound and code report rendering") {
  CHECK(render_bound(4, 2, OpKind::TDRL, sphere_packing_bound(4, 2, OpKind::TDRL),
                     OutputFormat::TABLE) ==
        "n: 4\n"
        "k: 2\n"
        "kind: tdrl\n"
        "ball_size: 4\n"
        "bound: 6\n");

  const CodeReport r = make_code_report(greedy_code(4, 2, OpKind::TDRL));
  const auto j = nlohmann::json::parse(render_code_report(r, OutputFormat::JSON));
  CHECK(j["n"] == 4);
  CHECK(j["bound"] == "6");
  CHECK(j["size"].get<std::size_t>() == r.size);
}

TEST_CASE("witness rendering flags family/kind mismatches") {
  const auto [pi, rho] = witness_pair(4, WitnessFamily::SWAP_LAST_TWO);
  WitnessRow row{WitnessFamily::SWAP_LAST_TWO,
                 OpKind::MTDRL,
                 4,
                 pi,
                 rho,
                 8,
                 BigInt(8),
                 true};
  const auto j = nlohmann::json::parse(render_witness(row, OutputFormat::JSON));
  CHECK(j["family"] == "swap-last-two");
  CHECK(j["intersection"] == 8);
  CHECK(j["expected"] == "8");
  CHECK(j["family_matches_kind"] == true);

  const std::string table = render_witness(row, OutputFormat::TABLE);
  CHECK(table.find("rho: 1 2 4 3\n") != std::string::npos);
}

TEST_CASE("format names parse") {
  CHECK(parse_output_format("table") == OutputFormat::TABLE);
  CHECK(parse_output_format("csv") == OutputFormat::CSV);
  CHECK(parse_output_format("json") == OutputFormat::JSON);
  CHECK_THROWS_AS(parse_output_format("yaml"), std::invalid_argument);
}
