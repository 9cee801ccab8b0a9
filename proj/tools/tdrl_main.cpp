#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tdrl/codes.hpp"
#include "tdrl/formulas.hpp"
#include "tdrl/neighborhood.hpp"
#include "tdrl/recon.hpp"
#include "tdrl/render.hpp"

namespace {

using namespace tdrl;
using Json = nlohmann::ordered_json;

// Exit contract: 0 success, 1 domain or verification failure, 2 malformed
// input. Input construction throws UsageError; execution errors pass through.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Fn>
auto as_input(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

struct Guards {
  int ball = kBallGuardDefault;
  int inverse = kInverseSearchGuardDefault;
  int pairwise = kPairwiseGuardDefault;
  int code = kCodeGuardDefault;
};

Guards resolve_guards(std::optional<int> override_n) {
  Guards g;
  if (const char* env = std::getenv("TDRL_MAX_N")) {
    const std::string text(env);
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(text, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != text.size() || value < 1) {
      throw UsageError("TDRL_MAX_N must be a positive integer");
    }
    g.ball = value;
  }
  if (override_n) {
    g.ball = g.inverse = g.pairwise = g.code = *override_n;
    std::cerr << "warning: enumeration guards overridden to n <= " << *override_n
              << "\n";
  }
  return g;
}

// The enumeration oracle behind `count` and `verify`: counts on id(n), which
// relabeling invariance makes representative.
BigInt enumerate_quantity(CountKind q, OpKind kind, int n, std::optional<int> k,
                          const Guards& g) {
  const Permutation id = Permutation::identity(n);
  switch (q) {
    case CountKind::S_OUT:
      return BigInt(ball_out(id, kind, k, g.ball).size());
    case CountKind::S_IN:
      return BigInt(ball_in(id, kind, k, g.ball).size());
    case CountKind::S_REV:
      return BigInt(reversible_set(id, kind, k, g.ball).size());
    case CountKind::N_MAX:
      return BigInt(max_intersection(n, kind, false, g.pairwise).value);
  }
  throw std::logic_error("unreachable quantity");
}

struct VerifyRow {
  CountKind quantity;
  OpKind kind;
  int n = 0;
  std::optional<int> k;
  BigInt formula;
  BigInt enumerated;
  bool pass = false;
};

std::string render_verify_rows(const std::vector<VerifyRow>& rows, bool all_pass,
                               OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::TABLE: {
      std::size_t failures = 0;
      for (const auto& r : rows) {
        if (!r.pass) ++failures;
        out << (r.pass ? "PASS" : "FAIL") << ' ' << to_string(r.quantity) << ' '
            << to_string(r.kind) << " n=" << r.n << " k="
            << (r.k ? std::to_string(*r.k) : "-") << " formula=" << r.formula.str()
            << " enumerated=" << r.enumerated.str() << '\n';
      }
      out << "verified " << rows.size() << " rows: ";
      if (all_pass) {
        out << "all PASS\n";
      } else {
        out << failures << " FAIL\n";
      }
      return out.str();
    }
    case OutputFormat::CSV:
      out << "status,quantity,kind,n,k,formula,enumerated\n";
      for (const auto& r : rows) {
        out << (r.pass ? "PASS" : "FAIL") << ',' << to_string(r.quantity) << ','
            << to_string(r.kind) << ',' << r.n << ','
            << (r.k ? std::to_string(*r.k) : "") << ',' << r.formula.str() << ','
            << r.enumerated.str() << '\n';
      }
      return out.str();
    case OutputFormat::JSON: {
      Json j;
      j["rows"] = Json::array();
      for (const auto& r : rows) {
        j["rows"].push_back({{"status", r.pass ? "PASS" : "FAIL"},
                             {"quantity", to_string(r.quantity)},
                             {"kind", to_string(r.kind)},
                             {"n", r.n},
                             {"k", r.k ? Json(*r.k) : Json(nullptr)},
                             {"formula", r.formula.str()},
                             {"enumerated", r.enumerated.str()}});
      }
      j["all_pass"] = all_pass;
      return j.dump() + "\n";
    }
  }
  throw std::logic_error("unreachable output format");
}

std::string render_code_verify(const Code& c, bool valid, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::TABLE:
      out << "n: " << c.n << '\n';
      out << "k: " << c.k << '\n';
      out << "kind: " << to_string(c.kind) << '\n';
      out << "size: " << c.words.size() << '\n';
      out << "valid: " << (valid ? "true" : "false") << '\n';
      return out.str();
    case OutputFormat::CSV:
      out << "n,k,kind,size,valid\n";
      out << c.n << ',' << c.k << ',' << to_string(c.kind) << ','
          << c.words.size() << ',' << (valid ? "true" : "false") << '\n';
      return out.str();
    case OutputFormat::JSON: {
      Json j;
      j["n"] = c.n;
      j["k"] = c.k;
      j["kind"] = to_string(c.kind);
      j["size"] = c.words.size();
      j["valid"] = valid;
      return j.dump() + "\n";
    }
  }
  throw std::logic_error("unreachable output format");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TDRL/MTDRL rearrangement toolkit: balls, counts, codes"};
  app.require_subcommand(1);

  std::string format_text = "table";
  std::optional<int> max_n_override;
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--max-n-override", max_n_override,
                 "Raise every enumeration guard to this n (prints a warning)")
      ->check(CLI::PositiveNumber);

  const auto kind_values = CLI::IsMember({"tdrl", "mtdrl"});
  std::function<int()> action;

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "Apply one operation to a permutation");
  apply_cmd->fallthrough();
  std::string apply_kind = "tdrl";
  std::string apply_perm;
  std::string apply_pattern;
  std::optional<int> apply_start;
  std::optional<int> apply_len;
  apply_cmd->add_option("--kind", apply_kind, "Operation kind")->check(kind_values);
  apply_cmd->add_option("--perm", apply_perm, "Permutation, e.g. \"2 3 5 1 4\"")
      ->required();
  apply_cmd->add_option("--pattern", apply_pattern, "Binary pattern, e.g. 01101")
      ->required();
  auto* apply_start_opt =
      apply_cmd->add_option("--window-start", apply_start, "1-based window start")
          ->check(CLI::PositiveNumber);
  auto* apply_len_opt =
      apply_cmd->add_option("--window-len", apply_len, "Window width")
          ->check(CLI::PositiveNumber);
  apply_start_opt->needs(apply_len_opt);
  apply_len_opt->needs(apply_start_opt);
  apply_cmd->callback([&] {
    action = [&]() -> int {
      const OpKind kind = as_input([&] { return parse_op_kind(apply_kind); });
      const Permutation p = as_input([&] { return Permutation::parse(apply_perm); });
      const Pattern b = as_input([&] { return Pattern::from_string(apply_pattern); });
      Permutation result = [&] {
        if (apply_start) {
          if (b.size() != *apply_len) {
            throw std::invalid_argument(
                "pattern length must equal the window length");
          }
          return apply_windowed(p, WindowedOp{kind, *apply_start, b});
        }
        return apply(p, kind, b);
      }();
      std::cout << result.str() << '\n';
      return 0;
    };
  });

  // table
  auto* table_cmd = app.add_subcommand("table", "Reproduce a full pattern table");
  table_cmd->fallthrough();
  std::string table_which;
  table_cmd->add_option("which", table_which, "tdrl5 or mtdrl4")
      ->required()
      ->check(CLI::IsMember({"tdrl5", "mtdrl4"}));
  table_cmd->callback([&] {
    action = [&]() -> int {
      const TableWhich which =
          (table_which == "tdrl5") ? TableWhich::TDRL5 : TableWhich::MTDRL4;
      std::cout << render_table(which, parse_output_format(format_text));
      return 0;
    };
  });

  // count
  auto* count_cmd =
      app.add_subcommand("count", "Closed-form and/or enumerated neighborhood counts");
  count_cmd->fallthrough();
  std::string count_quantity;
  std::string count_kind = "tdrl";
  std::string count_mode = "formula";
  int count_n = 0;
  std::optional<int> count_k;
  count_cmd->add_option("--quantity", count_quantity, "Which count")
      ->required()
      ->check(CLI::IsMember({"sout", "sin", "srev", "nmax"}));
  count_cmd->add_option("--kind", count_kind, "Operation kind")->check(kind_values);
  count_cmd->add_option("-n,--n", count_n, "Permutation length")
      ->required()
      ->check(CLI::PositiveNumber);
  count_cmd->add_option("-k,--k", count_k, "Window width (default unbounded)")
      ->check(CLI::PositiveNumber);
  count_cmd->add_option("--mode", count_mode, "formula, enumerate or both")
      ->check(CLI::IsMember({"formula", "enumerate", "both"}));
  count_cmd->callback([&] {
    action = [&]() -> int {
      const Guards g = resolve_guards(max_n_override);
      const Quantity q{as_input([&] { return parse_count_kind(count_quantity); }),
                       as_input([&] { return parse_op_kind(count_kind); })};
      const BigInt formula = closed_form(q, count_n, count_k);
      std::optional<BigInt> enumerated;
      if (count_mode != "formula") {
        enumerated = enumerate_quantity(q.count, q.kind, count_n, count_k, g);
      }
      CountReport report = make_count_report(q, count_n, count_k, formula, enumerated);
      if (count_mode == "enumerate") report.match.reset();  // no claim checked
      std::cout << render_count_report(report, parse_output_format(format_text));
      if (count_mode == "both" && report.match && !*report.match) return 1;
      return 0;
    };
  });

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Compare every closed form against enumeration");
  verify_cmd->fallthrough();
  int verify_n_max = 0;
  std::vector<std::string> verify_kinds;
  std::vector<std::string> verify_quantities;
  verify_cmd->add_option("--n-max", verify_n_max, "Largest n to check")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--kinds", verify_kinds, "Operation kinds (default both)")
      ->check(kind_values);
  verify_cmd
      ->add_option("--quantities", verify_quantities, "Quantities (default all)")
      ->check(CLI::IsMember({"sout", "sin", "srev", "nmax"}));
  verify_cmd->callback([&] {
    action = [&]() -> int {
      const Guards g = resolve_guards(max_n_override);
      const bool quantities_explicit = !verify_quantities.empty();
      std::vector<CountKind> quantities;
      if (quantities_explicit) {
        for (const auto& text : verify_quantities) {
          quantities.push_back(as_input([&] { return parse_count_kind(text); }));
        }
      } else {
        quantities = {CountKind::S_OUT, CountKind::S_IN, CountKind::S_REV,
                      CountKind::N_MAX};
      }
      std::vector<OpKind> kinds;
      if (!verify_kinds.empty()) {
        for (const auto& text : verify_kinds) {
          kinds.push_back(as_input([&] { return parse_op_kind(text); }));
        }
      } else {
        kinds = {OpKind::TDRL, OpKind::MTDRL};
      }

      std::vector<VerifyRow> rows;
      bool all_pass = true;
      auto add_row = [&](CountKind q, OpKind kind, int n, std::optional<int> k) {
        VerifyRow row;
        row.quantity = q;
        row.kind = kind;
        row.n = n;
        row.k = k;
        row.formula = closed_form({q, kind}, n, k);
        row.enumerated = enumerate_quantity(q, kind, n, k, g);
        row.pass = (row.formula == row.enumerated);
        all_pass = all_pass && row.pass;
        rows.push_back(std::move(row));
      };

      for (CountKind q : quantities) {
        const int guard = (q == CountKind::N_MAX) ? g.pairwise : g.ball;
        int local_max = verify_n_max;
        if (local_max > guard) {
          if (quantities_explicit) {
            throw guard_error("--n-max=" + std::to_string(verify_n_max) +
                              " exceeds the enumeration guard for '" +
                              to_string(q) + "' (n <= " + std::to_string(guard) +
                              ")");
          }
          local_max = guard;
          std::cerr << "note: '" << to_string(q) << "' capped at n <= " << guard
                    << "; raise with --max-n-override\n";
        }
        for (OpKind kind : kinds) {
          for (int n = (q == CountKind::N_MAX) ? 2 : 1; n <= local_max; ++n) {
            if (q == CountKind::N_MAX) {
              add_row(q, kind, n, std::nullopt);
            } else {
              for (int k = 1; k <= n; ++k) add_row(q, kind, n, k);
            }
          }
        }
      }
      std::cout << render_verify_rows(rows, all_pass, parse_output_format(format_text));
      return all_pass ? 0 : 1;
    };
  });

  // neighbors
  auto* neighbors_cmd =
      app.add_subcommand("neighbors", "Enumerate a radius-1 neighborhood");
  neighbors_cmd->fallthrough();
  std::string neighbors_perm;
  std::string neighbors_kind = "tdrl";
  std::string neighbors_direction = "out";
  std::optional<int> neighbors_k;
  neighbors_cmd->add_option("--perm", neighbors_perm, "Center permutation")->required();
  neighbors_cmd->add_option("--kind", neighbors_kind, "Operation kind")
      ->check(kind_values);
  neighbors_cmd->add_option("--direction", neighbors_direction, "out, in or reversible")
      ->check(CLI::IsMember({"out", "in", "reversible"}));
  neighbors_cmd->add_option("-k,--k", neighbors_k, "Window width (default unbounded)")
      ->check(CLI::PositiveNumber);
  neighbors_cmd->callback([&] {
    action = [&]() -> int {
      const Guards g = resolve_guards(max_n_override);
      const Permutation p = as_input([&] { return Permutation::parse(neighbors_perm); });
      const OpKind kind = as_input([&] { return parse_op_kind(neighbors_kind); });
      const Direction direction =
          as_input([&] { return parse_direction(neighbors_direction); });
      const NeighborSet s = neighbors(p, kind, direction, neighbors_k, g.ball);
      std::cout << render_neighbor_set(s, p, kind, direction,
                                       neighbors_k.value_or(p.size()),
                                       parse_output_format(format_text));
      return 0;
    };
  });

  // intersect
  auto* intersect_cmd =
      app.add_subcommand("intersect", "Intersect the out-balls of two permutations");
  intersect_cmd->fallthrough();
  std::string intersect_pi;
  std::string intersect_rho;
  std::string intersect_kind = "tdrl";
  intersect_cmd->add_option("--pi", intersect_pi, "First permutation")->required();
  intersect_cmd->add_option("--rho", intersect_rho, "Second permutation")->required();
  intersect_cmd->add_option("--kind", intersect_kind, "Operation kind")
      ->check(kind_values);
  intersect_cmd->callback([&] {
    action = [&]() -> int {
      const Guards g = resolve_guards(max_n_override);
      const Permutation pi = as_input([&] { return Permutation::parse(intersect_pi); });
      const Permutation rho = as_input([&] { return Permutation::parse(intersect_rho); });
      const OpKind kind = as_input([&] { return parse_op_kind(intersect_kind); });
      const NeighborSet s = intersect_out(pi, rho, kind, g.ball);
      std::cout << render_neighbor_set(s, pi, kind, Direction::OUT, pi.size(),
                                       parse_output_format(format_text));
      return 0;
    };
  });

  // reconstruct
  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Recover sources consistent with observations");
  reconstruct_cmd->fallthrough();
  std::string reconstruct_file;
  std::string reconstruct_kind = "tdrl";
  reconstruct_cmd
      ->add_option("--obs-file", reconstruct_file,
                   "Observations, one permutation per line ('-' for stdin)")
      ->required();
  reconstruct_cmd->add_option("--kind", reconstruct_kind, "Operation kind")
      ->check(kind_values);
  reconstruct_cmd->callback([&] {
    action = [&]() -> int {
      const Guards g = resolve_guards(max_n_override);
      const OpKind kind = as_input([&] { return parse_op_kind(reconstruct_kind); });
      const ObservationSet obs = as_input([&] {
        if (reconstruct_file == "-") return ObservationSet::read(std::cin);
        std::ifstream in(reconstruct_file);
        if (!in) {
          throw std::invalid_argument("cannot open observation file: " +
                                      reconstruct_file);
        }
        return ObservationSet::read(in);
      });
      const ReconstructionResult r = reconstruct(obs, kind, g.ball);
      std::cout << render_reconstruction(r, kind, obs.size(),
                                         parse_output_format(format_text));
      return 0;
    };
  });

  // bound
  auto* bound_cmd =
      app.add_subcommand("bound", "Sphere-packing ceiling for code sizes");
  bound_cmd->fallthrough();
  int bound_n = 0;
  int bound_k = 0;
  std::string bound_kind = "tdrl";
  bound_cmd->add_option("-n,--n", bound_n, "Permutation length")
      ->required()
      ->check(CLI::PositiveNumber);
  bound_cmd->add_option("-k,--k", bound_k, "Window width")
      ->required()
      ->check(CLI::PositiveNumber);
  bound_cmd->add_option("--kind", bound_kind, "Operation kind")->check(kind_values);
  bound_cmd->callback([&] {
    action = [&]() -> int {
      const OpKind kind = as_input([&] { return parse_op_kind(bound_kind); });
      const BigInt b = sphere_packing_bound(bound_n, bound_k, kind);
      std::cout << render_bound(bound_n, bound_k, kind, b,
                                parse_output_format(format_text));
      return 0;
    };
  });

  // code-search
  auto* search_cmd =
      app.add_subcommand("code-search", "Greedy single-error-correcting code");
  search_cmd->fallthrough();
  int search_n = 0;
  int search_k = 0;
  std::string search_kind = "tdrl";
  std::string search_out;
  search_cmd->add_option("-n,--n", search_n, "Permutation length")
      ->required()
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("-k,--k", search_k, "Window width")
      ->required()
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--kind", search_kind, "Operation kind")->check(kind_values);
  search_cmd->add_option("--out", search_out, "Write the code to this file");
  search_cmd->callback([&] {
    action = [&]() -> int {
      const Guards g = resolve_guards(max_n_override);
      const OpKind kind = as_input([&] { return parse_op_kind(search_kind); });
      const Code code = greedy_code(search_n, search_k, kind, g.code);
      if (!verify_code(code, g.ball)) {
        throw std::runtime_error("greedy code failed verification");
      }
      if (!search_out.empty()) {
        std::ofstream out(search_out);
        if (!out) throw UsageError("cannot open output file: " + search_out);
        write_code(out, code);
      }
      std::cout << render_code_report(make_code_report(code),
                                      parse_output_format(format_text));
      return 0;
    };
  });

  // code-verify
  auto* cverify_cmd =
      app.add_subcommand("code-verify", "Check a code file for correctability");
  cverify_cmd->fallthrough();
  std::string cverify_file;
  cverify_cmd->add_option("--file", cverify_file, "Code file to check")->required();
  cverify_cmd->callback([&] {
    action = [&]() -> int {
      const Guards g = resolve_guards(max_n_override);
      const Code code = as_input([&] {
        std::ifstream in(cverify_file);
        if (!in) throw std::invalid_argument("cannot open code file: " + cverify_file);
        return read_code(in);
      });
      const bool valid = verify_code(code, g.ball);
      std::cout << render_code_verify(code, valid, parse_output_format(format_text));
      return valid ? 0 : 1;
    };
  });

  // witness
  auto* witness_cmd =
      app.add_subcommand("witness", "Named pair attaining the maximum intersection");
  witness_cmd->fallthrough();
  int witness_n = 0;
  std::string witness_kind = "tdrl";
  std::string witness_family = "cyclic-shift";
  witness_cmd->add_option("-n,--n", witness_n, "Permutation length")
      ->required()
      ->check(CLI::PositiveNumber);
  witness_cmd->add_option("--kind", witness_kind, "Operation kind")->check(kind_values);
  witness_cmd->add_option("--family", witness_family, "Witness construction")
      ->check(CLI::IsMember(
          {"cyclic-shift", "adjacent-transposition", "swap-last-two"}));
  witness_cmd->callback([&] {
    action = [&]() -> int {
      const Guards g = resolve_guards(max_n_override);
      const OpKind kind = as_input([&] { return parse_op_kind(witness_kind); });
      const WitnessFamily family =
          as_input([&] { return parse_witness_family(witness_family); });
      const auto [pi, rho] = witness_pair(witness_n, family);
      const NeighborSet s = intersect_out(pi, rho, kind, g.ball);
      WitnessRow row{family,
                     kind,
                     witness_n,
                     pi,
                     rho,
                     static_cast<std::int64_t>(s.size()),
                     closed_form({CountKind::N_MAX, kind}, witness_n),
                     family_matches_kind(family, kind)};
      std::cout << render_witness(row, parse_output_format(format_text));
      if (row.family_matches_kind && BigInt(row.intersection) != row.expected) {
        return 1;  // a proven attainment failed; should never happen
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const guard_error& e) {
    std::cerr << "error: " << e.what() << "; raise with --max-n-override\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
