#include "tdrl/render.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tdrl {

using Json = nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::TABLE;
  if (text == "csv") return OutputFormat::CSV;
  if (text == "json") return OutputFormat::JSON;
  throw std::invalid_argument("format must be 'table', 'csv' or 'json'");
}

namespace {

std::string dump(const Json& j) { return j.dump() + "\n"; }

// Rows of the model's full table: (permutation, pattern) in descending
// lexicographic pattern order, all-ones first.
std::vector<std::pair<Permutation, Pattern>> table_rows(TableWhich which) {
  const int n = (which == TableWhich::TDRL5) ? 5 : 4;
  const OpKind kind = (which == TableWhich::TDRL5) ? OpKind::TDRL : OpKind::MTDRL;
  const Permutation id = Permutation::identity(n);
  std::vector<std::pair<Permutation, Pattern>> rows;
  rows.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = (std::uint64_t{1} << n); mask-- > 0;) {
    const Pattern b = Pattern::from_index(mask, n);
    rows.emplace_back(apply(id, kind, b), b);
  }
  return rows;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_table(TableWhich which) {
  return render_table(which, OutputFormat::TABLE);
}

std::string render_table(TableWhich which, OutputFormat format) {
  const auto rows = table_rows(which);
  const int n = (which == TableWhich::TDRL5) ? 5 : 4;
  const OpKind kind = (which == TableWhich::TDRL5) ? OpKind::TDRL : OpKind::MTDRL;
  std::ostringstream out;
  switch (format) {
    case OutputFormat::TABLE:
      for (const auto& [perm, pattern] : rows) {
        out << perm.str() << "  " << pattern.str() << '\n';
      }
      return out.str();
    case OutputFormat::CSV:
      out << "permutation,pattern\n";
      for (const auto& [perm, pattern] : rows) {
        out << perm.str() << ',' << pattern.str() << '\n';
      }
      return out.str();
    case OutputFormat::JSON: {
      Json j;
      j["kind"] = to_string(kind);
      j["n"] = n;
      j["rows"] = Json::array();
      for (const auto& [perm, pattern] : rows) {
        j["rows"].push_back({{"permutation", perm.str()}, {"pattern", pattern.str()}});
      }
      return dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

std::string render_count_report(const CountReport& r, OutputFormat format) {
  const std::string quantity = to_string(r.quantity.count);
  const std::string kind = to_string(r.quantity.kind);
  const std::string formula = r.formula_value.str();
  std::ostringstream out;
  switch (format) {
    case OutputFormat::TABLE:
      out << "quantity: " << quantity << '\n';
      out << "kind: " << kind << '\n';
      out << "n: " << r.n << '\n';
      out << "k: " << (r.k ? std::to_string(*r.k) : "-") << '\n';
      out << "formula_value: " << formula << '\n';
      out << "enumerated_value: "
          << (r.enumerated_value ? r.enumerated_value->str() : "-") << '\n';
      out << "match: " << (r.match ? bool_text(*r.match) : "-") << '\n';
      return out.str();
    case OutputFormat::CSV:
      out << "quantity,kind,n,k,formula_value,enumerated_value,match\n";
      out << quantity << ',' << kind << ',' << r.n << ','
          << (r.k ? std::to_string(*r.k) : "") << ',' << formula << ','
          << (r.enumerated_value ? r.enumerated_value->str() : "") << ','
          << (r.match ? bool_text(*r.match) : "") << '\n';
      return out.str();
    case OutputFormat::JSON: {
      Json j;
      j["quantity"] = quantity;
      j["kind"] = kind;
      j["n"] = r.n;
      j["k"] = r.k ? Json(*r.k) : Json(nullptr);
      j["formula_value"] = formula;
      j["enumerated_value"] =
          r.enumerated_value ? Json(r.enumerated_value->str()) : Json(nullptr);
      j["match"] = r.match ? Json(*r.match) : Json(nullptr);
      return dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

std::string render_neighbor_set(const NeighborSet& s, const Permutation& center,
                                OpKind kind, Direction direction, int k,
                                OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::TABLE:
      for (const auto& [p, w] : s) out << p.str() << '\n';
      return out.str();
    case OutputFormat::CSV:
      out << "permutation,pattern,start\n";
      for (const auto& [p, w] : s) {
        out << p.str() << ',' << w.pattern.str() << ',' << w.start << '\n';
      }
      return out.str();
    case OutputFormat::JSON: {
      Json j;
      j["center"] = center.str();
      j["kind"] = to_string(kind);
      j["direction"] = to_string(direction);
      j["k"] = k;
      j["size"] = s.size();
      j["elements"] = Json::array();
      for (const auto& [p, w] : s) {
        j["elements"].push_back(
            {{"permutation", p.str()}, {"pattern", w.pattern.str()}, {"start", w.start}});
      }
      return dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

std::string render_reconstruction(const ReconstructionResult& r, OpKind kind,
                                  std::size_t observation_count,
                                  OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::TABLE:
      out << "observations: " << observation_count << '\n';
      out << "kind: " << to_string(kind) << '\n';
      out << "candidates: " << r.candidates.size() << '\n';
      out << "unique: " << bool_text(r.unique) << '\n';
      out << "guaranteed_threshold: "
          << (r.guaranteed_threshold ? std::to_string(*r.guaranteed_threshold)
                                     : "IMPOSSIBLE")
          << '\n';
      for (const auto& [p, w] : r.candidates) out << "candidate: " << p.str() << '\n';
      return out.str();
    case OutputFormat::CSV:
      out << "permutation,pattern,start\n";
      for (const auto& [p, w] : r.candidates) {
        out << p.str() << ',' << w.pattern.str() << ',' << w.start << '\n';
      }
      return out.str();
    case OutputFormat::JSON: {
      Json j;
      j["observations"] = observation_count;
      j["kind"] = to_string(kind);
      j["candidate_count"] = r.candidates.size();
      j["unique"] = r.unique;
      j["guaranteed_threshold"] =
          r.guaranteed_threshold ? Json(*r.guaranteed_threshold) : Json("IMPOSSIBLE");
      j["candidates"] = Json::array();
      for (const auto& [p, w] : r.candidates) j["candidates"].push_back(p.str());
      return dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

std::string render_bound(int n, int k, OpKind kind, const BigInt& bound,
                         OutputFormat format) {
  const BigInt ball = closed_form({CountKind::S_OUT, kind}, n, k);
  std::ostringstream out;
  switch (format) {
    case OutputFormat::TABLE:
      out << "n: " << n << '\n';
      out << "k: " << k << '\n';
      out << "kind: " << to_string(kind) << '\n';
      out << "ball_size: " << ball.str() << '\n';
      out << "bound: " << bound.str() << '\n';
      return out.str();
    case OutputFormat::CSV:
      out << "n,k,kind,ball_size,bound\n";
      out << n << ',' << k << ',' << to_string(kind) << ',' << ball.str() << ','
          << bound.str() << '\n';
      return out.str();
    case OutputFormat::JSON: {
      Json j;
      j["n"] = n;
      j["k"] = k;
      j["kind"] = to_string(kind);
      j["ball_size"] = ball.str();
      j["bound"] = bound.str();
      return dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

std::string render_code_report(const CodeReport& r, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::TABLE:
      out << "n: " << r.n << '\n';
      out << "k: " << r.k << '\n';
      out << "kind: " << to_string(r.kind) << '\n';
      out << "size: " << r.size << '\n';
      out << "bound: " << r.bound.str() << '\n';
      out << "ratio: " << r.ratio.str() << '\n';
      return out.str();
    case OutputFormat::CSV:
      out << "n,k,kind,size,bound,ratio\n";
      out << r.n << ',' << r.k << ',' << to_string(r.kind) << ',' << r.size << ','
          << r.bound.str() << ',' << r.ratio.str() << '\n';
      return out.str();
    case OutputFormat::JSON: {
      Json j;
      j["n"] = r.n;
      j["k"] = r.k;
      j["kind"] = to_string(r.kind);
      j["size"] = r.size;
      j["bound"] = r.bound.str();
      j["ratio"] = r.ratio.str();
      return dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

std::string render_witness(const WitnessRow& row, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::TABLE:
      out << "family: " << to_string(row.family) << '\n';
      out << "kind: " << to_string(row.kind) << '\n';
      out << "n: " << row.n << '\n';
      out << "pi: " << row.pi.str() << '\n';
      out << "rho: " << row.rho.str() << '\n';
      out << "intersection: " << row.intersection << '\n';
      out << "expected: " << row.expected.str() << '\n';
      out << "family_matches_kind: " << bool_text(row.family_matches_kind) << '\n';
      return out.str();
    case OutputFormat::CSV:
      out << "family,kind,n,pi,rho,intersection,expected,family_matches_kind\n";
      out << to_string(row.family) << ',' << to_string(row.kind) << ',' << row.n
          << ',' << row.pi.str() << ',' << row.rho.str() << ','
          << row.intersection << ',' << row.expected.str() << ','
          << bool_text(row.family_matches_kind) << '\n';
      return out.str();
    case OutputFormat::JSON: {
      Json j;
      j["family"] = to_string(row.family);
      j["kind"] = to_string(row.kind);
      j["n"] = row.n;
      j["pi"] = row.pi.str();
      j["rho"] = row.rho.str();
      j["intersection"] = row.intersection;
      j["expected"] = row.expected.str();
      j["family_matches_kind"] = row.family_matches_kind;
      return dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

}  // namespace tdrl
