// Python bindings for the rearrangement core. Exact big integers cross the
// boundary as Python ints, rationals as fractions.Fraction.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tdrl/codes.hpp"
#include "tdrl/formulas.hpp"
#include "tdrl/neighborhood.hpp"
#include "tdrl/recon.hpp"

namespace py = pybind11;
using namespace tdrl;

namespace {

py::object to_pyint(const BigInt& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_fraction(const BigRational& v) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(v.str());
}

py::list set_to_list(const NeighborSet& s) {
  py::list out;
  for (const auto& [element, witness] : s) {
    out.append(py::make_tuple(element, witness.start, witness.pattern));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "TDRL and mirror-TDRL rearrangement operations on permutations";
  m.attr("__version__") = "0.1.0";

  py::enum_<OpKind>(m, "OpKind")
      .value("TDRL", OpKind::TDRL)
      .value("MTDRL", OpKind::MTDRL);

  py::enum_<Direction>(m, "Direction")
      .value("OUT", Direction::OUT)
      .value("IN", Direction::IN)
      .value("REVERSIBLE", Direction::REVERSIBLE);

  py::enum_<WitnessFamily>(m, "WitnessFamily")
      .value("CYCLIC_SHIFT", WitnessFamily::CYCLIC_SHIFT)
      .value("ADJACENT_TRANSPOSITION", WitnessFamily::ADJACENT_TRANSPOSITION)
      .value("SWAP_LAST_TWO", WitnessFamily::SWAP_LAST_TWO);

  py::enum_<CountKind>(m, "CountKind")
      .value("S_OUT", CountKind::S_OUT)
      .value("S_IN", CountKind::S_IN)
      .value("S_REV", CountKind::S_REV)
      .value("N_MAX", CountKind::N_MAX);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("elements"))
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_static(
          "parse",
          [](const std::string& text) { return Permutation::parse(text); },
          py::arg("text"))
      .def("__len__", &Permutation::size)
      .def_property_readonly("elements", &Permutation::elements)
      .def("__str__", &Permutation::str)
      .def("__repr__",
           [](const Permutation& p) { return "Permutation(" + p.str() + ")"; })
      .def("__eq__",
           [](const Permutation& a, const Permutation& b) { return a == b; },
           py::is_operator())
      .def("__lt__",
           [](const Permutation& a, const Permutation& b) { return a < b; },
           py::is_operator())
      .def("__hash__", [](const Permutation& p) {
        return py::hash(py::tuple(py::cast(p.elements())));
      });

  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](const std::string& text) {
             return Pattern::from_string(text);
           }),
           py::arg("text"))
      .def_static("from_index", &Pattern::from_index, py::arg("value"),
                  py::arg("length"))
      .def_static("zeros", &Pattern::zeros, py::arg("length"))
      .def_static("ones", &Pattern::ones, py::arg("length"))
      .def("__len__", &Pattern::size)
      .def("bit", &Pattern::bit, py::arg("i"))
      .def_property_readonly("ones_count", &Pattern::ones_count)
      .def("__str__", &Pattern::str)
      .def("__repr__",
           [](const Pattern& b) { return "Pattern(\"" + b.str() + "\")"; })
      .def("__eq__",
           [](const Pattern& a, const Pattern& b) { return a == b; },
           py::is_operator())
      .def("__lt__", [](const Pattern& a, const Pattern& b) { return a < b; },
           py::is_operator())
      .def("__hash__",
           [](const Pattern& b) { return py::hash(py::str(b.str())); });

  m.def("is_valid_permutation", &is_valid_permutation, py::arg("elements"));
  m.def("is_unimodular", &is_unimodular, py::arg("p"));

  m.def(
      "apply",
      [](const Permutation& p, const Pattern& b, OpKind kind,
         std::optional<int> start) {
        if (start.has_value()) {
          return apply_windowed(p, WindowedOp{kind, *start, b});
        }
        return apply(p, kind, b);
      },
      py::arg("p"), py::arg("pattern"), py::arg("kind") = OpKind::TDRL,
      py::arg("start") = std::nullopt,
      "Apply one operation; `start` confines it to the window of the "
      "pattern's length beginning there (1-based).");
  m.def("relabel", &relabel, py::arg("sigma"), py::arg("p"));

  m.def("canonical_pattern", &canonical_pattern, py::arg("pattern"),
        py::arg("kind"));
  m.def("is_reversible_pattern", &is_reversible_pattern, py::arg("pattern"));
  m.def("inverse_reversible_pattern", &inverse_reversible_pattern,
        py::arg("pattern"));

  const auto ball_fn = [](NeighborSet (*fn)(const Permutation&, OpKind,
                                            std::optional<int>, int)) {
    return [fn](const Permutation& p, OpKind kind, std::optional<int> k,
                int guard) { return set_to_list(fn(p, kind, k, guard)); };
  };
  m.def("ball_out", ball_fn(&ball_out), py::arg("p"),
        py::arg("kind") = OpKind::TDRL, py::arg("k") = std::nullopt,
        py::arg("guard") = kBallGuardDefault,
        "All (result, start, pattern) triples one operation away from p.");
  m.def("ball_in", ball_fn(&ball_in), py::arg("p"),
        py::arg("kind") = OpKind::TDRL, py::arg("k") = std::nullopt,
        py::arg("guard") = kBallGuardDefault,
        "All (source, start, pattern) triples that reach p in one operation.");
  m.def("reversible_set", ball_fn(&reversible_set), py::arg("p"),
        py::arg("kind") = OpKind::TDRL, py::arg("k") = std::nullopt,
        py::arg("guard") = kBallGuardDefault);

  m.def(
      "intersect_out",
      [](const Permutation& p, const Permutation& q, OpKind kind, int guard) {
        return set_to_list(intersect_out(p, q, kind, guard));
      },
      py::arg("p"), py::arg("q"), py::arg("kind") = OpKind::TDRL,
      py::arg("guard") = kBallGuardDefault);

  m.def(
      "max_intersection",
      [](int n, OpKind kind, bool exhaustive_pairs, int guard) {
        const MaxIntersection r =
            max_intersection(n, kind, exhaustive_pairs, guard);
        return py::make_tuple(r.value, r.witnesses);
      },
      py::arg("n"), py::arg("kind") = OpKind::TDRL,
      py::arg("exhaustive_pairs") = false,
      py::arg("guard") = kPairwiseGuardDefault,
      "Returns (value, [(pi, rho), ...]) over all attaining pairs.");
  m.def("witness_pair", &witness_pair, py::arg("n"), py::arg("family"));
  m.def("family_matches_kind", &family_matches_kind, py::arg("family"),
        py::arg("kind"));

  m.def(
      "closed_form",
      [](CountKind count, OpKind kind, int n, std::optional<int> k) {
        return to_pyint(closed_form(Quantity{count, kind}, n, k));
      },
      py::arg("count"), py::arg("kind"), py::arg("n"),
      py::arg("k") = std::nullopt);
  m.def(
      "sphere_packing_bound",
      [](int n, int k, OpKind kind) {
        return to_pyint(sphere_packing_bound(n, k, kind));
      },
      py::arg("n"), py::arg("k"), py::arg("kind") = OpKind::TDRL);
  m.def(
      "reversible_fraction",
      [](int n, OpKind kind) { return to_fraction(reversible_fraction(n, kind)); },
      py::arg("n"), py::arg("kind") = OpKind::TDRL);
  m.def("factorial", [](int n) { return to_pyint(factorial(n)); }, py::arg("n"));
  m.def(
      "binomial", [](int n, int r) { return to_pyint(binomial(n, r)); },
      py::arg("n"), py::arg("r"));

  m.def(
      "reconstruct",
      [](const std::vector<Permutation>& observations, OpKind kind, int guard) {
        const ReconstructionResult r =
            reconstruct(ObservationSet(observations), kind, guard);
        py::dict out;
        out["candidates"] = py::cast(r.candidates.perms());
        out["unique"] = r.unique;
        out["guaranteed_threshold"] =
            r.guaranteed_threshold.has_value()
                ? py::cast(*r.guaranteed_threshold)
                : py::none().cast<py::object>();
        return out;
      },
      py::arg("observations"), py::arg("kind") = OpKind::TDRL,
      py::arg("guard") = kBallGuardDefault,
      "Candidates whose out-ball contains every observation, with the "
      "uniqueness verdict and the always-sufficient observation count "
      "(None when no count guarantees uniqueness).");

  m.def(
      "greedy_code",
      [](int n, int k, OpKind kind, int guard) {
        return greedy_code(n, k, kind, guard).words;
      },
      py::arg("n"), py::arg("k"), py::arg("kind") = OpKind::TDRL,
      py::arg("guard") = kCodeGuardDefault,
      "Lexicographically greedy code whose width-k out-balls are disjoint.");
  m.def(
      "verify_code",
      [](int n, int k, OpKind kind, const std::vector<Permutation>& words,
         int guard) { return verify_code(Code{n, k, kind, words}, guard); },
      py::arg("n"), py::arg("k"), py::arg("kind"), py::arg("words"),
      py::arg("guard") = kBallGuardDefault);

  py::register_exception<guard_error>(m, "GuardError", PyExc_RuntimeError);
}
