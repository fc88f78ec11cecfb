#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayley8p/oracle.hpp"
#include "cayley8p/report.hpp"

namespace py = pybind11;
using namespace cayley8p;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

GroupElement element(OddPrime p, const std::pair<long long, long long>& kl) {
  return GroupElement::make(p, kl.first, kl.second);
}

std::pair<int, int> pair_of(const GroupElement& g) { return {g.k(), g.l()}; }

py::list cycle_index_terms(long long p, const std::string& method) {
  const OddPrime q(p);
  if (method != "bruteforce" && method != "closed_form") throw std::invalid_argument("unknown method: " + method);
  const CycleIndexPoly poly = method == "bruteforce" ? cycle_index_bruteforce(q) : cycle_index_closed_form(q);
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::list out;
  for (const auto& [mono, coeff] : poly.terms()) {
    py::list exps;
    for (auto [k, e] : mono.exponents()) exps.append(py::make_tuple(k, e));
    out.append(py::make_tuple(fraction(to_py(numerator(coeff)), to_py(denominator(coeff))), exps));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counting Cayley graphs over T_{8p}";
  static py::exception<ConsistencyError> consistency(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("n_total", [](long long p) { return to_py(n_total(OddPrime(p))); }, py::arg("p"));
  m.def("n_circulant", [](long long p) { return to_py(n_circulant(OddPrime(p))); }, py::arg("p"));
  m.def("n_connected", [](long long p) { return to_py(n_connected(OddPrime(p))); }, py::arg("p"));
  m.def("burnside_count", [](long long p) { return to_py(burnside_count(OddPrime(p))); }, py::arg("p"));
  m.def("circulant_orbit_count", [](long long p) { return to_py(circulant_orbit_count(OddPrime(p))); },
        py::arg("p"));

  m.def(
      "orbit_census",
      [](long long p, int cap, unsigned workers) {
        OrbitCensus c;
        {
          py::gil_scoped_release release;
          c = orbit_census(OddPrime(p), {cap, workers});
        }
        py::dict d;
        d["total"] = c.total_orbits;
        d["connected"] = c.connected_orbits;
        d["a_only"] = c.a_only_orbits;
        d["b_touching"] = c.b_touching_orbits;
        return d;
      },
      py::arg("p"), py::arg("cap") = 5, py::arg("workers") = 1);

  m.def("cycle_index", &cycle_index_terms, py::arg("p"), py::arg("method") = "closed_form",
        "List of (Fraction, [(k, e), ...]) terms.");
  m.def(
      "evaluate_cycle_index",
      [](long long p, long long value, const std::string& method) {
        const OddPrime q(p);
        if (method == "bruteforce") return to_py(evaluate(cycle_index_bruteforce(q), value));
        if (method == "closed_form") return to_py(evaluate(cycle_index_closed_form(q), value));
        throw std::invalid_argument("unknown method: " + method);
      },
      py::arg("p"), py::arg("value"), py::arg("method") = "closed_form");

  m.def(
      "automorphisms",
      [](long long p) {
        std::vector<std::tuple<std::string, int, int>> out;
        for (const auto& f : enumerate_aut(OddPrime(p))) {
          out.emplace_back(f.family() == AutFamily::Sigma ? "sigma" : "tau", f.alpha().value(), f.beta());
        }
        return out;
      },
      py::arg("p"));

  m.def(
      "cycle_types",
      [](long long p) {
        const auto action = shared_action(OddPrime(p));
        std::vector<std::tuple<std::string, std::map<int, int>, std::map<int, int>>> out;
        for (std::size_t t = 0; t < action->order(); ++t) {
          const auto& f = action->automorphisms()[t];
          out.emplace_back(f.to_string(), cycle_type_of(action->permutations()[t]).counts(),
                           closed_form_cycle_type(f).counts());
        }
        return out;
      },
      py::arg("p"), "(automorphism, decomposed cycle type, closed-form cycle type) per automorphism.");

  m.def(
      "multiply",
      [](long long p, std::pair<long long, long long> x, std::pair<long long, long long> y) {
        const OddPrime q(p);
        return pair_of(element(q, x) * element(q, y));
      },
      py::arg("p"), py::arg("x"), py::arg("y"), "Elements are (k, l) for a^k b^l.");
  m.def(
      "inverse", [](long long p, std::pair<long long, long long> x) { return pair_of(inv(element(OddPrime(p), x))); },
      py::arg("p"), py::arg("x"));
  m.def(
      "element_order",
      [](long long p, std::pair<long long, long long> x) { return element_order(element(OddPrime(p), x)); },
      py::arg("p"), py::arg("x"));

  m.def(
      "is_connected", [](long long p, Mask mask) { return is_connected(ConnectionSet(OddPrime(p), mask)); },
      py::arg("p"), py::arg("mask"));

  m.def("count_report", [](long long p) { return json_to_py(to_json(make_count_report(OddPrime(p)))); },
        py::arg("p"));
  m.def(
      "verify",
      [](long long p, const std::string& level, int max_oracle_p, unsigned workers) {
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_verify(OddPrime(p), parse_level(level), {max_oracle_p, workers});
        }
        return json_to_py(to_json(r));
      },
      py::arg("p"), py::arg("level") = "quick", py::arg("max_oracle_p") = 5, py::arg("workers") = 1);
}
