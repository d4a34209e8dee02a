#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gql/census.hpp"
#include "gql/classifier.hpp"
#include "gql/integer_poly.hpp"
#include "gql/json_io.hpp"
#include "gql/quartic.hpp"
#include "gql/riemann_hurwitz.hpp"
#include "gql/transpositions.hpp"

namespace py = pybind11;
using namespace gql;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string classify(const std::string& group, int genus, std::optional<int> degree) {
  const PermGroup g = parse_group_spec(group, degree);
  Json j = to_json(classify_quotient(g, genus));
  j["zariski"] = to_json(zariski_obstruction(g, genus));
  return j.dump();
}

std::string group_info(const std::string& group, std::optional<int> degree) {
  const PermGroup g = parse_group_spec(group, degree);
  Json j = group_to_json(g);
  j["order"] = g.order();
  j["transitive"] = g.is_transitive();
  j["solvable"] = is_solvable(g);
  auto trans = Json::array();
  for (auto [a, b] : transpositions(g)) trans.push_back(Json::array({a + 1, b + 1}));
  j["transpositions"] = trans;
  return j.dump();
}

bool contains(const std::string& group, const std::string& element, std::optional<int> degree) {
  const PermGroup g = parse_group_spec(group, degree);
  return g.contains(parse_permutation(element, g.degree()));
}

std::string census(const std::string& fixtures_json) {
  auto out = Json::array();
  for (const auto& r : run_census(fixtures_from_json(Json::parse(fixtures_json)))) out.push_back(to_json(r));
  return out.dump();
}

std::string quartic_flexes(const std::string& curve_json, std::optional<std::uint64_t> prime,
                           std::optional<int> ext, std::uint64_t seed, bool residuals) {
  FlexOptions opt;
  opt.prime = prime;
  opt.ext = ext;
  opt.seed = seed;
  opt.residuals = residuals;
  return to_json(analyze_flexes(curve_from_json(Json::parse(curve_json)), opt)).dump();
}

std::string quartic_eliminant(const std::string& curve_json, std::uint64_t seed) {
  const PlaneCurve curve = curve_from_json(Json::parse(curve_json));
  const auto report = residual_eliminant(curve, seed);
  std::vector<RootCheck> checks;
  for (auto p : good_primes(curve, report.form, 100, 2))
    checks.push_back(check_eliminant_roots(curve, report, p, seed));
  return to_json(report, checks).dump();
}

std::string certify(const std::vector<std::string>& coeffs, std::uint64_t bound) {
  return to_json(certify_irreducible_over_Q(zpoly_from_strings(coeffs), certificate_primes(bound))).dump();
}

}  // namespace

PYBIND11_MODULE(_gql, m) {
  m.doc() = "Quotients of curve powers, Riemann-Hurwitz and plane quartic flexes";

  auto base = py::register_exception<Error>(m, "GqlError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "PreconditionError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  m.def("classify", &classify, py::arg("group"), py::arg("genus"), py::arg("degree") = py::none());
  m.def("group_info", &group_info, py::arg("group"), py::arg("degree") = py::none());
  m.def("contains", &contains, py::arg("group"), py::arg("element"), py::arg("degree") = py::none());
  m.def("census", &census, py::arg("fixtures_json"));
  m.def("ramification_degree", &ramification_degree, py::arg("degree"), py::arg("genus_source"),
        py::arg("genus_base"));
  m.def("genus_from_cover", &genus_from_cover, py::arg("degree"), py::arg("genus_base"),
        py::arg("ramification"));
  m.def("sym_power_kind", [](int genus, int n) { return std::string(to_string(sym_power_kind(genus, n))); },
        py::arg("genus"), py::arg("n"));
  m.def("quartic_flexes", &quartic_flexes, py::arg("curve_json"), py::arg("prime") = py::none(),
        py::arg("ext") = py::none(), py::arg("seed") = 0, py::arg("residuals") = false);
  m.def("quartic_eliminant", &quartic_eliminant, py::arg("curve_json"), py::arg("seed") = 0);
  m.def("certify_irreducible", &certify, py::arg("coeffs"), py::arg("bound") = 300);
}
