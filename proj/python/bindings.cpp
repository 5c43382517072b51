// Thin bindings; structured values cross the boundary as JSON text and are
// decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jackideal/errors.hpp"
#include "jackideal/ideal.hpp"
#include "jackideal/jack.hpp"
#include "jackideal/json_io.hpp"
#include "jackideal/partition.hpp"
#include "jackideal/suites.hpp"

namespace py = pybind11;
using namespace jackideal;

namespace {

Partition part(const std::vector<int>& parts) { return Partition(parts); }

std::string dump(const json& j) { return j.dump(); }

json certificate(const MembershipCertificate& cert) {
  json combo = json::array();
  for (const auto& [lambda, c] : cert.combination) combo.push_back({{"lambda", lambda}, {"coeff", c}});
  json out{{"member", cert.member}, {"combination", combo}};
  if (cert.obstruction) out["obstruction"] = *cert.obstruction;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Jack polynomials at negative rational coupling and the ideals they span";

  py::register_exception<InvalidParameters>(m, "InvalidParameters", PyExc_ValueError);
  py::register_exception<DegreeOverflow>(m, "DegreeOverflow", PyExc_ValueError);

  m.def("beta_kr", [](int k, int r) { return beta_kr(k, r).to_string(); });
  m.def("is_admissible", [](const std::vector<int>& lambda, int k, int r, int n) {
    return is_admissible(part(lambda), k, r, static_cast<std::size_t>(n));
  });
  m.def("character", [](int k, int r, int n, int dmax) { return enumerate_admissible(k, r, n, dmax).character(); });
  m.def("admissible_json", [](int k, int r, int n, int dmax) { return dump(to_json(enumerate_admissible(k, r, n, dmax))); });
  m.def("jack_symbolic_json", [](const std::vector<int>& lambda, int n) { return dump(jack_symbolic(part(lambda), n)); });
  m.def("jack_specialized_json",
        [](const std::vector<int>& lambda, int n, int k, int r) { return dump(specialize(part(lambda), n, k, r)); });
  m.def("principal_specialization",
        [](const std::vector<int>& lambda, int n) { return principal_specialization(part(lambda), n).to_string(); });
  m.def("membership_json", [](const std::string& poly, int k, int r, int dmax) {
    const auto p = json::parse(poly).get<MSymPoly<BigRat>>();
    const auto basis = build_basis(k, r, p.nvars(), dmax);
    return dump(certificate(reduce_membership(p, basis)));
  });
  m.def("wheel_dimension", &wheel_dimension);

  m.def("verify_phi3_json", [](int r) { return dump(verify_phi3(r).to_json()); });
  m.def("verify_wheel_json", [](int k, int n, int dmax) { return dump(verify_wheel_theorem(k, n, dmax).to_json()); });
  m.def("verify_commutators_json", [](int n, int degree, int trials, std::uint64_t seed) {
    return dump(verify_commutators(n, degree, trials, seed).to_json());
  });
}
