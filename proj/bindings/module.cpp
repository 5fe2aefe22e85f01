#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "k3wall/certify.hpp"
#include "k3wall/lattice.hpp"
#include "k3wall/serialize.hpp"

namespace py = pybind11;
using namespace k3wall;

namespace {

Json min_genus_payload(std::int64_t r, std::int64_t k, std::int64_t g_max, std::int64_t horizon,
                       unsigned jobs) {
  const MinGenusResult res = min_genus(r, k, g_max, horizon, jobs);
  Json j;
  j["g_min"] = res.g_min ? Json(*res.g_min) : Json(nullptr);
  j["stable"] = res.stable;
  j["first_failure_after"] = res.first_failure_after ? Json(*res.first_failure_after) : Json(nullptr);
  j["horizon"] = res.horizon;
  j["checks"] = res.report ? to_json(*res.report) : Json::array();
  return j;
}

MukaiVector mukai(const std::array<std::int64_t, 3>& v) { return {v[0], v[1], v[2]}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact wall geometry and genus certification (JSON strings; see k3wall/__init__.py)";

  m.def("certify", [](std::int64_t r, std::int64_t k, std::int64_t g) {
    const CertificateReport rep = certify_genus(r, k, g);
    Json j;
    j["scenario"] = scenario_json(rep);
    j["checks"] = to_json(rep);
    j["overall"] = rep.overall ? "PASS" : "FAIL";
    return j.dump();
  }, py::arg("r"), py::arg("k"), py::arg("g"));

  m.def("min_genus", [](std::int64_t r, std::int64_t k, std::int64_t g_max, std::int64_t horizon,
                        unsigned jobs) {
    py::gil_scoped_release release;
    return min_genus_payload(r, k, g_max, horizon, jobs).dump();
  }, py::arg("r"), py::arg("k"), py::arg("g_max") = 200, py::arg("horizon") = 50, py::arg("jobs") = 1);

  m.def("diagram", [](std::int64_t r, std::int64_t k, std::int64_t g, int digits, int samples) {
    return diagram_json(make_scenario(r, k, Surface::from_genus(g)), {digits, samples}).dump();
  }, py::arg("r"), py::arg("k"), py::arg("g"), py::arg("digits") = 6, py::arg("samples") = 200);

  m.def("polygon", [](std::int64_t r, std::int64_t k, std::int64_t g, int digits) {
    return polygon_json(make_scenario(r, k, Surface::from_genus(g)), digits, Z2PrimeFormula::kVerbatim)
        .dump();
  }, py::arg("r"), py::arg("k"), py::arg("g"), py::arg("digits") = 6);

  m.def("compute_s", [](std::int64_t r, std::int64_t k, std::int64_t g) {
    return compute_s(r, k, Surface::from_genus(g));
  }, py::arg("r"), py::arg("k"), py::arg("g"));

  m.def("mukai_pairing", [](std::array<std::int64_t, 3> v, std::array<std::int64_t, 3> u, std::int64_t g) {
    return mukai_pairing(mukai(v), mukai(u), Surface::from_genus(g));
  }, py::arg("v"), py::arg("u"), py::arg("g"));
}
