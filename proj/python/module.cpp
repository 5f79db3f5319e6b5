#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "newtcut/report.hpp"

namespace py = pybind11;
using namespace newtcut;

namespace {

py::object json_to_py(const json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

PipelineOptions make_options(const std::string& drop, const std::string& mode,
                             const std::vector<long long>& primes, long long budget,
                             unsigned seed) {
  PipelineOptions opt;
  opt.drop = drop;
  if (mode == "compatible") opt.mode = BMode::compatible;
  else if (mode == "general") opt.mode = BMode::general;
  else if (mode != "consistent") throw input_error("unknown mode: " + mode);
  if (!primes.empty()) opt.oracle.primes = primes;
  if (budget > 0) opt.oracle.budget = budget;
  opt.seed = seed;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_newtcut, m) {
  m.doc() = "Newton polyhedra, B1-facet cuts, multi-weighted blow-ups and candidate poles";

  py::register_exception<input_error>(m, "InputError");
  py::register_exception<internal_error>(m, "InternalError");

  m.def(
      "analyze",
      [](const std::string& poly, int n) {
        return json_to_py(report_analyze(parse_polynomial(poly, n)));
      },
      py::arg("poly"), py::arg("n"),
      "Newton polyhedron, normal fan and facet table of a polynomial.");

  m.def(
      "b1",
      [](const std::string& poly, int n) {
        return json_to_py(report_b1(parse_polynomial(poly, n)));
      },
      py::arg("poly"), py::arg("n"),
      "B1 certificates and per-slope consistent/compatible decisions.");

  m.def(
      "bcut",
      [](const std::string& poly, int n, const std::string& drop, const std::string& mode) {
        return json_to_py(
            report_bcut(parse_polynomial(poly, n), make_options(drop, mode, {}, 0, 0)));
      },
      py::arg("poly"), py::arg("n"), py::arg("drop") = "auto", py::arg("mode") = "consistent",
      "The B-cut polyhedron, its normal fan, and the old/new cone table.");

  m.def(
      "blowup",
      [](const std::string& poly, int n, const std::string& drop, const std::string& mode) {
        return json_to_py(
            report_blowup(parse_polynomial(poly, n), make_options(drop, mode, {}, 0, 0)));
      },
      py::arg("poly"), py::arg("n"), py::arg("drop") = "auto", py::arg("mode") = "consistent",
      "Cox presentation, proper transform and relative canonical multiplicities.");

  m.def(
      "verify",
      [](const std::string& poly, int n, const std::string& drop, const std::string& mode,
         const std::vector<long long>& primes, long long budget, unsigned seed) {
        return json_to_py(report_verify(parse_polynomial(poly, n),
                                        make_options(drop, mode, primes, budget, seed)));
      },
      py::arg("poly"), py::arg("n"), py::arg("drop") = "auto", py::arg("mode") = "consistent",
      py::arg("primes") = std::vector<long long>{}, py::arg("budget") = 0, py::arg("seed") = 0,
      "Simple-normal-crossings certificate for the multi-weighted blow-up.");

  m.def(
      "poles",
      [](const std::string& poly, int n, const std::string& drop, const std::string& mode) {
        return json_to_py(
            report_poles(parse_polynomial(poly, n), make_options(drop, mode, {}, 0, 0)));
      },
      py::arg("poly"), py::arg("n"), py::arg("drop") = "auto", py::arg("mode") = "consistent",
      "Candidate poles, removable slope classes, and the reduced candidate set.");

  m.def(
      "ztop",
      [](const py::object& strata) {
        py::module_ pyjson = py::module_::import("json");
        std::string dumped = pyjson.attr("dumps")(strata).cast<std::string>();
        return json_to_py(report_ztop(strata_from_json(json::parse(dumped))));
      },
      py::arg("strata"),
      "Topological zeta function assembled from strata, with its actual poles.");

  m.attr("__version__") = "1.0.0";
}
