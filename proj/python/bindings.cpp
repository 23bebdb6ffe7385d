#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qsing/cli.hpp"
#include "qsing/errors.hpp"
#include "qsing/reports.hpp"

namespace py = pybind11;
using namespace qsing;

namespace {

AnalysisRequest request(const std::string& quiver, const std::string& dim, const std::vector<int>& simples,
                        int box_bound, int depth_bound) {
  return AnalysisRequest{parse_quiver(quiver), DimVector(parse_int_list(dim)), simples, box_bound, depth_bound};
}

template <class F>
std::string json_of(F&& f) {
  return encode(f()).dump();
}

}  // namespace

PYBIND11_MODULE(_qsing, m) {
  m.doc() = "Exact computations for semi-invariants of Dynkin quivers; results are JSON strings.";

  // Translators run newest first, so the base class is registered first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", py::make_tuple(base, py::handle(PyExc_ValueError)));
  py::register_exception<NonDynkin>(m, "NonDynkin", base);
  py::register_exception<TerminalRuleInapplicable>(m, "TerminalRuleInapplicable", base);

#define QSING_ANALYSIS(name, runner)                                                                       \
  m.def(                                                                                                  \
      name,                                                                                               \
      [](const std::string& quiver, const std::string& dim, const std::vector<int>& simples, int box_bound, \
         int depth_bound) {                                                                               \
        auto req = request(quiver, dim, simples, box_bound, depth_bound);                                 \
        py::gil_scoped_release release;                                                                   \
        return json_of([&] { return runner(req); });                                                      \
      },                                                                                                  \
      py::arg("quiver"), py::arg("dim"), py::arg("simples") = std::vector<int>{}, py::arg("box_bound") = 6, \
      py::arg("depth_bound") = 10)

  QSING_ANALYSIS("decompose", run_decompose);
  QSING_ANALYSIS("nullcone", run_nullcone);
  QSING_ANALYSIS("bfunction", run_bfunction);
  QSING_ANALYSIS("singularities", run_singularities);
#undef QSING_ANALYSIS

  m.def(
      "hom",
      [](const std::string& quiver, const std::string& source, const std::string& target) {
        std::optional<DimVector> t;
        if (!target.empty()) t = DimVector(parse_int_list(target));
        return encode(run_hom(parse_quiver(quiver), DimVector(parse_int_list(source)), t)).dump();
      },
      py::arg("quiver"), py::arg("source"), py::arg("target") = "");

  m.def(
      "preset",
      [](const std::string& name, int n, int mm) {
        Preset p = make_preset(name, n, mm);
        return Json{{"name", p.name},
                    {"quiver", encode(p.quiver)},
                    {"alpha", encode(p.alpha)},
                    {"selected", p.selected},
                    {"permutation", p.permutation}}
            .dump();
      },
      py::arg("name"), py::arg("n") = 1, py::arg("m") = 1);

  m.def(
      "verify_certificate",
      [](const std::string& certificate_json) {
        CaseCertificate c = decode<CaseCertificate>(Json::parse(certificate_json));
        CheckResult r = verify_certificate(c);
        return py::make_tuple(r.ok, r.error);
      },
      py::arg("certificate"));

  m.def(
      "membership",
      [](const std::string& family_json, const std::vector<std::string>& point, int box_bound) {
        BFunctionFamily f = decode<BFunctionFamily>(Json::parse(family_json));
        std::vector<Rational> z;
        for (const auto& s : point) z.push_back(decode<Rational>(Json(s)));
        return encode(membership_in_ztilde(f, z, box_bound)).dump();
      },
      py::arg("family"), py::arg("point"), py::arg("box_bound") = 6);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
