#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "valdim/checks.hpp"
#include "valdim/error.hpp"
#include "valdim/parse.hpp"
#include "valdim/report.hpp"

namespace py = pybind11;
using namespace valdim;

namespace {

std::string dims(const std::string& gamma, std::size_t budget, bool breadth) {
  LGroup g = parse_gamma(gamma);
  return dimension_payload(g, breadth ? breadth_cone(g, budget) : mdim_cone(g, budget)).dump();
}

}  // namespace

PYBIND11_MODULE(_valdim, m) {
  m.doc() = "Native core of valdim; the functions return JSON text that the package decodes.";

  // raw type objects live for the whole process
  static PyObject* error_type = PyErr_NewException("valdim._valdim.ValdimError", PyExc_ValueError, nullptr);
  static PyObject* syntax_type = PyErr_NewException("valdim._valdim.ValdimSyntaxError", error_type, nullptr);
  m.add_object("ValdimError", py::reinterpret_borrow<py::object>(error_type));
  m.add_object("ValdimSyntaxError", py::reinterpret_borrow<py::object>(syntax_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SyntaxError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(syntax_type)(e.what());
      exc.attr("offset") = e.offset();
      exc.attr("code") = error_code_name(e.code());
      PyErr_SetObject(syntax_type, exc.ptr());
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = error_code_name(e.code());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("DEFAULT_ITERATION_BUDGET") = kDefaultIterationBudget;

  m.def("canonical_gamma", [](const std::string& s) { return to_string(parse_gamma(s)); });
  m.def("canonical_ordinal", [](const std::string& s) { return to_string(parse_ordinal(s)); });
  m.def("natural_sum", [](const std::string& a, const std::string& b) {
    return to_string(natural_sum(parse_ordinal(a), parse_ordinal(b)));
  });
  m.def("mdim", [](const std::string& g, std::size_t budget) { return dims(g, budget, false); }, py::arg("gamma"),
        py::arg("budget") = kDefaultIterationBudget);
  m.def("breadth", [](const std::string& g, std::size_t budget) { return dims(g, budget, true); }, py::arg("gamma"),
        py::arg("budget") = kDefaultIterationBudget);
  m.def(
      "chain",
      [](const std::string& gamma, const std::string& cls, std::size_t budget) {
        if (cls != "two" && cls != "chain") throw Error(ErrorCode::InvalidArgument, "class must be 'two' or 'chain'");
        LGroup g = parse_gamma(gamma);
        CollapseClass c = cls == "two" ? CollapseClass::Two : CollapseClass::Chain;
        return chain_payload(g, c, s_chain(g, c, budget)).dump();
      },
      py::arg("gamma"), py::arg("cls") = "two", py::arg("budget") = kDefaultIterationBudget);
  m.def("cbrank_space", [](const std::string& top, std::size_t budget) {
        return cbrank_space_payload(parse_ordinal(top), budget).dump();
      },
      py::arg("top"), py::arg("budget") = kDefaultIterationBudget);
  m.def("zg", [](const std::string& g, int bound, bool stratify) { return zg_payload(parse_gamma(g), bound, stratify).dump(); },
        py::arg("gamma"), py::arg("bound") = 4, py::arg("stratify") = false);
  m.def("leq", [](const std::string& gamma, const std::string& lhs, const std::string& rhs) {
        LGroup g = parse_gamma(gamma);
        return leq_payload(parse_pp(g, lhs), parse_pp(g, rhs)).dump();
      },
      py::arg("gamma"), py::arg("lhs"), py::arg("rhs"));
  m.def("classify", [](const std::string& g) { return classify_payload(classify(parse_gamma(g))).dump(); });
  m.def("spec_star", [](const std::string& gamma) {
    LGroup g = parse_gamma(gamma);
    return spec_star_payload(g, spec_star_cb(g), mdim_cone(g).value).dump();
  });
  m.def("check", [](std::optional<std::string> tag) {
        py::gil_scoped_release release;
        return suite_payload(run_suite("acceptance", tag)).dump();
      },
      py::arg("tag") = py::none());
  m.def("render_table", [](const std::string& report) { return render_table(Json::parse(report)); });
  m.def("make_report", [](const std::string& command, const std::string& gamma, const std::string& method,
                          const std::string& result, double seconds) {
    return make_report(command, gamma, method, Json::parse(result), seconds).dump();
  });
}
