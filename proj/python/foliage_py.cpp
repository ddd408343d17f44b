#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "foliage/cli.hpp"

namespace py = pybind11;
using namespace foliage;

namespace {

// Forms cross the boundary as text; results as JSON strings decoded on the Python side.
std::string milnor_of(const std::string& text, const std::vector<std::string>& params) {
  return cli::milnor_json(milnor_number(cli::parse_form(text, params))).dump();
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run_command(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_foliage, m) {
  m.doc() = "Exact computations with germs and degree-two foliations";
  m.attr("__version__") = FOLIAGE_VERSION;

  static py::exception<Error> base(m, "FoliageError", PyExc_ValueError);
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<cli::ParseError> parse(m, "ParseError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cli::ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("run_command", &run, py::arg("args"),
        "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
  m.def("normalize", [](const std::string& text, const std::vector<std::string>& params) {
    return cli::parse_form(text, params).to_string();
  }, py::arg("text"), py::arg("params") = std::vector<std::string>{});
  m.def("milnor_json", &milnor_of, py::arg("text"), py::arg("params") = std::vector<std::string>{});
  m.def("germ_json", [](const std::string& text) { return cli::germ_report(cli::parse_form(text)).dump(); },
        py::arg("text"));
  m.def("is_integrable", [](const std::string& text, const std::vector<std::string>& params) {
    return is_integrable(cli::parse_form(text, params));
  }, py::arg("text"), py::arg("params") = std::vector<std::string>{});
  m.def("chi_contains", [](const std::string& r) { return chi_contains(parse_rat(r)); }, py::arg("r"));
  m.def("suite_names", &cli::suite_names);
}
