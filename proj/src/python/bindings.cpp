#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "folres/commands.hpp"
#include "folres/error.hpp"
#include "folres/forms.hpp"
#include "folres/parser.hpp"

namespace py = pybind11;
using folres::Polynomial;
using folres::Rational;

namespace {

// Accepts int, str ("p/q") or anything whose str() is a rational such as Fraction.
Rational to_rational(const py::handle& value) {
  return folres::parse_rational(std::string(py::str(value)));
}

std::vector<Rational> to_point(const py::sequence& point) {
  std::vector<Rational> out;
  for (const auto& x : point) out.push_back(to_rational(x));
  return out;
}

folres::OneForm to_form(const std::vector<std::string>& coefficients, const std::vector<std::string>& variables) {
  if (coefficients.size() != variables.size()) {
    throw folres::Error(folres::ErrorCode::InvalidInput, "one coefficient per variable is required");
  }
  std::vector<Polynomial> polys;
  for (const auto& c : coefficients) polys.push_back(folres::parse_polynomial(c, variables));
  return folres::OneForm(variables, std::move(polys));
}

py::tuple run(const std::string& command, const std::string& job_json) {
  const auto cmd = folres::parse_command(command);
  const auto result = job_json.empty() ? folres::run_command(cmd, std::nullopt)
                                       : folres::run_command_text(cmd, job_json);
  return py::make_tuple(result.exit_code, result.report);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact residues of codimension-one foliations";

  py::register_exception<folres::Error>(m, "FolresError", PyExc_ValueError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, const std::vector<std::string>& variables) {
             return folres::parse_polynomial(text, variables);
           }),
           py::arg("text"), py::arg("variables"))
      .def_property_readonly("variables", &Polynomial::variables)
      .def_property_readonly("total_degree", &Polynomial::total_degree)
      .def("is_homogeneous", &Polynomial::is_homogeneous)
      .def("is_zero", &Polynomial::is_zero)
      .def("derivative", py::overload_cast<std::string_view>(&Polynomial::derivative, py::const_), py::arg("name"))
      .def(
          "evaluate",
          [](const Polynomial& p, const py::sequence& point) {
            return folres::to_string(p.evaluate(to_point(point)));
          },
          py::arg("point"), "Exact value at a rational point, as a 'p/q' string.")
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

  m.def("parse_polynomial", &folres::parse_polynomial, py::arg("text"), py::arg("variables"));

  m.def(
      "integrability_defect",
      [](const std::vector<std::string>& coefficients, const std::vector<std::string>& variables) {
        return folres::integrability_defect(to_form(coefficients, variables)).to_string();
      },
      py::arg("coefficients"), py::arg("variables"));

  m.def(
      "is_integrable",
      [](const std::vector<std::string>& coefficients, const std::vector<std::string>& variables) {
        return folres::integrability_defect(to_form(coefficients, variables)).is_zero();
      },
      py::arg("coefficients"), py::arg("variables"));

  m.def(
      "is_invariant",
      [](const std::vector<std::string>& coefficients, const std::vector<std::string>& variables,
         const std::string& f) {
        return folres::is_invariant_hypersurface(to_form(coefficients, variables),
                                                 folres::parse_polynomial(f, variables));
      },
      py::arg("coefficients"), py::arg("variables"), py::arg("f"));

  m.def("run_command", &run, py::arg("command"), py::arg("job_json") = std::string(),
        "Runs a command on a JSON job; returns (exit_code, report_json).");

  m.def("worked_example_job", []() { return folres::serialize_job(folres::worked_example_job()); });
}
