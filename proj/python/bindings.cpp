#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "triolex/workspace.hpp"

namespace py = pybind11;
using namespace triolex;
using nlohmann::json;

namespace {

// JSON crosses the boundary as text; the Python side decodes it
py::tuple result(const CommandResult& r) { return py::make_tuple(r.exit_code, r.report.dump(), r.diagnostic); }

PolyDiffOp op_from(const std::string& text, int n) { return polydiffop_from_json(json::parse(text), n); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact calculus on triole algebras";

  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  m.def("validate", [](const std::string& path) { return result(cmd_validate(path)); }, py::arg("path"));
  m.def(
      "analyze",
      [](const std::string& path, const std::string& cmd, const std::string& target, int dmax) {
        return result(cmd_analyze(path, cmd, target, dmax));
      },
      py::arg("path"), py::arg("cmd"), py::arg("target"), py::arg("dmax") = 3);
  m.def(
      "validate_text",
      [](const std::string& text) {
        json j;
        try {
          j = json::parse(text);
        } catch (const json::parse_error& e) {
          throw SchemaError(e.what());
        }
        return result(validate_workspace(workspace_from_json(j)));
      },
      py::arg("text"));
  m.def(
      "normalize_workspace",
      [](const std::string& text) { return to_json(workspace_from_json(json::parse(text))).dump(); }, py::arg("text"));

  m.def(
      "parse_poly", [](const std::string& s, int n) { return parse_poly(s, n).str(); }, py::arg("text"),
      py::arg("n_vars"));
  m.def(
      "poly_terms", [](const std::string& s, int n) { return to_json(parse_poly(s, n)).dump(); }, py::arg("text"),
      py::arg("n_vars"));

  m.def(
      "compose", [](const std::string& a, const std::string& b, int n) { return to_json(compose(op_from(a, n), op_from(b, n))).dump(); },
      py::arg("a"), py::arg("b"), py::arg("n_vars"));
  m.def(
      "commutator",
      [](const std::string& a, const std::string& b, int n) { return to_json(commutator(op_from(a, n), op_from(b, n))).dump(); },
      py::arg("a"), py::arg("b"), py::arg("n_vars"));
  m.def(
      "delta", [](const std::string& d, const std::string& f, int n) { return to_json(delta_a(op_from(d, n), parse_poly(f, n))).dump(); },
      py::arg("op"), py::arg("f"), py::arg("n_vars"));
  m.def(
      "apply", [](const std::string& d, const std::string& f, int n) { return op_from(d, n).apply(parse_poly(f, n)).str(); },
      py::arg("op"), py::arg("f"), py::arg("n_vars"));
  m.def(
      "order", [](const std::string& d, int n) { return op_from(d, n).order(); }, py::arg("op"), py::arg("n_vars"));
  m.def(
      "principal_symbol",
      [](const std::string& d, int n, int k) { return to_json(principal_symbol(op_from(d, n), k)).dump(); },
      py::arg("op"), py::arg("n_vars"), py::arg("k"));
}
