#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "sshg/cli.hpp"
#include "sshg/text.hpp"

namespace py = pybind11;

namespace {

std::optional<std::filesystem::path> golden_dir(const std::optional<std::string>& g) {
  if (!g) return std::nullopt;
  return std::filesystem::path(*g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact symbolic checks of the supersymmetric sinh-Gordon defect model";
  m.attr("SCHEMA_VERSION") = sshg::cli::kSchemaVersion;

  // translators run newest first, so the base class goes in first
  auto& base = py::register_exception<sshg::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<sshg::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<sshg::cli::ConfigError>(m, "ConfigError", base.ptr());

  m.def("canonical", [](const std::string& text) { return sshg::render_expression(sshg::parse_expression(text)); },
        py::arg("text"), "Canonical rendering of an expression in the text format.");
  m.def("equal", [](const std::string& a, const std::string& b) {
    return sshg::parse_expression(a) == sshg::parse_expression(b);
  }, py::arg("a"), py::arg("b"), "True when both texts denote the same ring element.");
  m.def("check_names", [] { return sshg::verifier::check_names(); });
  m.def("object_names", [] { return sshg::verifier::Sources::object_names(); });
  m.def("print_object", [](const std::string& name, const std::optional<std::string>& golden) {
    return sshg::render_document(sshg::verifier::Sources(golden_dir(golden)).document(name));
  }, py::arg("name"), py::arg("golden") = py::none());
  m.def("verify_json", [](const std::vector<std::string>& checks, const std::string& mode, bool strict,
                          const std::optional<std::string>& golden) {
    sshg::cli::SuiteConfig cfg;
    cfg.checks = sshg::cli::resolve_checks(checks);
    auto md = sshg::verifier::parse_mode(mode);
    if (!md) throw sshg::cli::ConfigError("unknown mode '" + mode + "'");
    cfg.options.mode = *md;
    cfg.strict = strict;
    cfg.golden = golden_dir(golden);
    std::vector<sshg::verifier::ResidualReport> reports;
    {
      py::gil_scoped_release release;
      reports = sshg::cli::run_suite(cfg);
    }
    return py::make_tuple(sshg::cli::emit_json(reports), sshg::cli::exit_status(reports, strict));
  }, py::arg("checks"), py::arg("mode") = "solve", py::arg("strict") = false, py::arg("golden") = py::none(),
     "Runs checks; returns (json report, exit status).");
}
