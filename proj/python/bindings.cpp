#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "g2c/analysis.hpp"

namespace py = pybind11;

namespace {

g2c::ManifoldSpec load(const std::string& source, bool require_unit_xi = true) {
  g2c::ParseOptions opts;
  opts.require_unit_xi = require_unit_xi;
  if (source.rfind("builtin:", 0) == 0) return g2c::parse_spec(source, opts);
  return g2c::parse_spec_text(source, opts);
}

template <std::size_t N>
std::array<g2c::Rational, N> rationals(const std::vector<std::string>& v, const char* what) {
  if (v.size() != N)
    throw g2c::ValidationError(std::string(what) + ": expected " + std::to_string(N) + " rationals, got " +
                               std::to_string(v.size()));
  std::array<g2c::Rational, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = g2c::parse_rational(v[k]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_g2c, m) {
  m.doc() = "JSON-level bindings; the g2c package wraps these with dicts.";

  py::register_exception<g2c::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<g2c::InternalConsistencyError>(m, "InternalConsistencyError", PyExc_RuntimeError);

  m.def("builtin_names", [] {
    std::vector<std::string> names;
    for (const auto& s : g2c::builtin_examples()) names.push_back(s.name);
    return names;
  });
  m.def("builtin_spec", [](const std::string& name) { return g2c::spec_to_json(g2c::builtin_example(name)).dump(); });

  m.def("normalize_spec", [](const std::string& source) { return g2c::spec_to_json(load(source)).dump(); },
        py::arg("spec"), "Parse, validate and re-serialize a spec.");

  m.def("validate", [](const std::string& source) { return g2c::validation_report(load(source)).dump(); },
        py::arg("spec"));

  m.def(
      "tables", [](const std::string& source, const std::string& backend) {
        return g2c::manifold_tables(load(source), backend).dump();
      },
      py::arg("spec"), py::arg("backend") = "");

  m.def(
      "analyze",
      [](const std::string& source, std::optional<std::vector<std::string>> xi,
         std::optional<std::vector<std::string>> u, const std::string& backend, bool normalize) {
        g2c::AnalyzeOptions opts;
        if (xi) opts.xi = rationals<7>(*xi, "xi");
        if (u) opts.u = rationals<6>(*u, "u");
        opts.backend = backend;
        opts.normalize = normalize;
        const g2c::ManifoldSpec spec = load(source, !normalize);
        py::gil_scoped_release release;
        return g2c::analyze(spec, opts).dump();
      },
      py::arg("spec"), py::arg("xi") = py::none(), py::arg("u") = py::none(), py::arg("backend") = "",
      py::arg("normalize") = false);

  m.def(
      "fuzz",
      [](const std::string& source, int trials, std::uint64_t seed, int jobs) {
        g2c::FuzzOptions opts;
        opts.trials = trials;
        opts.seed = seed;
        opts.jobs = jobs;
        const g2c::ManifoldSpec spec = load(source);
        py::gil_scoped_release release;
        return g2c::fuzz(spec, opts).dump();
      },
      py::arg("spec"), py::arg("trials"), py::arg("seed"), py::arg("jobs") = 1);

  m.def("render_text", [](const std::string& report) { return g2c::render_text(nlohmann::json::parse(report)); });

  m.def("tolerance", &g2c::tolerance);
  m.def("set_tolerance", &g2c::set_tolerance, py::arg("tau"));
}
