#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cremona/birmap.hpp"
#include "cremona/cli.hpp"
#include "cremona/dynamics.hpp"
#include "cremona/errors.hpp"
#include "cremona/parser.hpp"
#include "cremona/report.hpp"

namespace py = pybind11;
using namespace cremona;

namespace {

std::string compose_all(const std::vector<std::string>& maps) {
  if (maps.empty()) throw ShapeError("compose needs at least one map");
  BirMap acc = io::parse_map(maps.back());
  for (auto it = maps.rbegin() + 1; it != maps.rend(); ++it) acc = compose(io::parse_map(*it), acc);
  return io::render_map(acc);
}

// Runs one subcommand and returns (exit code, JSON document).
std::pair<int, std::string> execute_json(const std::vector<std::string>& words) {
  const cli::Outcome o = cli::execute(words);
  return {o.exit_code, io::report_to_json(o.doc)};
}

std::pair<int, std::string> batch_json(const std::string& content, int jobs) {
  cli::CliConfig cfg;
  cfg.jobs = jobs;
  const cli::Outcome o = cli::run_batch(content, "<string>", cfg);
  return {o.exit_code, io::report_to_json(o.doc)};
}

}  // namespace

PYBIND11_MODULE(_cremona, m) {
  m.doc() = "Exact plane Cremona maps: composition, degree growth and Heisenberg embeddings";

  auto base = py::register_exception<Error>(m, "CremonaError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<InverseUnavailable>(m, "InverseUnavailable", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());

  m.def("normalize", [](const std::string& s) { return io::render_map(io::parse_map(s)); },
        "Canonical text of a map");
  m.def("compose", &compose_all, "f1 o f2 o ... for the given maps");
  m.def("inverse", [](const std::string& s) { return io::render_map(inverse(io::parse_map(s))); });
  m.def("commutator", [](const std::string& f, const std::string& g) {
    return io::render_map(commutator(io::parse_map(f), io::parse_map(g)));
  });
  m.def("map_equal", [](const std::string& f, const std::string& g) {
    return map_equal(io::parse_map(f), io::parse_map(g));
  });
  m.def("degree", [](const std::string& s) { return degree(io::parse_map(s)); });
  m.def(
      "degree_sequence",
      [](const std::string& s, int n) { return dynamics::degree_sequence(io::parse_map(s), n).degrees; },
      py::arg("map"), py::arg("n"));
  m.def("execute_json", &execute_json, py::arg("words"));
  m.def("batch_json", &batch_json, py::arg("content"), py::arg("jobs") = 1);
  m.def("validate_report_json", [](const std::string& text) { io::report_from_json(text); });
  m.attr("report_version") = io::kReportVersion;
}
