#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "smg/constructions.hpp"
#include "smg/discharging.hpp"
#include "smg/errors.hpp"
#include "smg/io.hpp"
#include "smg/verifier.hpp"

namespace py = pybind11;
using namespace smg;

namespace {

std::vector<std::array<double, 3>> coordinates(const EmbeddedGraph& g) {
  std::vector<std::array<double, 3>> out;
  for (const auto& p : g.vertices()) out.push_back({p.x(), p.y(), p.z()});
  return out;
}

EmbeddedGraph make_graph(const std::vector<std::array<double, 3>>& vertices,
                         const std::vector<std::pair<int, int>>& edges, double lambda) {
  std::vector<UnitVector> v;
  for (const auto& p : vertices) v.emplace_back(p[0], p[1], p[2]);
  std::vector<Edge> e;
  for (const auto& [a, b] : edges) e.push_back({a, b});
  return EmbeddedGraph(std::move(v), std::move(e), lambda);
}

py::dict ledger_dict(const AuditResult& a) {
  const auto& l = a.ledger;
  py::dict flags;
  flags["connected"] = l.equality.connected;
  flags["all_faces_345"] = l.equality.all_faces_345;
  flags["all_angles_in_interval"] = l.equality.all_angles_in_interval;
  flags["all_degree_5"] = l.equality.all_degree_5;
  py::dict d;
  d["vertex_initial"] = l.vertex_initial;
  d["vertex_final"] = l.vertex_final;
  d["face_initial"] = l.face_initial;
  d["face_final"] = l.face_final;
  d["total_initial"] = l.total_initial;
  d["total_final"] = l.total_final;
  d["closed_form_total"] = a.closed_form_total;
  d["max_abs_final"] = a.max_abs_final;
  d["finals_zero"] = a.finals_zero;
  d["finals_nonnegative"] = a.finals_nonnegative;
  d["total_nonpositive"] = a.total_nonpositive;
  d["equality"] = flags;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spherical matchstick graphs";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<SolverError>(m, "SolverError", base.ptr());
  py::register_exception<EmbeddingError>(m, "EmbeddingError", base.ptr());
  py::register_exception<DegenerateGeometry>(m, "DegenerateGeometry", base.ptr());

  py::class_<EmbeddedGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertices"), py::arg("edges"), py::arg("lam"))
      .def_property_readonly("vertices", &coordinates)
      .def_property_readonly("edges",
                             [](const EmbeddedGraph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def_property_readonly("lam", &EmbeddedGraph::lambda)
      .def_property_readonly("vertex_count", &EmbeddedGraph::vertex_count)
      .def_property_readonly("edge_count", &EmbeddedGraph::edge_count)
      .def("degrees", &EmbeddedGraph::degrees)
      .def("with_lambda", &EmbeddedGraph::with_lambda)
      .def("face_degrees",
           [](const EmbeddedGraph& g) {
             std::vector<int> out;
             for (const auto& f : trace_faces(g).faces) out.push_back(f.degree());
             return out;
           })
      .def("__repr__", [](const EmbeddedGraph& g) {
        return "<smg.Graph V=" + std::to_string(g.vertex_count()) + " E=" + std::to_string(g.edge_count()) +
               ">";
      });

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("margin", &CheckResult::margin)
      .def_readonly("summary", &CheckResult::summary)
      .def_property_readonly("witnesses", [](const CheckResult& c) {
        std::vector<std::vector<int>> out;
        for (const auto& w : c.witnesses) out.push_back(w.ids);
        return out;
      });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("overall", &VerificationReport::overall)
      .def_readonly("checks", &VerificationReport::checks)
      .def("find", &VerificationReport::find, py::return_value_policy::reference_internal)
      .def("__str__", &report_text)
      .def("to_json", &report_json);

  py::class_<ConstructionResult>(m, "ConstructionResult")
      .def_readonly("name", &ConstructionResult::name)
      .def_readonly("graph", &ConstructionResult::graph)
      .def_readonly("residual_max", &ConstructionResult::residual_max)
      .def_readonly("iterations", &ConstructionResult::iterations)
      .def_readonly("certified_starts", &ConstructionResult::certified_starts)
      .def_readonly("certificate", &ConstructionResult::certificate);

  m.def("construction_names", &construction_names);
  m.def(
      "construct",
      [](const std::string& name, std::uint64_t seed, int starts) {
        SearchOptions opt;
        opt.seed = seed;
        opt.starts = starts;
        py::gil_scoped_release release;
        return construct(name, opt);
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("starts") = 64);
  m.def(
      "verify",
      [](const EmbeddedGraph& g, int min_degree, bool regular, double tol) {
        return verify_all(g, {.min_degree = min_degree, .regular = regular, .tol = tol});
      },
      py::arg("graph"), py::arg("min_degree") = 5, py::arg("regular") = false, py::arg("tol") = 1e-9);
  m.def(
      "audit", [](const EmbeddedGraph& g, double tol) { return ledger_dict(audit(g, tol)); }, py::arg("graph"),
      py::arg("tol") = 1e-9);
  m.def("charge", &charge_function, py::arg("alpha"));
  m.def("is_centrally_symmetric",
        [](const EmbeddedGraph& g, double tol) { return is_centrally_symmetric(g.vertices(), tol); },
        py::arg("graph"), py::arg("tol") = 1e-9);

  m.def("dumps", [](const EmbeddedGraph& g) { return to_smg({g, std::nullopt}); });
  m.def("loads", [](const std::string& text) { return parse_smg(text).graph; });
  m.def("read_graph", [](const std::filesystem::path& p) { return read_graph(p).graph; });
  m.def("write_graph", [](const std::filesystem::path& p, const EmbeddedGraph& g) {
    write_graph(p, {g, std::nullopt});
  });
  m.def(
      "export",
      [](const EmbeddedGraph& g, const std::string& format) {
        return export_graph(g, export_format_from_string(format));
      },
      py::arg("graph"), py::arg("format"));
}
