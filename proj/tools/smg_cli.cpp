// smg: build, verify, audit and export spherical matchstick graphs.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "smg/constructions.hpp"
#include "smg/discharging.hpp"
#include "smg/errors.hpp"
#include "smg/io.hpp"
#include "smg/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

smg::GraphFile load(const std::string& path) {
  std::vector<std::string> warnings;
  auto file = smg::read_graph(path, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return file;
}

void print_construction(const smg::ConstructionResult& r) {
  const auto fs = smg::trace_faces(r.graph);
  const auto d = smg::face_diagnostics(r.graph, fs);
  std::printf("%s: V=%d E=%d F=%d (triangles %d, quadrilaterals %d, pentagons %d)\n", r.name.c_str(),
              r.graph.vertex_count(), r.graph.edge_count(), fs.size(), d.triangles, d.quadrilaterals,
              d.pentagons);
  std::printf("lambda = %.17g rad\n", r.graph.lambda());
  std::printf("max tangency residual = %.3g, polish iterations = %d", r.residual_max, r.iterations);
  if (r.certified_starts > 0) std::printf(", certified starts = %d", r.certified_starts);
  std::printf("\ncertificate: %s\n", r.certificate.overall ? "PASS" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical matchstick graphs: constructions, verification and discharging audit"};
  app.require_subcommand(1);

  smg::SearchOptions search;
  std::string name, input, output, format = "", group = "O";
  int min_degree = 5;
  std::optional<int> regular;
  double tol = 1e-9;
  int orbits = 1;
  bool json = false;

  auto* construct = app.add_subcommand("construct", "Build and certify one of the five graphs");
  construct->add_option("name", name, "Graph to construct")
      ->required()
      ->check(CLI::IsMember(smg::construction_names()));
  construct->add_option("--seed", search.seed, "Random seed for the max-min search");
  construct->add_option("--starts", search.starts, "Number of max-min starts")->check(CLI::Range(1, 100000));
  construct->add_option("--polish-tol", search.polish.tol, "Tangency residual tolerance");
  construct->add_option("-o,--output", output, "Output graph file")->required();

  auto* verify = app.add_subcommand("verify", "Check the matchstick axioms and the contact-graph property");
  verify->add_option("file", input)->required()->check(CLI::ExistingFile);
  auto* min_opt = verify->add_option("--min-degree", min_degree, "Required minimum degree");
  verify->add_option("--regular", regular, "Require every degree to equal K")->excludes(min_opt);
  verify->add_option("--tol", tol, "Angular tolerance in radians")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Machine-readable report");

  auto* audit = app.add_subcommand("audit", "Run the discharging audit and print the charge ledger");
  audit->add_option("file", input)->required()->check(CLI::ExistingFile);
  audit->add_option("--tol", tol, "Slack for the sign tests")->check(CLI::PositiveNumber);
  audit->add_flag("--json", json, "Machine-readable ledger");

  auto* exporter = app.add_subcommand("export", "Export as OFF mesh, SVG drawing or CSV edge list");
  exporter->add_option("file", input)->required()->check(CLI::ExistingFile);
  exporter->add_option("--format", format)->required()->check(CLI::IsMember({"off", "svg", "csv"}));
  exporter->add_option("-o,--output", output)->required();

  auto* solve = app.add_subcommand("solve-orbits", "Experimental max-min search over group orbits");
  solve->add_option("--group", group)->check(CLI::IsMember({"O", "I"}));
  solve->add_option("--orbits", orbits)->check(CLI::Range(1, 4));
  solve->add_option("--seed", search.seed);
  solve->add_option("--starts", search.starts)->check(CLI::Range(1, 100000));
  solve->add_option("-o,--output", output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) {
      const auto r = smg::construct(name, search);
      print_construction(r);
      if (!r.certificate.overall) return kExitFail;
      smg::write_graph(output, smg::to_graph_file(r));
      return kExitOk;
    }
    if (*verify) {
      const auto file = load(input);
      const smg::VerifyProfile profile{regular.value_or(min_degree), regular.has_value(), tol};
      const auto report = smg::verify_all(file.graph, profile);
      std::cout << (json ? smg::report_json(report) : smg::report_text(report));
      if (!json && report.overall) {
        const auto fs = smg::trace_faces(file.graph);
        const auto d = smg::face_diagnostics(file.graph, fs, tol);
        std::printf("faces: %d triangles, %d quadrilaterals, %d pentagons, %d other\n", d.triangles,
                    d.quadrilaterals, d.pentagons, d.other_faces);
        std::printf("corner angles in [%.6f, %.6f] rad, inside (pi/3, 2pi/3]: %s\n",
                    d.min_corner_angle, d.max_corner_angle, d.angles_in_interval ? "yes" : "no");
        if (d.diagonals_checked > 0) {
          std::printf("face diagonals: %d checked, min excess over lambda %.6g\n",
                      d.diagonals_checked, d.min_diagonal_margin);
        }
        std::printf("centrally symmetric: %s\n",
                    smg::is_centrally_symmetric(file.graph.vertices(), tol) ? "yes" : "no");
      }
      return report.overall ? kExitOk : kExitFail;
    }
    if (*audit) {
      const auto file = load(input);
      const auto a = smg::audit(file.graph, tol);
      std::cout << (json ? smg::ledger_json(a) : smg::ledger_text(a));
      return a.total_nonpositive && a.finals_nonnegative ? kExitOk : kExitFail;
    }
    if (*exporter) {
      const auto file = load(input);
      smg::write_text(output,
                      smg::export_graph(file.graph, smg::export_format_from_string(format)));
      return kExitOk;
    }
    if (*solve) {
      const auto r = smg::solve_orbits(smg::group_from_string(group), orbits, search);
      print_construction(r);
      smg::write_graph(output, smg::to_graph_file(r));
      return kExitOk;
    }
  } catch (const smg::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
