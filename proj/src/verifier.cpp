#include "smg/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "smg/errors.hpp"

namespace smg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxWitnesses = 64;

void add_witness(CheckResult& c, Witness w) {
  c.passed = false;
  if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(std::move(w));
}

std::string count_summary(const CheckResult& c, std::size_t failures, const char* what) {
  std::ostringstream os;
  if (failures == 0) {
    os << "ok";
  } else {
    os << failures << ' ' << what;
    if (failures > c.witnesses.size()) os << " (first " << c.witnesses.size() << " shown)";
  }
  return os.str();
}

}  // namespace

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckResult verify_edge_lengths(const EmbeddedGraph& g, double tol) {
  CheckResult c{.name = "edge_lengths"};
  if (!(g.lambda() > 0.0 && g.lambda() < kPi)) {
    add_witness(c, {{}, g.lambda(), "lambda outside (0, pi)"});
  }
  std::size_t bad = 0;
  double worst = 0.0;
  for (const auto& e : g.edges()) {
    const double len = angular_distance(g.vertices()[e.u], g.vertices()[e.v]);
    worst = std::max(worst, std::abs(len - g.lambda()));
    if (std::abs(len - g.lambda()) > tol) {
      ++bad;
      add_witness(c, {{e.u, e.v}, len, "edge length differs from lambda"});
    }
  }
  c.margin = tol - worst;
  c.summary = count_summary(c, bad, "edges off length");
  return c;
}

CheckResult verify_noncrossing(const EmbeddedGraph& g) {
  CheckResult c{.name = "noncrossing"};
  std::vector<std::optional<Arc>> arcs;
  arcs.reserve(g.edges().size());
  std::size_t bad = 0;
  for (const auto& e : g.edges()) {
    try {
      arcs.emplace_back(Arc(g.vertices()[e.u], g.vertices()[e.v]));
    } catch (const InvalidInput&) {
      arcs.emplace_back(std::nullopt);
      ++bad;
      add_witness(c, {{e.u, e.v}, 0.0, "edge is not a valid minor arc"});
    }
  }
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!arcs[i]) continue;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!arcs[j]) continue;
      const auto r = arc_intersection(*arcs[i], *arcs[j]);
      if (r.kind == IntersectionKind::Crossing || r.kind == IntersectionKind::Overlap) {
        ++bad;
        add_witness(c, {{edges[i].u, edges[i].v, edges[j].u, edges[j].v}, 0.0, to_string(r.kind),
                        r.point});
      }
    }
  }
  c.summary = count_summary(c, bad, "crossing or overlapping edge pairs");
  return c;
}

CheckResult verify_min_degree(const EmbeddedGraph& g, int k) {
  CheckResult c{.name = "min_degree"};
  const auto deg = g.degrees();
  std::size_t bad = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] < k) {
      ++bad;
      add_witness(c, {{v}, static_cast<double>(deg[v]), "degree below " + std::to_string(k)});
    }
  }
  c.summary = count_summary(c, bad, "vertices below the minimum degree");
  return c;
}

CheckResult verify_regular(const EmbeddedGraph& g, int k) {
  CheckResult c{.name = "regular"};
  const auto deg = g.degrees();
  std::size_t bad = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] != k) {
      ++bad;
      add_witness(c, {{v}, static_cast<double>(deg[v]), "degree is not " + std::to_string(k)});
    }
  }
  c.summary = count_summary(c, bad, "vertices with the wrong degree");
  return c;
}

CheckResult verify_separation(const EmbeddedGraph& g, double tol) {
  CheckResult c{.name = "separation"};
  const auto& pts = g.vertices();
  const auto adj = g.adjacency();
  double margin = std::numeric_limits<double>::infinity();
  std::size_t bad = 0;
  for (int i = 0; i < g.vertex_count(); ++i) {
    for (int j = i + 1; j < g.vertex_count(); ++j) {
      if (std::binary_search(adj[i].begin(), adj[i].end(), j)) continue;
      const double d = angular_distance(pts[i], pts[j]);
      margin = std::min(margin, d - g.lambda());
      if (d <= g.lambda() + tol) {
        ++bad;
        add_witness(c, {{i, j}, d, "non-adjacent pair within lambda"});
      }
    }
  }
  c.margin = margin;
  c.summary = count_summary(c, bad, "non-adjacent pairs too close");
  return c;
}

CheckResult verify_contact_graph(const EmbeddedGraph& g, double tol) {
  CheckResult c{.name = "contact_graph"};
  const auto& pts = g.vertices();
  std::size_t bad = 0;
  for (int i = 0; i < g.vertex_count(); ++i) {
    for (int j = i + 1; j < g.vertex_count(); ++j) {
      const bool touching = angular_distance(pts[i], pts[j]) <= g.lambda() + tol;
      const bool edge = g.has_edge(i, j);
      if (touching != edge) {
        ++bad;
        add_witness(c, {{i, j}, angular_distance(pts[i], pts[j]),
                        edge ? "edge whose caps do not touch" : "touching caps without an edge"});
      }
    }
  }
  c.summary = count_summary(c, bad, "pairs where contacts and edges disagree");
  return c;
}

CheckResult verify_faces(const EmbeddedGraph& g) {
  CheckResult c{.name = "faces"};
  FaceSet fs;
  try {
    fs = trace_faces(g);
  } catch (const EmbeddingError& e) {
    add_witness(c, {e.vertex() >= 0 ? std::vector<int>{e.vertex()} : std::vector<int>{}, 0.0,
                    e.what()});
    c.summary = "face tracing failed";
    return c;
  }
  const auto euler = euler_report(g, fs);
  if (euler.characteristic != 2 * euler.components) {
    add_witness(c, {{}, static_cast<double>(euler.characteristic),
                    "V - E + F differs from 2 per component; the rotation system is not planar"});
  }
  const double expected = 4.0 * kPi * euler.components;
  if (std::abs(fs.total_area() - expected) > 1e-8) {
    add_witness(c, {{}, fs.total_area(), "face areas do not sum to 4pi per component"});
  }
  std::vector<double> around(g.vertex_count(), 0.0);
  for (const auto& corner : fs.corners) around[corner.vertex] += corner.angle;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (std::abs(around[v] - 2.0 * kPi) > 1e-9) {
      add_witness(c, {{v}, around[v], "corner angles do not sum to 2pi"});
    }
  }
  std::ostringstream os;
  os << fs.size() << " faces, total area " << fs.total_area();
  c.summary = os.str();
  return c;
}

VerificationReport verify_all(const EmbeddedGraph& g, const VerifyProfile& profile) {
  VerificationReport r;
  r.profile = profile;
  if (g.vertex_count() == 0) {
    CheckResult c{.name = "nonempty"};
    add_witness(c, {{}, 0.0, "graph has no vertices"});
    c.summary = "empty input";
    r.checks.push_back(std::move(c));
    r.overall = false;
    return r;
  }
  r.checks.push_back(verify_edge_lengths(g, profile.tol));
  r.checks.push_back(verify_noncrossing(g));
  r.checks.push_back(profile.regular ? verify_regular(g, profile.min_degree)
                                     : verify_min_degree(g, profile.min_degree));
  r.checks.push_back(verify_separation(g, profile.tol));
  r.checks.push_back(verify_contact_graph(g, profile.tol));
  r.checks.push_back(verify_faces(g));
  r.overall = std::all_of(r.checks.begin(), r.checks.end(),
                          [](const CheckResult& c) { return c.passed; });
  return r;
}

FaceDiagnostics face_diagnostics(const EmbeddedGraph& g, const FaceSet& fs, double tol) {
  FaceDiagnostics d;
  d.min_corner_angle = std::numeric_limits<double>::infinity();
  d.max_corner_angle = -std::numeric_limits<double>::infinity();
  d.min_diagonal_margin = std::numeric_limits<double>::infinity();
  d.all_faces_345 = true;
  d.angles_in_interval = true;
  d.diagonals_exceed_lambda = true;
  const auto& pts = g.vertices();
  for (const auto& f : fs.faces) {
    switch (f.degree()) {
      case 3: ++d.triangles; break;
      case 4: ++d.quadrilaterals; break;
      case 5: ++d.pentagons; break;
      default: ++d.other_faces; break;
    }
    if (f.degree() > 5 || !f.is_simple_cycle()) d.all_faces_345 = false;
    for (double a : f.corner_angles) {
      d.min_corner_angle = std::min(d.min_corner_angle, a);
      d.max_corner_angle = std::max(d.max_corner_angle, a);
      if (!(a > kPi / 3.0 - tol && a <= 2.0 * kPi / 3.0 + tol)) d.angles_in_interval = false;
    }
    if ((f.degree() == 4 || f.degree() == 5) && f.is_simple_cycle()) {
      const int k = f.degree();
      for (int i = 0; i < k; ++i) {
        for (int j = i + 2; j < k; ++j) {
          if (i == 0 && j == k - 1) continue;
          const double m = angular_distance(pts[f.walk[i]], pts[f.walk[j]]) - g.lambda();
          ++d.diagonals_checked;
          d.min_diagonal_margin = std::min(d.min_diagonal_margin, m);
          if (!(m > 0.0)) d.diagonals_exceed_lambda = false;
        }
      }
    }
  }
  if (fs.faces.empty()) {
    d.all_faces_345 = false;
    d.angles_in_interval = false;
  }
  return d;
}

bool is_centrally_symmetric(const std::vector<UnitVector>& points, double tol) {
  if (points.empty()) return false;
  for (const auto& p : points) {
    const bool found = std::any_of(points.begin(), points.end(), [&](const UnitVector& q) {
      return (q.vec() + p.vec()).norm() <= tol;
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace smg
