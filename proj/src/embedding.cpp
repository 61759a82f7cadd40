#include "smg/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "smg/errors.hpp"

namespace smg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAzimuthTolerance = 1e-10;

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Smallest rotation over both orientations; corner angles follow their
// vertices.
void canonicalize(Face& f) {
  const int k = f.degree();
  std::vector<int> best_walk;
  std::vector<double> best_angles;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> w = f.walk;
    std::vector<double> a = f.corner_angles;
    if (dir == 1) {
      std::reverse(w.begin(), w.end());
      std::reverse(a.begin(), a.end());
    }
    for (int r = 0; r < k; ++r) {
      std::vector<int> cw(k);
      std::vector<double> ca(k);
      for (int i = 0; i < k; ++i) {
        cw[i] = w[(r + i) % k];
        ca[i] = a[(r + i) % k];
      }
      if (best_walk.empty() || cw < best_walk) {
        best_walk = std::move(cw);
        best_angles = std::move(ca);
      }
    }
  }
  f.walk = std::move(best_walk);
  f.corner_angles = std::move(best_angles);
}

}  // namespace

std::vector<Edge> canonical_edges(std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

EmbeddedGraph::EmbeddedGraph(std::vector<UnitVector> vertices, std::vector<Edge> edges,
                             double lambda)
    : vertices_(std::move(vertices)), edges_(canonical_edges(std::move(edges))), lambda_(lambda) {
  if (!(lambda_ > 0.0 && lambda_ < kPi)) {
    throw InvalidInput("edge length lambda must lie in (0, pi), got " + std::to_string(lambda_));
  }
  const int n = vertex_count();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v >= n) {
      throw InvalidInput("edge [" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         "] has an endpoint out of range");
    }
    if (e.u == e.v) throw InvalidInput("loop at vertex " + std::to_string(e.u));
    if (i > 0 && edges_[i - 1] == e) {
      throw InvalidInput("duplicate edge [" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         "]");
    }
  }
}

std::vector<int> EmbeddedGraph::degrees() const {
  std::vector<int> deg(vertices_.size(), 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<int>> EmbeddedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices_.size());
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

bool EmbeddedGraph::has_edge(int a, int b) const {
  const Edge e{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

EmbeddedGraph EmbeddedGraph::with_lambda(double lambda) const {
  return EmbeddedGraph(vertices_, edges_, lambda);
}

int RotationSystem::previous(int vertex, int neighbor) const {
  const auto& ring = order[vertex];
  const auto it = std::find(ring.begin(), ring.end(), neighbor);
  if (it == ring.end()) throw EmbeddingError("not a neighbor", vertex);
  return it == ring.begin() ? ring.back() : *std::prev(it);
}

RotationSystem rotation_system(const EmbeddedGraph& g) {
  const auto adj = g.adjacency();
  const auto& pts = g.vertices();
  RotationSystem rs;
  rs.order.resize(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (adj[v].empty()) continue;
    const UnitVector& at = pts[v];
    std::vector<std::pair<double, int>> by_azimuth;
    Vec3 e1, e2;
    for (std::size_t k = 0; k < adj[v].size(); ++k) {
      const int w = adj[v][k];
      Vec3 t;
      try {
        t = tangent_direction(at, pts[w]);
      } catch (const DegenerateGeometry&) {
        throw EmbeddingError("edge " + std::to_string(v) + "-" + std::to_string(w) +
                                 " has coincident or antipodal endpoints",
                             static_cast<int>(v));
      }
      if (k == 0) {
        e1 = t;
        e2 = at.vec().cross(e1);
      }
      double az = std::atan2(t.dot(e2), t.dot(e1));
      if (az < 0.0) az += 2.0 * kPi;
      by_azimuth.emplace_back(az, w);
    }
    std::sort(by_azimuth.begin(), by_azimuth.end());
    const std::size_t m = by_azimuth.size();
    for (std::size_t k = 0; m > 1 && k < m; ++k) {
      double gap = by_azimuth[(k + 1) % m].first - by_azimuth[k].first;
      if (k + 1 == m) gap += 2.0 * kPi;
      if (gap < kAzimuthTolerance) {
        throw EmbeddingError("two edges leave vertex " + std::to_string(v) +
                                 " with the same tangent direction",
                             static_cast<int>(v));
      }
    }
    for (const auto& [az, w] : by_azimuth) rs.order[v].push_back(w);
  }
  return rs;
}

bool Face::is_simple_cycle() const {
  std::vector<int> w = walk;
  std::sort(w.begin(), w.end());
  return std::adjacent_find(w.begin(), w.end()) == w.end();
}

double FaceSet::total_area() const {
  double s = 0.0;
  for (const auto& f : faces) s += f.area;
  return s;
}

FaceSet trace_faces(const EmbeddedGraph& g) {
  const auto deg = g.degrees();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] < 2) {
      throw EmbeddingError("vertex " + std::to_string(v) + " has degree " +
                               std::to_string(deg[v]) + "; face tracing needs degree >= 2",
                           v);
    }
  }
  const RotationSystem rs = rotation_system(g);
  const auto& pts = g.vertices();

  // Directed edge (u -> v) is identified by u and v's position in rs.order[u].
  std::vector<std::vector<char>> used(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) used[v].assign(rs.order[v].size(), 0);
  auto slot = [&](int u, int v) {
    const auto& ring = rs.order[u];
    return static_cast<std::size_t>(std::find(ring.begin(), ring.end(), v) - ring.begin());
  };

  FaceSet fs;
  for (int u0 = 0; u0 < g.vertex_count(); ++u0) {
    for (std::size_t k0 = 0; k0 < rs.order[u0].size(); ++k0) {
      if (used[u0][k0]) continue;
      // Walk with the face on the left: at v the next neighbor is the one
      // just clockwise of the edge we arrived on.
      Face f;
      int u = u0;
      int v = rs.order[u0][k0];
      used[u0][k0] = 1;
      while (true) {
        const int w = rs.previous(v, u);
        f.walk.push_back(v);
        f.corner_angles.push_back(corner_angle(pts[u], pts[v], pts[w], Sweep::Clockwise));
        const std::size_t kw = slot(v, w);
        if (used[v][kw]) break;
        used[v][kw] = 1;
        u = v;
        v = w;
      }
      f.area = walk_area(f.corner_angles);
      canonicalize(f);
      fs.faces.push_back(std::move(f));
    }
  }
  std::sort(fs.faces.begin(), fs.faces.end(),
            [](const Face& a, const Face& b) { return a.walk < b.walk; });
  for (int fi = 0; fi < fs.size(); ++fi) {
    const Face& f = fs.faces[fi];
    for (int i = 0; i < f.degree(); ++i) fs.corners.push_back({f.walk[i], fi, f.corner_angles[i]});
  }
  return fs;
}

int count_components(const EmbeddedGraph& g) {
  DisjointSets ds(g.vertex_count());
  int components = g.vertex_count();
  for (const auto& e : g.edges()) {
    if (ds.unite(e.u, e.v)) --components;
  }
  return components;
}

EulerReport euler_report(const EmbeddedGraph& g, const FaceSet& fs) {
  EulerReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.faces = fs.size();
  r.characteristic = r.vertices - r.edges + r.faces;
  r.components = count_components(g);
  r.connected = r.components == 1;
  return r;
}

}  // namespace smg
