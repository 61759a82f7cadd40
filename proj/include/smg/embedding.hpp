#pragma once

#include <compare>
#include <vector>

#include "smg/sphgeom.hpp"

namespace smg {

/// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// A simple graph drawn on the unit sphere with every edge a minor arc of
/// the common angular length lambda.
///
/// The factory validates the combinatorial invariants (indices in range, no
/// loops, no duplicate edges, 0 < lambda < pi) and stores edges in canonical
/// sorted order. Edge *lengths* are not checked here; that is the verifier's
/// job.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  EmbeddedGraph(std::vector<UnitVector> vertices, std::vector<Edge> edges, double lambda);

  const std::vector<UnitVector>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  double lambda() const { return lambda_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::vector<int> degrees() const;
  /// Neighbor lists, each sorted by index.
  std::vector<std::vector<int>> adjacency() const;
  bool has_edge(int a, int b) const;

  /// Same drawing with a different lambda (used for perturbation studies).
  EmbeddedGraph with_lambda(double lambda) const;

 private:
  std::vector<UnitVector> vertices_;
  std::vector<Edge> edges_;
  double lambda_ = 1.0;
};

/// Sorts each endpoint pair and the edge list.
std::vector<Edge> canonical_edges(std::vector<Edge> edges);

/// Per-vertex neighbor order, counterclockwise as seen from outside the
/// sphere.
struct RotationSystem {
  std::vector<std::vector<int>> order;

  /// Neighbor preceding `neighbor` in the counterclockwise order at `vertex`.
  int previous(int vertex, int neighbor) const;
};

RotationSystem rotation_system(const EmbeddedGraph& g);

/// One face of the embedding, given by its closed boundary walk.
///
/// walk[i] -> walk[i+1] are the traversed edges; corner_angles[i] is the
/// interior angle at walk[i]. A vertex may occur more than once (cut
/// vertices), and an edge traversed in both directions counts twice in the
/// degree.
struct Face {
  std::vector<int> walk;
  std::vector<double> corner_angles;
  double area = 0.0;

  int degree() const { return static_cast<int>(walk.size()); }
  /// True when no vertex repeats along the walk.
  bool is_simple_cycle() const;
};

/// One interior angle of a face at one of its boundary vertices.
struct Corner {
  int vertex = 0;
  int face = 0;
  double angle = 0.0;
};

struct FaceSet {
  std::vector<Face> faces;
  /// Sorted by face, then by position along the walk.
  std::vector<Corner> corners;

  int size() const { return static_cast<int>(faces.size()); }
  double total_area() const;
};

/// Traces every face as a boundary walk using the geometric rotation
/// system. Every directed edge is used exactly once. Throws EmbeddingError
/// naming the vertex when some vertex has degree below 2.
FaceSet trace_faces(const EmbeddedGraph& g);

struct EulerReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int characteristic = 0;  // V - E + F
  int components = 0;
  bool connected = false;
};

/// Counts from the traced faces plus a union-find component count. F counts
/// boundary walks, so V - E + F = 2 * components.
EulerReport euler_report(const EmbeddedGraph& g, const FaceSet& fs);

int count_components(const EmbeddedGraph& g);

}  // namespace smg
