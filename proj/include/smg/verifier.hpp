#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smg/embedding.hpp"

namespace smg {

/// Evidence attached to a failed check: the offending vertex, vertex pair,
/// or pair of edges (four vertex indices), plus a measured value.
struct Witness {
  std::vector<int> ids;
  double value = 0.0;
  std::string detail;
  std::optional<UnitVector> point;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<Witness> witnesses;
  /// Smallest slack of a strict inequality (e.g. min non-edge distance
  /// minus lambda). Absent for purely combinatorial checks.
  std::optional<double> margin;
  std::string summary;
};

struct VerifyProfile {
  int min_degree = 5;
  /// Require every degree to equal min_degree exactly.
  bool regular = false;
  double tol = 1e-9;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  VerifyProfile profile;
  bool overall = false;

  const CheckResult* find(const std::string& name) const;
};

CheckResult verify_edge_lengths(const EmbeddedGraph& g, double tol);
CheckResult verify_noncrossing(const EmbeddedGraph& g);
CheckResult verify_min_degree(const EmbeddedGraph& g, int k);
CheckResult verify_regular(const EmbeddedGraph& g, int k);

/// Every non-adjacent pair must be farther apart than lambda + tol; the
/// margin is min over non-adjacent pairs of (distance - lambda).
CheckResult verify_separation(const EmbeddedGraph& g, double tol);

/// The pairs at distance <= lambda + tol are exactly the edges.
CheckResult verify_contact_graph(const EmbeddedGraph& g, double tol);

/// Face tracing succeeds, face areas sum to 4*pi per component, and the
/// corner angles at each vertex sum to 2*pi.
CheckResult verify_faces(const EmbeddedGraph& g);

VerificationReport verify_all(const EmbeddedGraph& g, const VerifyProfile& profile = {});

/// Properties that the five target graphs have but that are not axioms:
/// face sizes, the corner-angle interval (pi/3, 2pi/3], and the diagonals
/// of quadrilateral and pentagonal faces.
struct FaceDiagnostics {
  int triangles = 0;
  int quadrilaterals = 0;
  int pentagons = 0;
  int other_faces = 0;
  bool all_faces_345 = false;
  double min_corner_angle = 0.0;
  double max_corner_angle = 0.0;
  bool angles_in_interval = false;
  int diagonals_checked = 0;
  /// min over diagonals of (diagonal length - lambda); +inf when there are none.
  double min_diagonal_margin = 0.0;
  bool diagonals_exceed_lambda = false;
};

FaceDiagnostics face_diagnostics(const EmbeddedGraph& g, const FaceSet& fs, double tol = 1e-9);

/// Whether the vertex set is closed under v -> -v within tol.
bool is_centrally_symmetric(const std::vector<UnitVector>& points, double tol = 1e-9);

}  // namespace smg
