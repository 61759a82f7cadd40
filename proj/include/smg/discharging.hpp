#pragma once

#include <vector>

#include "smg/embedding.hpp"

namespace smg {

/// Charge moved from a face to a vertex across a corner of angle alpha:
/// 0 up to pi/3, linear (3/2pi) alpha - 1/2 in between, 1/2 from 2pi/3 on.
/// Throws InvalidInput unless 0 < alpha < 2pi.
double charge_function(double alpha);

struct Transfer {
  int face = 0;
  int vertex = 0;
  double angle = 0.0;
  double amount = 0.0;
};

/// The conditions that hold exactly when every final charge vanishes for a
/// graph of minimum degree 5.
struct EqualityFlags {
  bool connected = false;
  bool all_faces_345 = false;
  bool all_angles_in_interval = false;
  bool all_degree_5 = false;

  bool all() const { return connected && all_faces_345 && all_angles_in_interval && all_degree_5; }
};

struct ChargeLedger {
  std::vector<double> vertex_initial;
  std::vector<double> face_initial;
  /// Sorted by face, then vertex.
  std::vector<Transfer> transfers;
  std::vector<double> vertex_final;
  std::vector<double> face_final;
  double total_initial = 0.0;
  double total_final = 0.0;
  EqualityFlags equality;
};

/// deg(v)/2 - 3 per vertex and deg(f) - 3 + (3/2pi) area(f) per face.
ChargeLedger initial_charges(const EmbeddedGraph& g, const FaceSet& fs);

/// One transfer of charge_function(angle) per corner record, then finals.
ChargeLedger run_transfers(const EmbeddedGraph& g, const FaceSet& fs, ChargeLedger ledger);

struct AuditResult {
  ChargeLedger ledger;
  FaceSet faces;
  EulerReport euler;
  double min_vertex_final = 0.0;
  double min_face_final = 0.0;
  double max_abs_final = 0.0;
  /// Closed form 3|E| - 3|V| - 3|F| + (3/2pi) * total area.
  double closed_form_total = 0.0;
  bool total_nonpositive = false;
  bool finals_nonnegative = false;
  bool finals_zero = false;
  /// False only if the graph passes the min-degree-5 matchstick checks and
  /// still has a negative final charge, which the theorem rules out.
  bool theorem_consistent = true;
};

/// Full audit: traces faces, computes the ledger and equality flags.
/// `tol` is the slack for the sign and zero tests.
AuditResult audit(const EmbeddedGraph& g, double tol = 1e-9);

}  // namespace smg
