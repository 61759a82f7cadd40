#include "smg/discharging.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "smg/errors.hpp"
#include "smg/verifier.hpp"

namespace smg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAreaWeight = 3.0 / (2.0 * kPi);

double sum(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s;
}

}  // namespace

double charge_function(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0 * kPi)) {
    throw InvalidInput("charge_function: angle outside (0, 2pi)");
  }
  if (alpha <= kPi / 3.0) return 0.0;
  if (alpha >= 2.0 * kPi / 3.0) return 0.5;
  return std::clamp(kAreaWeight * alpha - 0.5, 0.0, 0.5);
}

ChargeLedger initial_charges(const EmbeddedGraph& g, const FaceSet& fs) {
  ChargeLedger l;
  for (int d : g.degrees()) l.vertex_initial.push_back(d / 2.0 - 3.0);
  for (const auto& f : fs.faces) l.face_initial.push_back(f.degree() - 3.0 + kAreaWeight * f.area);
  l.total_initial = sum(l.vertex_initial) + sum(l.face_initial);
  return l;
}

ChargeLedger run_transfers(const EmbeddedGraph& g, const FaceSet& fs, ChargeLedger l) {
  l.transfers.clear();
  for (const auto& c : fs.corners) {
    l.transfers.push_back({c.face, c.vertex, c.angle, charge_function(c.angle)});
  }
  std::stable_sort(l.transfers.begin(), l.transfers.end(), [](const Transfer& a, const Transfer& b) {
    return a.face != b.face ? a.face < b.face : a.vertex < b.vertex;
  });
  l.vertex_final = l.vertex_initial;
  l.face_final = l.face_initial;
  for (const auto& t : l.transfers) {
    l.vertex_final[t.vertex] += t.amount;
    l.face_final[t.face] -= t.amount;
  }
  l.total_final = sum(l.vertex_final) + sum(l.face_final);

  const auto deg = g.degrees();
  l.equality.connected = count_components(g) == 1;
  l.equality.all_degree_5 =
      !deg.empty() && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 5; });
  const auto diag = face_diagnostics(g, fs);
  l.equality.all_faces_345 = diag.all_faces_345;
  l.equality.all_angles_in_interval = diag.angles_in_interval;
  return l;
}

AuditResult audit(const EmbeddedGraph& g, double tol) {
  AuditResult r;
  r.faces = trace_faces(g);
  r.euler = euler_report(g, r.faces);
  r.ledger = run_transfers(g, r.faces, initial_charges(g, r.faces));
  const auto& l = r.ledger;

  r.closed_form_total = 3.0 * r.euler.edges - 3.0 * r.euler.vertices - 3.0 * r.euler.faces +
                        kAreaWeight * r.faces.total_area();
  r.min_vertex_final = l.vertex_final.empty()
                           ? 0.0
                           : *std::min_element(l.vertex_final.begin(), l.vertex_final.end());
  r.min_face_final =
      l.face_final.empty() ? 0.0 : *std::min_element(l.face_final.begin(), l.face_final.end());
  for (double x : l.vertex_final) r.max_abs_final = std::max(r.max_abs_final, std::abs(x));
  for (double x : l.face_final) r.max_abs_final = std::max(r.max_abs_final, std::abs(x));

  r.total_nonpositive = l.total_initial <= tol;
  r.finals_nonnegative = std::min(r.min_vertex_final, r.min_face_final) >= -tol;
  r.finals_zero = r.max_abs_final <= tol;

  if (!r.finals_nonnegative) {
    const auto report = verify_all(g, {.min_degree = 5, .regular = false, .tol = tol});
    r.theorem_consistent = !report.overall;
  }
  return r;
}

}  // namespace smg
