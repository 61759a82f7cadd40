#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "smg/embedding.hpp"
#include "smg/symmetry.hpp"
#include "smg/verifier.hpp"

namespace smg {

/// Spherical coordinates of one orbit seed.
struct OrbitSeed {
  double theta = 0.0;  // colatitude
  double phi = 0.0;    // longitude
};

/// Unknowns of a tangency system: one seed per orbit plus lambda.
struct OrbitParameters {
  GroupName group = GroupName::O24;
  std::vector<OrbitSeed> seeds;
  double lambda = 0.0;

  Eigen::VectorXd flatten() const;
  static OrbitParameters unflatten(GroupName group, const Eigen::VectorXd& x);
};

/// One equal-length constraint: the edge from orbit_a's seed to the image
/// of orbit_b's seed under group element `element`.
struct EdgeClassRep {
  int orbit_a = 0;
  int orbit_b = 0;
  int element = 0;
};

/// Equations "representative distance of every edge class = lambda".
/// Vertex orbit * |G| + e is element e applied to that orbit's seed.
class TangencySystem {
 public:
  TangencySystem(GroupName group, int orbits, std::vector<EdgeClassRep> classes);

  GroupName group() const { return group_; }
  int orbit_count() const { return orbits_; }
  const std::vector<EdgeClassRep>& classes() const { return classes_; }
  int unknown_count() const { return 2 * orbits_ + 1; }
  int residual_count() const { return static_cast<int>(classes_.size()); }

  Eigen::VectorXd residuals(const Eigen::VectorXd& x) const;
  std::vector<UnitVector> points(const Eigen::VectorXd& x) const;
  /// Every group image of every class representative.
  std::vector<Edge> edges() const;

 private:
  GroupName group_;
  int orbits_;
  std::vector<EdgeClassRep> classes_;
};

/// Builds the tangency system whose classes are the orbits of the contact
/// pairs (distance <= threshold) of the orbits of `seeds`. Every orbit must
/// be generic (|G| distinct points).
TangencySystem tangency_system_from_contacts(GroupName group, const std::vector<UnitVector>& seeds,
                                             double threshold);

struct PolishOptions {
  double tol = 1e-12;
  int max_iterations = 200;
  double fd_step = 1e-7;
  double condition_bound = 1e8;
};

struct PolishResult {
  Eigen::VectorXd x;
  int iterations = 0;
  double residual_max = 0.0;
  /// Largest step norm taken; zero when the start already solves the system.
  double max_step = 0.0;
  std::vector<double> history;
};

/// Damped Gauss-Newton on the class residuals with a central-difference
/// Jacobian. Throws SolverError on rank deficiency or non-convergence.
PolishResult polish_tangencies(const TangencySystem& sys, const Eigen::VectorXd& start,
                               const PolishOptions& options = {});

/// All pairs at angular distance <= threshold, canonical order.
std::vector<Edge> contact_graph_at(const std::vector<UnitVector>& points, double threshold);

/// Knobs of the max-min search that seeds the two-orbit constructions.
struct SearchOptions {
  std::uint64_t seed = 1;
  int starts = 64;
  double temperature_start = 0.1;
  double temperature_end = 1e-4;
  /// Contacts are pairs within min_distance * (1 + contact_slack).
  double contact_slack = 1e-3;
  PolishOptions polish;
};

struct ConstructionResult {
  std::string name;
  EmbeddedGraph graph;
  std::optional<OrbitParameters> parameters;
  double residual_max = 0.0;
  int iterations = 0;
  /// Phase A starts that ended in a certified configuration.
  int certified_starts = 0;
  VerificationReport certificate;
};

ConstructionResult construct_icosahedron();
ConstructionResult construct_snub_cube(const SearchOptions& options = {});
ConstructionResult construct_snub_dodecahedron(const SearchOptions& options = {});
ConstructionResult construct_robinson_48(const SearchOptions& options = {});
ConstructionResult construct_robinson_120(const SearchOptions& options = {});

/// Dispatch by CLI name: icosahedron, snub-cube, robinson-48,
/// snub-dodecahedron, robinson-120.
ConstructionResult construct(std::string_view name, const SearchOptions& options = {});
const std::vector<std::string>& construction_names();

/// Turns solved parameters into a certified graph. Throws ConstructionError
/// if the tangency edges are not exactly the contact graph of a
/// matchstick embedding with the required degree (or min degree 3 when
/// `degree` is empty).
ConstructionResult realize(const TangencySystem& sys, const PolishResult& solved,
                           std::optional<int> degree, std::string name);

/// Experimental: max-min search over `orbits` generic orbits of the group,
/// returning the best certified contact graph regardless of degree.
ConstructionResult solve_orbits(GroupName group, int orbits, const SearchOptions& options = {});

}  // namespace smg
