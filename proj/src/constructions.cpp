#include "smg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "smg/discharging.hpp"
#include "smg/errors.hpp"

namespace smg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGenericSeparation = 1e-6;

// Orbit representatives are the images closest to this direction, which
// keeps canonical seeds well away from the coordinate poles and from the
// longitude seam.
const Vec3& canonical_direction() {
  static const Vec3 d = Vec3(-1.0, 0.27, 0.13).normalized();
  return d;
}

double wrap_longitude(double phi) {
  phi = std::fmod(phi, 2.0 * kPi);
  return phi < 0.0 ? phi + 2.0 * kPi : phi;
}

OrbitSeed to_seed(const UnitVector& p) {
  return {std::acos(std::clamp(p.z(), -1.0, 1.0)), wrap_longitude(std::atan2(p.y(), p.x()))};
}


UnitVector canonical_representative(const RotationGroup& group, const UnitVector& p) {
  const auto images = orbit_images(group, p);
  return *std::max_element(images.begin(), images.end(), [](const UnitVector& a, const UnitVector& b) {
    return a.vec().dot(canonical_direction()) < b.vec().dot(canonical_direction());
  });
}

std::vector<UnitVector> seeds_of(const Eigen::VectorXd& x, int orbits) {
  std::vector<UnitVector> s;
  for (int k = 0; k < orbits; ++k) s.push_back(UnitVector::from_spherical(x[2 * k], x[2 * k + 1]));
  return s;
}

// Canonical representative per orbit, orbits sorted by (theta, phi).
Eigen::VectorXd canonical_seeds(const RotationGroup& group, const Eigen::VectorXd& x, int orbits) {
  std::vector<OrbitSeed> seeds;
  for (const auto& s : seeds_of(x, orbits)) seeds.push_back(to_seed(canonical_representative(group, s)));
  std::sort(seeds.begin(), seeds.end(), [](const OrbitSeed& a, const OrbitSeed& b) {
    return a.theta != b.theta ? a.theta < b.theta : a.phi < b.phi;
  });
  Eigen::VectorXd out(x.size());
  for (int k = 0; k < orbits; ++k) {
    out[2 * k] = seeds[k].theta;
    out[2 * k + 1] = seeds[k].phi;
  }
  for (Eigen::Index i = 2 * orbits; i < x.size(); ++i) out[i] = x[i];
  return out;
}

// Distances from each seed to every other point of the configuration; by
// symmetry these realize every pairwise distance.
std::vector<double> seed_distances(const RotationGroup& group, const std::vector<UnitVector>& seeds) {
  std::vector<double> d;
  d.reserve(seeds.size() * seeds.size() * group.order());
  for (std::size_t a = 0; a < seeds.size(); ++a) {
    for (std::size_t b = 0; b < seeds.size(); ++b) {
      for (int g = 0; g < group.order(); ++g) {
        if (a == b && g == group.identity()) continue;
        const Vec3 img = group.element(g) * seeds[b].vec();
        d.push_back(std::atan2(seeds[a].vec().cross(img).norm(), seeds[a].vec().dot(img)));
      }
    }
  }
  return d;
}

double min_distance(const RotationGroup& group, const Eigen::VectorXd& x, int orbits) {
  const auto d = seed_distances(group, seeds_of(x, orbits));
  return *std::min_element(d.begin(), d.end());
}

double softmin(const std::vector<double>& d, double temperature) {
  const double m = *std::min_element(d.begin(), d.end());
  double s = 0.0;
  for (double v : d) s += std::exp(-(v - m) / temperature);
  return m - temperature * std::log(s);
}

// BFGS with Armijo backtracking, minimizing f. Small dimension, so the
// dense inverse-Hessian update is fine.
template <class F>
Eigen::VectorXd bfgs_minimize(const F& f, Eigen::VectorXd x, int max_iterations) {
  const Eigen::Index n = x.size();
  constexpr double h = 1e-7;
  auto gradient = [&](const Eigen::VectorXd& p) {
    Eigen::VectorXd g(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::VectorXd a = p, b = p;
      a[i] += h;
      b[i] -= h;
      g[i] = (f(a) - f(b)) / (2.0 * h);
    }
    return g;
  };
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(n, n) * 1e-2;
  double fx = f(x);
  Eigen::VectorXd g = gradient(x);
  for (int it = 0; it < max_iterations && g.norm() > 1e-9; ++it) {
    Eigen::VectorXd dir = -hinv * g;
    if (dir.dot(g) >= 0.0) {
      hinv = Eigen::MatrixXd::Identity(n, n) * 1e-2;
      dir = -hinv * g;
    }
    double step = 1.0;
    Eigen::VectorXd xn;
    double fn = fx;
    while (step > 1e-12) {
      xn = x + step * dir;
      fn = f(xn);
      if (fn <= fx + 1e-4 * step * g.dot(dir)) break;
      step *= 0.5;
    }
    if (step <= 1e-12) break;
    const Eigen::VectorXd gn = gradient(xn);
    const Eigen::VectorXd s = xn - x;
    const Eigen::VectorXd y = gn - g;
    const double sy = s.dot(y);
    if (sy > 1e-16) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
      hinv = (eye - rho * s * y.transpose()) * hinv * (eye - rho * y * s.transpose()) +
             rho * s * s.transpose();
    }
    x = xn;
    fx = fn;
    g = gn;
    if (s.norm() < 1e-15) break;
  }
  return x;
}

// Phase A: maximize a softmin of all pairwise distances over the orbit
// seeds, halving the temperature per stage.
Eigen::VectorXd max_min_search(const RotationGroup& group, int orbits, const SearchOptions& opt,
                               std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd x(2 * orbits);
  for (int k = 0; k < orbits; ++k) {
    const auto s = to_seed(UnitVector::normalized(Vec3(normal(rng), normal(rng), normal(rng))));
    x[2 * k] = s.theta;
    x[2 * k + 1] = s.phi;
  }
  for (double t = opt.temperature_start; t >= opt.temperature_end * (1.0 - 1e-9); t *= 0.5) {
    x = canonical_seeds(group, x, orbits);
    auto objective = [&](const Eigen::VectorXd& p) {
      return -softmin(seed_distances(group, seeds_of(p, orbits)), t);
    };
    x = bfgs_minimize(objective, x, 400);
  }
  return canonical_seeds(group, x, orbits);
}

struct Candidate {
  Eigen::VectorXd x;
  ConstructionResult result;
};

bool lexicographically_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Phase A + Phase B over all starts; keeps the certified candidate with the
// smallest parameter vector (or the largest lambda when `prefer_lambda`).
ConstructionResult orbit_pipeline(GroupName group_name, int orbits, std::optional<int> degree,
                                  const SearchOptions& opt, const std::string& name,
                                  bool prefer_lambda) {
  const RotationGroup& group = group_elements(group_name);
  std::optional<Candidate> best;
  int certified = 0;
  std::map<std::string, int> rejections;
  for (int start = 0; start < opt.starts; ++start) {
    std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(start));
    const Eigen::VectorXd seeds = max_min_search(group, orbits, opt, rng);
    const double dmin = min_distance(group, seeds, orbits);
    if (!(dmin > kGenericSeparation)) {
      ++rejections["degenerate orbit"];
      continue;
    }
    try {
      const auto seed_points = seeds_of(seeds, orbits);
      const double threshold = dmin * (1.0 + opt.contact_slack);
      if (degree) {
        const auto contacts = contact_graph_at(
            [&] {
              std::vector<UnitVector> pts;
              for (const auto& s : seed_points) {
                const auto img = orbit_images(group, s);
                pts.insert(pts.end(), img.begin(), img.end());
              }
              return pts;
            }(),
            threshold);
        std::vector<int> deg(static_cast<std::size_t>(orbits) * group.order(), 0);
        for (const auto& e : contacts) {
          ++deg[e.u];
          ++deg[e.v];
        }
        if (std::any_of(deg.begin(), deg.end(), [&](int d) { return d != *degree; })) {
          ++rejections["contact degree differs from " + std::to_string(*degree)];
          continue;
        }
      }
      const TangencySystem sys = tangency_system_from_contacts(group_name, seed_points, threshold);
      if (sys.residual_count() < sys.unknown_count()) {
        ++rejections["underdetermined tangency system"];
        continue;
      }
      Eigen::VectorXd x0(sys.unknown_count());
      x0 << seeds, dmin;
      const PolishResult solved = polish_tangencies(sys, x0, opt.polish);
      ConstructionResult r = realize(sys, solved, degree, name);
      ++certified;
      const bool better =
          !best || (prefer_lambda ? solved.x[solved.x.size() - 1] > best->x[best->x.size() - 1] + 1e-12
                                  : lexicographically_less(solved.x, best->x));
      if (better) best = Candidate{solved.x, std::move(r)};
    } catch (const SolverError& e) {
      ++rejections[std::string("solver: ") + e.what()];
    } catch (const ConstructionError& e) {
      ++rejections["certificate failed"];
    } catch (const InvalidInput& e) {
      ++rejections[std::string("invalid: ") + e.what()];
    }
  }
  if (!best) {
    std::ostringstream os;
    os << name << ": none of " << opt.starts
       << " max-min starts reached a certified contact structure; try more --starts or another "
          "--seed. Rejections:";
    for (const auto& [why, n] : rejections) os << "\n  " << n << " x " << why;
    throw ConstructionError(os.str());
  }
  best->result.certified_starts = certified;
  return std::move(best->result);
}

}  // namespace

Eigen::VectorXd OrbitParameters::flatten() const {
  Eigen::VectorXd x(2 * seeds.size() + 1);
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    x[2 * k] = seeds[k].theta;
    x[2 * k + 1] = seeds[k].phi;
  }
  x[x.size() - 1] = lambda;
  return x;
}

OrbitParameters OrbitParameters::unflatten(GroupName group, const Eigen::VectorXd& x) {
  OrbitParameters p;
  p.group = group;
  for (Eigen::Index k = 0; 2 * k + 1 < x.size(); ++k) p.seeds.push_back({x[2 * k], x[2 * k + 1]});
  p.lambda = x[x.size() - 1];
  return p;
}

TangencySystem::TangencySystem(GroupName group, int orbits, std::vector<EdgeClassRep> classes)
    : group_(group), orbits_(orbits), classes_(std::move(classes)) {
  const int n = group_elements(group).order();
  for (const auto& c : classes_) {
    if (c.orbit_a < 0 || c.orbit_a >= orbits_ || c.orbit_b < 0 || c.orbit_b >= orbits_ ||
        c.element < 0 || c.element >= n) {
      throw InvalidInput("edge class representative out of range");
    }
  }
}

Eigen::VectorXd TangencySystem::residuals(const Eigen::VectorXd& x) const {
  const RotationGroup& group = group_elements(group_);
  const auto seeds = seeds_of(x, orbits_);
  const double lambda = x[unknown_count() - 1];
  Eigen::VectorXd r(residual_count());
  for (int i = 0; i < residual_count(); ++i) {
    const auto& c = classes_[i];
    const Vec3 img = group.element(c.element) * seeds[c.orbit_b].vec();
    const Vec3& a = seeds[c.orbit_a].vec();
    r[i] = std::atan2(a.cross(img).norm(), a.dot(img)) - lambda;
  }
  return r;
}

std::vector<UnitVector> TangencySystem::points(const Eigen::VectorXd& x) const {
  const RotationGroup& group = group_elements(group_);
  std::vector<UnitVector> pts;
  for (const auto& s : seeds_of(x, orbits_)) {
    const auto img = orbit_images(group, s);
    pts.insert(pts.end(), img.begin(), img.end());
  }
  return pts;
}

std::vector<Edge> TangencySystem::edges() const {
  const RotationGroup& group = group_elements(group_);
  const int n = group.order();
  std::vector<Edge> out;
  for (const auto& c : classes_) {
    for (int g = 0; g < n; ++g) {
      Edge e{c.orbit_a * n + g, c.orbit_b * n + group.product(g, c.element)};
      if (e.u > e.v) std::swap(e.u, e.v);
      out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Edge> contact_graph_at(const std::vector<UnitVector>& points, double threshold) {
  if (!(threshold > 0.0)) throw InvalidInput("contact threshold must be positive");
  std::vector<Edge> edges;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (angular_distance(points[i], points[j]) <= threshold) edges.push_back({i, j});
    }
  }
  return edges;
}

TangencySystem tangency_system_from_contacts(GroupName group_name,
                                             const std::vector<UnitVector>& seeds,
                                             double threshold) {
  const RotationGroup& group = group_elements(group_name);
  const int n = group.order();
  std::vector<UnitVector> pts;
  for (const auto& s : seeds) {
    const auto img = orbit_images(group, s);
    pts.insert(pts.end(), img.begin(), img.end());
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (angular_distance(pts[i], pts[j]) <= kGenericSeparation) {
        throw ConstructionError("orbits are not generic: points " + std::to_string(i) + " and " +
                                std::to_string(j) + " coincide");
      }
    }
  }
  const auto classes = edge_classes(pts, contact_graph_at(pts, threshold), group);
  std::vector<EdgeClassRep> reps;
  for (const auto& cls : classes.classes) {
    const Edge& e = cls.front();
    const int ga = e.u % n;
    const int gb = e.v % n;
    reps.push_back({e.u / n, e.v / n, group.product(group.inverse(ga), gb)});
  }
  return TangencySystem(group_name, static_cast<int>(seeds.size()), std::move(reps));
}

PolishResult polish_tangencies(const TangencySystem& sys, const Eigen::VectorXd& start,
                               const PolishOptions& opt) {
  if (start.size() != sys.unknown_count()) throw InvalidInput("parameter vector has the wrong size");
  PolishResult out;
  out.x = start;
  Eigen::VectorXd r = sys.residuals(out.x);
  out.history.push_back(r.cwiseAbs().maxCoeff());

  auto jacobian = [&](const Eigen::VectorXd& x, bool central) {
    Eigen::MatrixXd j(sys.residual_count(), sys.unknown_count());
    const Eigen::VectorXd r0 = central ? Eigen::VectorXd() : sys.residuals(x);
    for (int i = 0; i < sys.unknown_count(); ++i) {
      Eigen::VectorXd xp = x;
      xp[i] += opt.fd_step;
      if (central) {
        Eigen::VectorXd xm = x;
        xm[i] -= opt.fd_step;
        j.col(i) = (sys.residuals(xp) - sys.residuals(xm)) / (2.0 * opt.fd_step);
      } else {
        j.col(i) = (sys.residuals(xp) - r0) / opt.fd_step;
      }
    }
    return j;
  };

  bool validated = false;
  while (out.history.back() > opt.tol) {
    if (out.iterations >= opt.max_iterations) {
      throw SolverError(SolverError::Kind::NoConvergence,
                        "no convergence after " + std::to_string(opt.max_iterations) +
                            " iterations (max residual " + std::to_string(out.history.back()) + ")",
                        out.history);
    }
    const Eigen::MatrixXd j = jacobian(out.x, true);
    if (!validated) {
      const Eigen::MatrixXd jf = jacobian(out.x, false);
      if ((j - jf).cwiseAbs().maxCoeff() > 1e-4 * std::max(1.0, j.cwiseAbs().maxCoeff())) {
        throw SolverError(SolverError::Kind::BadJacobian,
                          "central and forward difference Jacobians disagree", out.history);
      }
      validated = true;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(j, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (j.rows() < j.cols() || sv[sv.size() - 1] <= 0.0 ||
        sv[0] / sv[sv.size() - 1] > opt.condition_bound) {
      throw SolverError(SolverError::Kind::Singular,
                        "tangency Jacobian is rank deficient or ill-conditioned", out.history);
    }
    const Eigen::VectorXd step = -svd.solve(r);
    const double norm0 = r.norm();
    double damping = 1.0;
    Eigen::VectorXd xn, rn;
    while (true) {
      xn = out.x + damping * step;
      rn = sys.residuals(xn);
      if (rn.norm() < norm0) break;
      damping *= 0.5;
      if (damping < 1e-10) {
        throw SolverError(SolverError::Kind::NoConvergence,
                          "damped Gauss-Newton stalled at max residual " +
                              std::to_string(out.history.back()),
                          out.history);
      }
    }
    out.max_step = std::max(out.max_step, (damping * step).norm());
    out.x = xn;
    r = rn;
    ++out.iterations;
    out.history.push_back(r.cwiseAbs().maxCoeff());
  }
  out.residual_max = out.history.back();
  return out;
}

ConstructionResult realize(const TangencySystem& sys, const PolishResult& solved,
                           std::optional<int> degree, std::string name) {
  const double lambda = solved.x[sys.unknown_count() - 1];
  if (!(lambda > 0.0 && lambda < kPi)) {
    throw ConstructionError(name + ": solved lambda outside (0, pi)");
  }
  ConstructionResult r;
  r.name = std::move(name);
  r.graph = EmbeddedGraph(sys.points(solved.x), sys.edges(), lambda);
  r.parameters = OrbitParameters::unflatten(sys.group(), solved.x);
  r.residual_max = solved.residual_max;
  r.iterations = solved.iterations;
  r.certificate = verify_all(r.graph, {.min_degree = degree.value_or(2),
                                       .regular = degree.has_value(),
                                       .tol = 1e-9});
  if (!r.certificate.overall) {
    std::ostringstream os;
    os << r.name << ": solution is not a certified matchstick contact graph:";
    for (const auto& c : r.certificate.checks) {
      if (!c.passed) os << ' ' << c.name << " (" << c.summary << ')';
    }
    throw ConstructionError(os.str());
  }
  if (degree == 5) {
    const auto a = audit(r.graph);
    if (!a.finals_zero || !a.ledger.equality.all()) {
      throw ConstructionError(r.name + ": discharging audit does not reach the equality case");
    }
  }
  return r;
}

ConstructionResult construct_icosahedron() {
  const double phi = std::numbers::phi;
  std::vector<UnitVector> pts;
  for (double s1 : {-1.0, 1.0}) {
    for (double s2 : {-1.0, 1.0}) {
      const double a = s1, b = s2 * phi;
      pts.push_back(UnitVector::normalized(Vec3(0.0, a, b)));
      pts.push_back(UnitVector::normalized(Vec3(a, b, 0.0)));
      pts.push_back(UnitVector::normalized(Vec3(b, 0.0, a)));
    }
  }
  std::sort(pts.begin(), pts.end(), [](const UnitVector& p, const UnitVector& q) {
    return std::lexicographical_compare(p.vec().begin(), p.vec().end(), q.vec().begin(),
                                        q.vec().end());
  });
  const double lambda = std::acos(1.0 / std::sqrt(5.0));
  ConstructionResult r;
  r.name = "icosahedron";
  r.graph = EmbeddedGraph(pts, contact_graph_at(pts, lambda + 1e-6), lambda);
  double worst = 0.0;
  for (const auto& e : r.graph.edges()) {
    worst = std::max(worst, std::abs(angular_distance(pts[e.u], pts[e.v]) - lambda));
  }
  r.residual_max = worst;
  r.certificate = verify_all(r.graph, {.min_degree = 5, .regular = true, .tol = 1e-9});
  if (!r.certificate.overall) throw ConstructionError("icosahedron failed its certificate");
  return r;
}

ConstructionResult construct_snub_cube(const SearchOptions& options) {
  return orbit_pipeline(GroupName::O24, 1, 5, options, "snub-cube", false);
}

ConstructionResult construct_snub_dodecahedron(const SearchOptions& options) {
  return orbit_pipeline(GroupName::I60, 1, 5, options, "snub-dodecahedron", false);
}

ConstructionResult construct_robinson_48(const SearchOptions& options) {
  return orbit_pipeline(GroupName::O24, 2, 5, options, "robinson-48", false);
}

ConstructionResult construct_robinson_120(const SearchOptions& options) {
  return orbit_pipeline(GroupName::I60, 2, 5, options, "robinson-120", false);
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{"icosahedron", "snub-cube", "robinson-48",
                                              "snub-dodecahedron", "robinson-120"};
  return names;
}

ConstructionResult construct(std::string_view name, const SearchOptions& options) {
  if (name == "icosahedron") return construct_icosahedron();
  if (name == "snub-cube") return construct_snub_cube(options);
  if (name == "snub-dodecahedron") return construct_snub_dodecahedron(options);
  if (name == "robinson-48") return construct_robinson_48(options);
  if (name == "robinson-120") return construct_robinson_120(options);
  throw InvalidInput("unknown construction '" + std::string(name) + "'");
}

ConstructionResult solve_orbits(GroupName group, int orbits, const SearchOptions& options) {
  if (orbits < 1) throw InvalidInput("need at least one orbit");
  return orbit_pipeline(group, orbits, std::nullopt, options,
                        std::string(to_string(group)) + "-" + std::to_string(orbits) + "-orbits",
                        true);
}

}  // namespace smg
