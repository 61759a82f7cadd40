#include "smg/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>

#include "smg/errors.hpp"

namespace smg {

namespace {

constexpr double kMatchTolerance = 1e-9;
constexpr int kMaxClosureRounds = 64;

bool same_matrix(const Mat3& a, const Mat3& b) {
  return (a - b).cwiseAbs().maxCoeff() < kMatchTolerance;
}

// Lexicographic comparison of row-major entries, equal within tolerance.
bool matrix_less(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (std::abs(a(i, j) - b(i, j)) > kMatchTolerance) return a(i, j) < b(i, j);
    }
  }
  return false;
}

Mat3 rotation(const Vec3& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

std::vector<Mat3> close_under_products(const std::vector<Mat3>& generators) {
  std::vector<Mat3> elems{Mat3::Identity()};
  auto contains = [&](const Mat3& m) {
    return std::any_of(elems.begin(), elems.end(), [&](const Mat3& e) { return same_matrix(e, m); });
  };
  for (int round = 0; round < kMaxClosureRounds; ++round) {
    const std::size_t before = elems.size();
    for (std::size_t i = 0; i < elems.size() && elems.size() <= 1000; ++i) {
      for (const auto& gen : generators) {
        Mat3 m = gen * elems[i];
        if (!contains(m)) elems.push_back(m);
      }
    }
    if (elems.size() == before) return elems;
  }
  throw Error("rotation group did not close; bad generators");
}

RotationGroup build(GroupName name) {
  std::vector<Mat3> gens;
  const double pi = std::numbers::pi;
  if (name == GroupName::O24) {
    gens = {rotation(Vec3::UnitZ(), pi / 2.0), rotation(Vec3(1, 1, 1), 2.0 * pi / 3.0)};
  } else {
    const double phi = std::numbers::phi;
    gens = {rotation(Vec3(0, 1, phi), 2.0 * pi / 5.0), rotation(Vec3(1, 1, 1), 2.0 * pi / 3.0)};
  }
  auto elems = close_under_products(gens);
  // Snap rounding noise so products of cached elements agree bit-for-bit
  // with re-orthonormalized matrices.
  for (auto& m : elems) {
    Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    m = svd.matrixU() * svd.matrixV().transpose();
  }
  std::sort(elems.begin(), elems.end(), matrix_less);
  return RotationGroup(name, std::move(elems));
}

}  // namespace

const char* to_string(GroupName name) { return name == GroupName::O24 ? "O24" : "I60"; }

GroupName group_from_string(const std::string& s) {
  if (s == "O" || s == "O24") return GroupName::O24;
  if (s == "I" || s == "I60") return GroupName::I60;
  throw InvalidInput("unknown rotation group '" + s + "' (expected O or I)");
}

RotationGroup::RotationGroup(GroupName name, std::vector<Mat3> elements)
    : name_(name), elements_(std::move(elements)) {
  const int n = order();
  table_.assign(static_cast<std::size_t>(n) * n, -1);
  inverse_.assign(n, -1);
  identity_ = index_of(Mat3::Identity());
  if (identity_ < 0) throw Error("rotation group lacks the identity");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int c = index_of(elements_[a] * elements_[b]);
      if (c < 0) throw Error("rotation group is not closed under products");
      table_[a * n + b] = c;
      if (c == identity_) inverse_[a] = b;
    }
    if (inverse_[a] < 0) throw Error("rotation group element without inverse");
  }
}

int RotationGroup::index_of(const Mat3& m) const {
  for (int i = 0; i < order(); ++i) {
    if (same_matrix(elements_[i], m)) return i;
  }
  return -1;
}

const RotationGroup& group_elements(GroupName name) {
  static const RotationGroup octahedral = build(GroupName::O24);
  static const RotationGroup icosahedral = build(GroupName::I60);
  return name == GroupName::O24 ? octahedral : icosahedral;
}

std::vector<UnitVector> orbit_images(const RotationGroup& group, const UnitVector& seed) {
  std::vector<UnitVector> out;
  out.reserve(group.order());
  for (const auto& m : group.elements()) out.push_back(UnitVector::normalized(m * seed.vec()));
  return out;
}

std::vector<UnitVector> orbit(const RotationGroup& group, const UnitVector& seed,
                              double dedup_tol) {
  std::vector<UnitVector> out;
  for (const auto& p : orbit_images(group, seed)) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const UnitVector& q) {
      return (p.vec() - q.vec()).norm() < dedup_tol;
    });
    if (!dup) out.push_back(p);
  }
  return out;
}

std::vector<std::vector<int>> point_permutations(const RotationGroup& group,
                                                 const std::vector<UnitVector>& points,
                                                 double tol) {
  std::vector<std::vector<int>> perms(group.order(), std::vector<int>(points.size(), -1));
  for (int gi = 0; gi < group.order(); ++gi) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Vec3 img = group.element(gi) * points[i].vec();
      for (std::size_t j = 0; j < points.size(); ++j) {
        if ((points[j].vec() - img).norm() <= tol) {
          perms[gi][i] = static_cast<int>(j);
          break;
        }
      }
      if (perms[gi][i] < 0) {
        throw InvalidInput("point set is not invariant under " + std::string(to_string(group.name())) +
                           " (point " + std::to_string(i) + ")");
      }
    }
  }
  return perms;
}

std::vector<int> EdgeClasses::sizes() const {
  std::vector<int> s;
  for (const auto& c : classes) s.push_back(static_cast<int>(c.size()));
  return s;
}

EdgeClasses edge_classes(const std::vector<UnitVector>& points, const std::vector<Edge>& edges,
                         const RotationGroup& group, double tol) {
  const auto perms = point_permutations(group, points, tol);
  const auto sorted = canonical_edges(edges);
  std::map<Edge, int> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);

  std::vector<int> cls(sorted.size(), -1);
  EdgeClasses out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(out.classes.size());
    out.classes.emplace_back();
    for (const auto& p : perms) {
      Edge img{p[sorted[i].u], p[sorted[i].v]};
      if (img.u > img.v) std::swap(img.u, img.v);
      const auto it = index.find(img);
      if (it == index.end()) {
        throw InvalidInput("edge set is not invariant under " + std::string(to_string(group.name())));
      }
      if (cls[it->second] < 0) {
        cls[it->second] = id;
        out.classes[id].push_back(img);
      }
    }
    std::sort(out.classes[id].begin(), out.classes[id].end());
  }
  return out;
}

}  // namespace smg
