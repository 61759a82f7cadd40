#include "smg/sphgeom.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "smg/errors.hpp"

namespace smg {

namespace {

constexpr double kPi = std::numbers::pi;

bool same_point(const UnitVector& p, const UnitVector& q) {
  return (p.vec() - q.vec()).norm() < kIdentityTolerance;
}

}  // namespace

UnitVector::UnitVector(double x, double y, double z) : UnitVector(Vec3(x, y, z)) {}

UnitVector::UnitVector(const Vec3& v) {
  const double n = v.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
    throw InvalidInput("not a unit vector (norm " + std::to_string(n) + ")");
  }
  // Leave already-normalized input bit-identical.
  v_ = std::abs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon() ? v : Vec3(v / n);
}

UnitVector UnitVector::normalized(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidInput("cannot normalize a zero or non-finite vector");
  }
  return UnitVector(v / n, Trusted{});
}

UnitVector UnitVector::from_spherical(double theta, double phi) {
  const double s = std::sin(theta);
  return normalized(Vec3(s * std::cos(phi), s * std::sin(phi), std::cos(theta)));
}

UnitVector UnitVector::operator-() const { return UnitVector(-v_, Trusted{}); }

double angular_distance(const UnitVector& u, const UnitVector& v) {
  return std::atan2(u.vec().cross(v.vec()).norm(), u.vec().dot(v.vec()));
}

Vec3 tangent_direction(const UnitVector& at, const UnitVector& toward) {
  const Vec3 axis = at.vec().cross(toward.vec());
  const double s = axis.norm();
  if (s < kIdentityTolerance) {
    throw DegenerateGeometry("tangent direction undefined for coincident or antipodal points");
  }
  // axis x at lies in the tangent plane and points toward `toward`.
  return axis.cross(at.vec()) / s;
}

double corner_angle(const UnitVector& prev, const UnitVector& apex,
                    const UnitVector& next, Sweep sweep) {
  const Vec3 tp = tangent_direction(apex, prev);
  const Vec3 tn = tangent_direction(apex, next);
  double ccw = std::atan2(apex.vec().dot(tp.cross(tn)), tp.dot(tn));
  if (ccw < 0.0) ccw += 2.0 * kPi;
  if (ccw < kIdentityTolerance || ccw > 2.0 * kPi - kIdentityTolerance) {
    throw DegenerateGeometry("corner with coincident tangent directions");
  }
  return sweep == Sweep::Counterclockwise ? ccw : 2.0 * kPi - ccw;
}

Arc::Arc(const UnitVector& a, const UnitVector& b) : a_(a), b_(b) {
  const Vec3 n = a.vec().cross(b.vec());
  const double s = n.norm();
  if (s < kIdentityTolerance) {
    throw InvalidInput("arc endpoints are coincident or antipodal");
  }
  normal_ = n / s;
  length_ = angular_distance(a, b);
}

double Arc::parameter_of(const Vec3& p) const {
  return std::atan2(normal_.dot(a_.vec().cross(p)), a_.vec().dot(p));
}

UnitVector Arc::point_at(double t) const {
  const Vec3 e2 = normal_.cross(a_.vec());
  return UnitVector::normalized(std::cos(t) * a_.vec() + std::sin(t) * e2);
}

IntersectionResult arc_intersection(const Arc& s, const Arc& t) {
  std::array<UnitVector, 2> shared;
  int n_shared = 0;
  for (const auto& p : {s.a(), s.b()}) {
    for (const auto& q : {t.a(), t.b()}) {
      if (same_point(p, q) && n_shared < 2) shared[n_shared++] = p;
    }
  }

  const Vec3 axis = s.normal().cross(t.normal());
  if (axis.norm() < kCoplanarTolerance) {
    // Same great circle: intersect the parameter intervals of the two arcs
    // on s's circle, modulo 2*pi.
    const bool aligned = s.normal().dot(t.normal()) > 0.0;
    const double start = s.parameter_of((aligned ? t.a() : t.b()).vec());
    double overlap = -1.0;
    for (int k = -1; k <= 1; ++k) {
      const double lo = start + 2.0 * kPi * k;
      const double hi = lo + t.length();
      overlap = std::max(overlap, std::min(hi, s.length()) - std::max(lo, 0.0));
    }
    if (overlap > kIdentityTolerance) return {IntersectionKind::Overlap, std::nullopt};
    if (n_shared > 0) return {IntersectionKind::SharedEndpoint, std::nullopt};
    return {IntersectionKind::Disjoint, std::nullopt};
  }

  const Vec3 q = axis.normalized();
  for (const Vec3& c : {q, Vec3(-q)}) {
    const double ps = s.parameter_of(c);
    const double pt = t.parameter_of(c);
    const bool on_s = ps >= -kIdentityTolerance && ps <= s.length() + kIdentityTolerance;
    const bool on_t = pt >= -kIdentityTolerance && pt <= t.length() + kIdentityTolerance;
    if (!(on_s && on_t)) continue;
    const UnitVector point = UnitVector::normalized(c);
    for (int i = 0; i < n_shared; ++i) {
      if (same_point(point, shared[i])) return {IntersectionKind::SharedEndpoint, std::nullopt};
    }
    return {IntersectionKind::Crossing, point};
  }
  if (n_shared > 0) return {IntersectionKind::SharedEndpoint, std::nullopt};
  return {IntersectionKind::Disjoint, std::nullopt};
}

double walk_area(std::span<const double> corner_angles) {
  const auto k = corner_angles.size();
  if (k < 3) throw InvalidInput("a closed walk needs at least 3 corners");
  double sum = 0.0;
  for (double a : corner_angles) {
    if (!(a > 0.0 && a < 2.0 * kPi)) throw InvalidInput("corner angle outside (0, 2pi)");
    sum += a;
  }
  return sum - static_cast<double>(k - 2) * kPi;
}

const char* to_string(IntersectionKind kind) {
  switch (kind) {
    case IntersectionKind::Disjoint: return "disjoint";
    case IntersectionKind::SharedEndpoint: return "shared-endpoint";
    case IntersectionKind::Crossing: return "crossing";
    case IntersectionKind::Overlap: return "overlap";
  }
  return "unknown";
}

}  // namespace smg
