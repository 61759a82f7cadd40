#pragma once

#include <optional>
#include <span>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace smg {

using Vec3 = Eigen::Vector3d;

/// Norm deviation accepted when wrapping a vector as a UnitVector.
inline constexpr double kNormTolerance = 1e-9;
/// Points closer than this are treated as the same point.
inline constexpr double kIdentityTolerance = 1e-12;
/// Great circles whose unit normals have a cross product shorter than this
/// are treated as the same circle.
inline constexpr double kCoplanarTolerance = 1e-10;

/// A point on the unit sphere.
///
/// Construction from coordinates rejects vectors whose norm is off by more
/// than kNormTolerance and renormalizes the rest, so every instance has
/// norm 1 to within a few ulps.
class UnitVector {
 public:
  UnitVector() : v_(0.0, 0.0, 1.0) {}
  UnitVector(double x, double y, double z);
  explicit UnitVector(const Vec3& v);

  /// Normalizes any non-zero vector.
  static UnitVector normalized(const Vec3& v);
  /// Spherical coordinates: colatitude theta, longitude phi.
  static UnitVector from_spherical(double theta, double phi);

  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  const Vec3& vec() const { return v_; }

  UnitVector operator-() const;

 private:
  struct Trusted {};
  UnitVector(const Vec3& v, Trusted) : v_(v) {}

  Vec3 v_;
};

/// Great-circle angle between two points, in [0, pi].
double angular_distance(const UnitVector& u, const UnitVector& v);

/// Unit tangent at `at` pointing along the minor arc toward `toward`.
/// Throws DegenerateGeometry for coincident or antipodal inputs.
Vec3 tangent_direction(const UnitVector& at, const UnitVector& toward);

/// Sense in which a corner angle is swept, as seen from outside the sphere.
enum class Sweep { Counterclockwise, Clockwise };

/// Angle at `apex` swept from the arc toward `prev` to the arc toward
/// `next`, in the given sense. Result lies in (0, 2*pi); angles above pi
/// are reflex. The two senses of the same corner sum to 2*pi.
double corner_angle(const UnitVector& prev, const UnitVector& apex,
                    const UnitVector& next, Sweep sweep);

/// Minor great-circle arc. Endpoints must be neither coincident nor
/// antipodal.
class Arc {
 public:
  Arc(const UnitVector& a, const UnitVector& b);

  const UnitVector& a() const { return a_; }
  const UnitVector& b() const { return b_; }
  double length() const { return length_; }
  /// Unit normal of the great circle, oriented so a -> b is counterclockwise.
  const Vec3& normal() const { return normal_; }

  /// Arc-length parameter of a point on the great circle, measured from a()
  /// toward b(), in (-pi, pi].
  double parameter_of(const Vec3& p) const;
  UnitVector point_at(double t) const;

 private:
  UnitVector a_, b_;
  double length_;
  Vec3 normal_;
};

enum class IntersectionKind { Disjoint, SharedEndpoint, Crossing, Overlap };

struct IntersectionResult {
  IntersectionKind kind = IntersectionKind::Disjoint;
  /// Present iff kind == Crossing.
  std::optional<UnitVector> point;
};

/// Exact classification of how two minor arcs meet. A point that is an
/// endpoint of one arc and interior to the other is reported as Crossing,
/// since it is a common point that is not a common endpoint.
IntersectionResult arc_intersection(const Arc& s, const Arc& t);

/// Gauss-Bonnet area of a closed geodesic walk from its corner angles:
/// sum(angles) - (k - 2) * pi with k = corner_angles.size() >= 3.
double walk_area(std::span<const double> corner_angles);

const char* to_string(IntersectionKind kind);

}  // namespace smg
