// Randomized kernel property suites, shared by the unit tests and the
// acceptance runner.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "oracles.hpp"
#include "smg/sphgeom.hpp"

namespace smg::testing {

struct PropertyStats {
  long trials = 0;
  long checked = 0;  // trials that were not skipped as near-ties
  long failures = 0;
  double worst = 0.0;
};

namespace detail {

inline double interior_angle(const UnitVector& prev, const UnitVector& apex, const UnitVector& next) {
  const double a = corner_angle(prev, apex, next, Sweep::Counterclockwise);
  return std::min(a, 2.0 * kPi - a);
}

// Point at distance r from c in tangent direction `az` (relative to a
// fixed tangent frame at c).
inline UnitVector offset(const Vec3& c, const Vec3& e1, const Vec3& e2, double az, double r) {
  const Vec3 dir = std::cos(az) * e1 + std::sin(az) * e2;
  return UnitVector::normalized(std::cos(r) * c + std::sin(r) * dir);
}

inline void tangent_frame(const Vec3& c, Vec3& e1, Vec3& e2) {
  const Vec3 helper = std::abs(c.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  e1 = helper.cross(c).normalized();
  e2 = c.cross(e1);
}

}  // namespace detail

/// d(a, c) <= d(a, b) + d(b, c) on random triples.
inline PropertyStats triangle_inequality(long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyStats s;
  for (long i = 0; i < n; ++i) {
    const auto a = random_unit(rng), b = random_unit(rng), c = random_unit(rng);
    const double excess = angular_distance(a, c) - angular_distance(a, b) - angular_distance(b, c);
    ++s.trials;
    ++s.checked;
    s.worst = std::max(s.worst, excess);
    if (excess > 1e-12) ++s.failures;
  }
  return s;
}

/// Triangles with two equal sides from the apex have equal base angles.
inline PropertyStats isosceles_base_angles(long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> az(0.0, 2.0 * kPi), side(0.05, kPi - 0.05);
  PropertyStats s;
  for (long i = 0; i < n; ++i) {
    const auto c = random_unit(rng);
    Vec3 e1, e2;
    detail::tangent_frame(c.vec(), e1, e2);
    const double r = side(rng);
    const double a1 = az(rng);
    double a2 = az(rng);
    ++s.trials;
    const double gap = std::abs(std::remainder(a1 - a2, 2.0 * kPi));
    if (gap < 0.05 || gap > kPi - 0.05) continue;  // nearly degenerate triangle
    const auto p = detail::offset(c.vec(), e1, e2, a1, r);
    const auto q = detail::offset(c.vec(), e1, e2, a2, r);
    const double diff = std::abs(detail::interior_angle(c, p, q) - detail::interior_angle(p, q, c));
    ++s.checked;
    s.worst = std::max(s.worst, diff);
    if (diff > 1e-9) ++s.failures;
  }
  return s;
}

/// In any triangle the longer of two sides faces the larger angle.
inline PropertyStats side_angle_monotonicity(long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyStats s;
  for (long i = 0; i < n; ++i) {
    const auto A = random_unit(rng), B = random_unit(rng), C = random_unit(rng);
    ++s.trials;
    const double a = angular_distance(B, C), b = angular_distance(C, A);
    if (std::abs(a - b) < 1e-9) continue;
    if (angular_distance(A, B) < 1e-3 || a < 1e-3 || b < 1e-3) continue;
    double alpha, beta;
    try {
      alpha = detail::interior_angle(B, A, C);
      beta = detail::interior_angle(C, B, A);
    } catch (const std::exception&) {
      continue;
    }
    if (std::abs(alpha - beta) < 1e-9) continue;
    ++s.checked;
    if ((a > b) != (alpha > beta)) ++s.failures;
  }
  return s;
}

/// Gauss-Bonnet walk area against a fan of signed triangles from an
/// interior point, on random star-shaped polygons.
inline PropertyStats walk_area_vs_fan(long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count(3, 12);
  std::uniform_real_distribution<double> unit(0.0, 1.0), radius(0.05, 1.4);
  PropertyStats s;
  for (long i = 0; i < n; ++i) {
    const auto c = random_unit(rng);
    Vec3 e1, e2;
    detail::tangent_frame(c.vec(), e1, e2);
    const int k = count(rng);
    std::vector<double> az;
    // Random azimuths with every gap below pi, so each fan triangle is proper.
    do {
      az.clear();
      for (int j = 0; j < k; ++j) az.push_back(2.0 * kPi * unit(rng));
      std::sort(az.begin(), az.end());
    } while ([&] {
      for (int j = 0; j < k; ++j) {
        const double gap = (j + 1 < k ? az[j + 1] : az[0] + 2.0 * kPi) - az[j];
        if (gap >= kPi - 1e-3 || gap < 1e-3) return true;
      }
      return false;
    }());
    std::vector<UnitVector> ring;
    std::vector<Vec3> ring_vec;
    for (int j = 0; j < k; ++j) {
      ring.push_back(detail::offset(c.vec(), e1, e2, az[j], radius(rng)));
      ring_vec.push_back(ring.back().vec());
    }
    std::vector<double> corners;
    try {
      for (int j = 0; j < k; ++j) {
        corners.push_back(corner_angle(ring[(j + k - 1) % k], ring[j], ring[(j + 1) % k], Sweep::Clockwise));
      }
    } catch (const std::exception&) {
      ++s.trials;
      continue;
    }
    ++s.trials;
    ++s.checked;
    const double diff = std::abs(walk_area(corners) - fan_area(c.vec(), ring_vec));
    s.worst = std::max(s.worst, diff);
    if (diff > 1e-9) ++s.failures;
  }
  return s;
}

/// arc_intersection against the sampling oracle on random arc pairs.
inline PropertyStats intersection_vs_sampling(long n, std::uint64_t seed, int samples = 10000) {
  std::mt19937_64 rng(seed);
  PropertyStats s;
  while (s.trials < n) {
    const auto a = random_unit(rng), b = random_unit(rng), c = random_unit(rng), d = random_unit(rng);
    const double l1 = angular_distance(a, b), l2 = angular_distance(c, d);
    if (l1 < 0.05 || l1 > kPi - 0.05 || l2 < 0.05 || l2 > kPi - 0.05) continue;
    ++s.trials;
    const auto oracle = sampled_crossing(a.vec(), b.vec(), c.vec(), d.vec(), samples);
    if (oracle.ambiguous) continue;
    ++s.checked;
    const auto r = arc_intersection(Arc(a, b), Arc(c, d));
    const bool crossing = r.kind == IntersectionKind::Crossing;
    if (crossing != oracle.point.has_value()) {
      ++s.failures;
      continue;
    }
    if (crossing) {
      const double err = (r.point->vec() - *oracle.point).norm();
      s.worst = std::max(s.worst, err);
      if (err > 1e-6) ++s.failures;
    }
  }
  return s;
}

}  // namespace smg::testing
