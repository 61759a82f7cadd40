#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "properties.hpp"
#include "smg/errors.hpp"
#include "smg/sphgeom.hpp"

using namespace smg;
using smg::testing::kPi;

TEST_SUITE("sphgeom") {

TEST_CASE("unit vectors reject non-unit input") {
  CHECK_THROWS_AS(UnitVector(1.1, 0.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(UnitVector(0.0, 0.0, 0.0), InvalidInput);
  CHECK_NOTHROW(UnitVector(1.0 + 5e-10, 0.0, 0.0));
  const UnitVector u(0.6, 0.8, 0.0);
  CHECK(std::abs(u.vec().norm() - 1.0) < 1e-12);
  CHECK_THROWS_AS(UnitVector::normalized(Vec3::Zero()), InvalidInput);
}

TEST_CASE("angular distance") {
  const UnitVector z(0, 0, 1), x(1, 0, 0), y(0, 1, 0);
  CHECK(angular_distance(z, z) == 0.0);
  CHECK(angular_distance(x, y) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(angular_distance(z, -z) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(angular_distance(x, y) == angular_distance(y, x));

  // Stable near 0 and near pi where arccos loses half the digits.
  const double tiny = 1e-10;
  const auto near = UnitVector::normalized(Vec3(1.0, std::tan(tiny), 0.0));
  CHECK(angular_distance(x, near) == doctest::Approx(tiny).epsilon(1e-6));
  const auto near_antipode = UnitVector::normalized(Vec3(-1.0, std::tan(tiny), 0.0));
  CHECK(kPi - angular_distance(x, near_antipode) == doctest::Approx(tiny).epsilon(1e-5));
}

TEST_CASE("tangent direction") {
  const UnitVector z(0, 0, 1), x(1, 0, 0), y(0, 1, 0);
  CHECK((tangent_direction(z, x) - Vec3(1, 0, 0)).norm() < 1e-15);
  CHECK((tangent_direction(z, y) - Vec3(0, 1, 0)).norm() < 1e-15);
  CHECK((tangent_direction(x, z) - Vec3(0, 0, 1)).norm() < 1e-15);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto a = testing::random_unit(rng), b = testing::random_unit(rng);
    const Vec3 t = tangent_direction(a, b);
    CHECK(std::abs(t.norm() - 1.0) < 1e-12);
    CHECK(std::abs(t.dot(a.vec())) < 1e-12);
    CHECK(t.dot(b.vec()) > 0.0);
  }
  CHECK_THROWS_AS(tangent_direction(z, z), DegenerateGeometry);
  CHECK_THROWS_AS(tangent_direction(z, -z), DegenerateGeometry);
}

TEST_CASE("corner angles") {
  const UnitVector z(0, 0, 1), x(1, 0, 0), y(0, 1, 0);
  CHECK(corner_angle(x, z, y, Sweep::Counterclockwise) == doctest::Approx(kPi / 2));
  CHECK(corner_angle(x, z, y, Sweep::Clockwise) == doctest::Approx(3 * kPi / 2));
  // Straight through along the equator.
  CHECK(corner_angle(x, y, -x, Sweep::Counterclockwise) == doctest::Approx(kPi));

  // Icosahedron face corner: (0,1,phi) with two neighbors sharing a face.
  const double phi = std::numbers::phi;
  const auto a = UnitVector::normalized(Vec3(0, 1, phi));
  const auto b = UnitVector::normalized(Vec3(0, -1, phi));
  const auto c = UnitVector::normalized(Vec3(phi, 0, 1));
  const double ccw = corner_angle(b, a, c, Sweep::Counterclockwise);
  CHECK(std::min(ccw, 2 * kPi - ccw) == doctest::Approx(2 * kPi / 5).epsilon(1e-13));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const auto p = testing::random_unit(rng), q = testing::random_unit(rng), r = testing::random_unit(rng);
    const double sum = corner_angle(p, q, r, Sweep::Counterclockwise) + corner_angle(p, q, r, Sweep::Clockwise);
    CHECK(std::abs(sum - 2 * kPi) < 1e-9);
    const double swapped = corner_angle(p, q, r, Sweep::Counterclockwise) + corner_angle(r, q, p, Sweep::Counterclockwise);
    CHECK(std::abs(swapped - 2 * kPi) < 1e-9);
  }
  CHECK_THROWS_AS(corner_angle(x, z, x, Sweep::Clockwise), DegenerateGeometry);
}

TEST_CASE("arc intersection examples") {
  const double s = std::sqrt(0.5);
  const UnitVector x(1, 0, 0), y(0, 1, 0), z(0, 0, 1);

  SUBCASE("equator arc against a meridian arc") {
    const Arc equator(x, y);
    const auto lo = UnitVector::from_spherical(kPi / 4 + kPi / 2, kPi / 4);
    const auto hi = UnitVector::from_spherical(kPi / 4, kPi / 4);
    const auto r = arc_intersection(equator, Arc(lo, hi));
    REQUIRE(r.kind == IntersectionKind::Crossing);
    CHECK((r.point->vec() - Vec3(s, s, 0)).norm() < 1e-12);
    CHECK(std::abs(r.point->vec().dot(equator.normal())) < 1e-12);
  }
  SUBCASE("shared endpoint") {
    const auto r = arc_intersection(Arc(z, x), Arc(z, y));
    CHECK(r.kind == IntersectionKind::SharedEndpoint);
    CHECK_FALSE(r.point.has_value());
  }
  SUBCASE("overlapping sub-arcs of the equator") {
    const auto a = UnitVector::from_spherical(kPi / 2, 0.0);
    const auto b = UnitVector::from_spherical(kPi / 2, 1.0);
    const auto c = UnitVector::from_spherical(kPi / 2, 0.5);
    const auto d = UnitVector::from_spherical(kPi / 2, 1.5);
    CHECK(arc_intersection(Arc(a, b), Arc(c, d)).kind == IntersectionKind::Overlap);
    CHECK(arc_intersection(Arc(a, b), Arc(d, c)).kind == IntersectionKind::Overlap);
    // Collinear arcs meeting end to end only share an endpoint.
    CHECK(arc_intersection(Arc(a, c), Arc(c, b)).kind == IntersectionKind::SharedEndpoint);
    CHECK(arc_intersection(Arc(a, c), Arc(b, d)).kind == IntersectionKind::Disjoint);
  }
  SUBCASE("same great circle, shared endpoint, overlapping interiors") {
    const auto a = UnitVector::from_spherical(kPi / 2, 0.0);
    const auto b = UnitVector::from_spherical(kPi / 2, 1.0);
    const auto c = UnitVector::from_spherical(kPi / 2, 0.5);
    CHECK(arc_intersection(Arc(a, b), Arc(a, c)).kind == IntersectionKind::Overlap);
  }
  SUBCASE("an endpoint touching the interior of another arc") {
    const auto mid = UnitVector::from_spherical(kPi / 2, kPi / 4);
    const auto r = arc_intersection(Arc(x, y), Arc(mid, z));
    CHECK(r.kind == IntersectionKind::Crossing);
  }
  SUBCASE("disjoint") {
    CHECK(arc_intersection(Arc(x, y), Arc(z, UnitVector::from_spherical(0.3, 0.2))).kind ==
          IntersectionKind::Disjoint);
  }
  CHECK_THROWS_AS(Arc(x, x), InvalidInput);
  CHECK_THROWS_AS(Arc(x, -x), InvalidInput);
}

TEST_CASE("walk area") {
  const double octant[] = {kPi / 2, kPi / 2, kPi / 2};
  CHECK(walk_area(octant) == doctest::Approx(kPi / 2));
  const double ico[] = {2 * kPi / 5, 2 * kPi / 5, 2 * kPi / 5};
  CHECK(walk_area(ico) == doctest::Approx(kPi / 5));
  const double two[] = {1.0, 1.0};
  CHECK_THROWS_AS(walk_area(two), InvalidInput);
}

TEST_CASE("property: triangle inequality") {
  const auto s = testing::triangle_inequality(100000, 1);
  CHECK(s.failures == 0);
}

TEST_CASE("property: isosceles triangles have equal base angles") {
  const auto s = testing::isosceles_base_angles(100000, 2);
  CHECK(s.checked > 90000);
  CHECK(s.failures == 0);
}

TEST_CASE("property: longer side faces the larger angle") {
  const auto s = testing::side_angle_monotonicity(100000, 3);
  CHECK(s.checked > 90000);
  CHECK(s.failures == 0);
}

TEST_CASE("property: walk area matches fan triangulation") {
  const auto s = testing::walk_area_vs_fan(10000, 4);
  CHECK(s.checked > 9900);
  CHECK(s.failures == 0);
}

TEST_CASE("property: arc intersection matches dense sampling") {
  const auto s = testing::intersection_vs_sampling(2000, 5);
  CHECK(s.checked > 1900);
  CHECK(s.failures == 0);
}

}  // TEST_SUITE
