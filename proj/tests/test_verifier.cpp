#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smg/verifier.hpp"

using namespace smg;
using smg::testing::kPi;

namespace {

EmbeddedGraph displaced(const EmbeddedGraph& g, int vertex, double angle) {
  auto v = g.vertices();
  const Vec3 axis = v[vertex].vec().cross(Vec3(0.3, 0.7, -0.2)).normalized();
  v[vertex] = UnitVector::normalized(testing::rotate(v[vertex].vec(), axis, angle));
  return EmbeddedGraph(v, g.edges(), g.lambda());
}

EmbeddedGraph mirrored(const EmbeddedGraph& g) {
  std::vector<UnitVector> v;
  for (const auto& p : g.vertices()) v.emplace_back(-p.x(), p.y(), p.z());
  return EmbeddedGraph(v, g.edges(), g.lambda());
}

void check_witnesses(const VerificationReport& r) {
  for (const auto& c : r.checks) {
    if (!c.passed) CHECK_MESSAGE(!c.witnesses.empty(), c.name);
  }
  CHECK(r.overall == std::all_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.passed; }));
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("edge lengths") {
  const auto& ico = testing::constructed("icosahedron").graph;
  const auto pass = verify_edge_lengths(ico, 1e-9);
  CHECK(pass.passed);
  CHECK(ico.lambda() == doctest::Approx(std::acos(1 / std::sqrt(5.0))).epsilon(1e-15));

  for (int v = 0; v < ico.vertex_count(); ++v) {
    const auto fail = verify_edge_lengths(displaced(ico, v, 1e-3), 1e-9);
    CHECK_FALSE(fail.passed);
    CHECK(fail.witnesses.size() >= 1);
  }

  const std::vector<UnitVector> two{{0, 0, 1}, UnitVector::from_spherical(0.8, 1.3)};
  CHECK(verify_edge_lengths(EmbeddedGraph(two, {{0, 1}}, angular_distance(two[0], two[1])), 1e-9).passed);
}

TEST_CASE("noncrossing") {
  CHECK(verify_noncrossing(testing::constructed("snub-cube").graph).passed);

  SUBCASE("overlapping equatorial edges") {
    std::vector<UnitVector> v;
    for (double lon : {0.0, 1.0, 0.5, 1.5}) v.push_back(UnitVector::from_spherical(kPi / 2, lon));
    const auto c = verify_noncrossing(EmbeddedGraph(v, {{0, 1}, {2, 3}}, 1.0));
    CHECK_FALSE(c.passed);
    REQUIRE(c.witnesses.size() == 1);
    CHECK(c.witnesses[0].detail == "overlap");
  }
  SUBCASE("chord across an icosahedron edge") {
    const auto& ico = testing::constructed("icosahedron").graph;
    const Edge ab = ico.edges().front();
    const auto adj = ico.adjacency();
    std::vector<int> common;
    std::set_intersection(adj[ab.u].begin(), adj[ab.u].end(), adj[ab.v].begin(), adj[ab.v].end(),
                          std::back_inserter(common));
    REQUIRE(common.size() == 2);
    auto edges = ico.edges();
    edges.push_back({common[0], common[1]});
    const auto c = verify_noncrossing(EmbeddedGraph(ico.vertices(), edges, ico.lambda()));
    CHECK_FALSE(c.passed);
    REQUIRE(c.witnesses.size() == 1);
    CHECK(c.witnesses[0].detail == "crossing");
    CHECK(c.witnesses[0].point.has_value());
    auto ids = c.witnesses[0].ids;
    std::sort(ids.begin(), ids.end());
    std::vector<int> expected{ab.u, ab.v, common[0], common[1]};
    std::sort(expected.begin(), expected.end());
    CHECK(ids == expected);
  }
}

TEST_CASE("degrees") {
  const auto& ico = testing::constructed("icosahedron").graph;
  CHECK(verify_regular(ico, 5).passed);
  CHECK(verify_min_degree(ico, 5).passed);
  const auto octa = testing::octahedron();
  const auto fail = verify_min_degree(octa, 5);
  CHECK_FALSE(fail.passed);
  CHECK(fail.witnesses.size() == 6);
  CHECK(verify_min_degree(octa, 4).passed);
  CHECK_FALSE(verify_regular(octa, 5).passed);
}

TEST_CASE("separation") {
  const auto r120 = verify_separation(testing::constructed("robinson-120").graph, 1e-9);
  CHECK(r120.passed);
  CHECK(*r120.margin > 1e-6);

  const auto& ico = testing::constructed("icosahedron").graph;
  const auto base = verify_separation(ico, 1e-9);
  REQUIRE(base.passed);
  // Next-nearest icosahedron distance is arccos(-1/sqrt 5).
  CHECK(*base.margin == doctest::Approx(std::acos(-1 / std::sqrt(5.0)) - ico.lambda()).epsilon(1e-12));

  // Lengthening lambda by 1e-3 leaves the 0.93 rad gap to the next pair.
  const auto longer = verify_separation(ico.with_lambda(ico.lambda() + 1e-3), 1e-9);
  CHECK(longer.passed);
  CHECK(*longer.margin == doctest::Approx(*base.margin - 1e-3).epsilon(1e-12));

  // Pushing lambda past the next-nearest distance must fail.
  const auto beyond = verify_separation(ico.with_lambda(ico.lambda() + *base.margin + 1e-3), 1e-9);
  CHECK_FALSE(beyond.passed);
  CHECK(beyond.witnesses.size() >= 1);

  // A missing edge leaves a non-adjacent pair at distance lambda.
  auto edges = ico.edges();
  edges.erase(edges.begin());
  const auto missing = verify_separation(EmbeddedGraph(ico.vertices(), edges, ico.lambda()), 1e-9);
  CHECK_FALSE(missing.passed);
  REQUIRE(missing.witnesses.size() == 1);
  CHECK(missing.witnesses[0].ids == std::vector<int>{ico.edges()[0].u, ico.edges()[0].v});
}

TEST_CASE("verify_all") {
  for (const auto& name : construction_names()) {
    CAPTURE(name);
    const auto& g = testing::constructed(name).graph;
    const auto r = verify_all(g, {.min_degree = 5, .regular = true, .tol = 1e-9});
    CHECK(r.overall);
    check_witnesses(r);
    // Isometries preserve every check.
    CHECK(verify_all(mirrored(g), {.min_degree = 5, .regular = true, .tol = 1e-9}).overall);
  }

  const auto octa = verify_all(testing::octahedron(), {.min_degree = 5});
  CHECK_FALSE(octa.overall);
  for (const auto& c : octa.checks) CHECK_MESSAGE(c.passed == (c.name != "min_degree"), c.name);
  check_witnesses(octa);
  CHECK(verify_all(testing::octahedron(), {.min_degree = 4, .regular = true}).overall);

  const auto empty = verify_all(EmbeddedGraph({}, {}, 1.0));
  CHECK_FALSE(empty.overall);
  REQUIRE(empty.find("nonempty") != nullptr);
  CHECK(empty.find("nonempty")->witnesses.size() == 1);

  const auto& ico = testing::constructed("icosahedron").graph;
  check_witnesses(verify_all(displaced(ico, 3, 1e-3)));
}

TEST_CASE("separation certifies the contact graph") {
  for (const auto& name : construction_names()) {
    CAPTURE(name);
    const auto& g = testing::constructed(name).graph;
    REQUIRE(verify_separation(g, 1e-9).passed);
    // Caps of radius lambda/2 overlap only along edges, where they touch.
    const auto& p = g.vertices();
    for (int i = 0; i < g.vertex_count(); ++i) {
      for (int j = i + 1; j < g.vertex_count(); ++j) {
        const double d = angular_distance(p[i], p[j]);
        if (g.has_edge(i, j)) {
          CHECK(std::abs(d - g.lambda()) < 1e-9);
        } else {
          CHECK(d > g.lambda() + 1e-9);
        }
      }
    }
    CHECK(verify_contact_graph(g, 1e-9).passed);
  }
}

TEST_CASE("face diagnostics on the five graphs") {
  for (const auto& name : construction_names()) {
    CAPTURE(name);
    const auto& g = testing::constructed(name).graph;
    const auto d = face_diagnostics(g, trace_faces(g));
    CHECK(d.all_faces_345);
    CHECK(d.angles_in_interval);
    CHECK(d.min_corner_angle > kPi / 3 - 1e-9);
    CHECK(d.max_corner_angle <= 2 * kPi / 3 + 1e-9);
    if (d.quadrilaterals + d.pentagons > 0) {
      CHECK(d.diagonals_checked == 2 * d.quadrilaterals + 5 * d.pentagons);
      CHECK(d.diagonals_exceed_lambda);
      CHECK(d.min_diagonal_margin > 1e-6);
    }
  }
}

TEST_CASE("central symmetry census") {
  int symmetric = 0;
  for (const auto& name : construction_names()) {
    const bool s = is_centrally_symmetric(testing::constructed(name).graph.vertices());
    symmetric += s;
    CHECK(s == (name == "icosahedron"));
  }
  CHECK(symmetric == 1);
  CHECK(is_centrally_symmetric(testing::octahedron().vertices()));
  CHECK_FALSE(is_centrally_symmetric({}));
}

}  // TEST_SUITE
