#include <doctest.h>

#include "mbg/pattern.hpp"
#include "mbg/suites.hpp"

using namespace mbg;

namespace {
Point pt(double x) {
  Point p(1);
  p[0] = x;
  return p;
}
}  // namespace

TEST_CASE("hausdorff examples") {
  CHECK(hausdorff({pt(0)}, {pt(0)}) == 0.0);
  CHECK(hausdorff({pt(0)}, {pt(1)}) == 1.0);
  CHECK(hausdorff({pt(0), pt(2)}, {pt(1)}) == 1.0);
  CHECK_THROWS_WITH_AS(hausdorff(std::vector<Point>{}, std::vector<Point>{}),
                       "empty set", std::invalid_argument);
  // One-sided empty is fine once the boundary sphere participates.
  CHECK(hausdorff(std::vector<Point>{}, {pt(0.25)}, 1.0) == doctest::Approx(0.75));
}

TEST_CASE("boundary contribution is analytic") {
  // Point at radius 0.6 against an empty set inside the ball of radius 1:
  // the only partner is the sphere at distance |1 - 0.6|.
  double d = hausdorff({pt(0.6)}, std::vector<Point>{}, 1.0);
  CHECK(d == doctest::Approx(0.4));
}

TEST_CASE("truncation of the integer chain") {
  Pattern z = generate_periodic(1, 10.0);
  auto t = truncate(z, 1.5);
  REQUIRE(t.points.size() == 3);
  CHECK(t.radius == 1.5);
  CHECK(truncate(z, 0.5).points.size() == 1);
  CHECK_THROWS_AS(truncate(z, 10.5), std::invalid_argument);
  CHECK_THROWS_AS(truncate(z, -1.0), std::invalid_argument);
}

TEST_CASE("empty-in-ball truncation keeps only the boundary") {
  Pattern p = make_pattern(1, 0.4, 1.0, 5.0, {pt(3.0), pt(-4.0)});
  auto t = truncate(p, 1.0);
  CHECK(t.points.empty());
  // Against itself the distance is carried by the shared sphere alone.
  CHECK(hausdorff(t, t) == 0.0);
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(generate_random_displaced(1, 1.0, 1, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(generate_triplet_rotation(0.3, 0.3, 0.2, 3), std::invalid_argument);
  CHECK_THROWS_AS(generate_perturbed_periodic(1, 0.5, 1, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(generate("nonsense", GeneratorParams{}, 1), std::invalid_argument);
}

TEST_CASE("periodic window five") {
  Pattern p = generate_periodic(1, 5.0);
  REQUIRE(p.points.size() == 11);
  CHECK(p.points.front()[0] == -5.0);
  CHECK(p.points.back()[0] == 5.0);
}

TEST_CASE("pattern metric basics") {
  Pattern z = generate_periodic(1, 10.0);
  double self = pattern_metric(z, z, 128);
  CHECK(self <= 1.0 / 11.0 + 1e-12);
  Pattern z2 = generate_periodic(2, 5.0);
  CHECK_THROWS_AS(pattern_metric(z, z2, 64), std::invalid_argument);
}

TEST_CASE("metric of shifted chain agrees with the dense oracle") {
  Pattern z = generate_periodic(1, 10.0);
  Pattern half = translated(z, pt(0.5));
  half.window_radius = 9.0;
  double d = pattern_metric(z, half, 256);
  double oracle = pattern_metric_oracle(z, half, 40000);
  CHECK(d == doctest::Approx(oracle).epsilon(0.05));
  CHECK(d > 0.0);
  CHECK(d <= 1.0);
}

TEST_CASE("delone validation catches density holes") {
  // A chain with a missing point has an empty R-ball.
  std::vector<Point> pts;
  for (int i = -6; i <= 6; ++i)
    if (i != 0) pts.push_back(pt(i));
  Pattern p = make_pattern(1, 0.4, 0.6, 6.0, pts);
  auto rep = validate_delone(p);
  CHECK(!rep.valid);
  bool density = false;
  for (const auto& v : rep.violations)
    if (v.kind == DeloneViolation::Kind::Density) density = true;
  CHECK(density);
}

TEST_CASE("duplicate points are reported") {
  Pattern p = make_pattern(1, 0.0, 10.0, 5.0, {pt(1.0), pt(1.0)});
  auto rep = validate_delone(p);
  CHECK(!rep.valid);
  CHECK(rep.violations[0].kind == DeloneViolation::Kind::Duplicate);
}
