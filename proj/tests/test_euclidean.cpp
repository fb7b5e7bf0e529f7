#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "cyclic/errors.hpp"
#include "cyclic/euclidean.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cyclic;
using namespace cyclic::euclidean;
using Status = PolygonInequality::Status;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double angle_sum(const CentralAngles& a) {
  double s = 0.0;
  for (double x : a.values()) s += x;
  return s;
}

double max_relative_chord_error(const EuclideanSolution& s, const std::vector<double>& l) {
  const auto c = chord_lengths(s.vertices);
  double e = 0.0;
  for (std::size_t k = 0; k < l.size(); ++k) e = std::max(e, std::abs(c[k] - l[k]) / l[k]);
  return e;
}

}  // namespace

TEST_CASE("check_polygon_inequalities examples") {
  CHECK(check_polygon_inequalities(SideLengths({1, 1, 1})).status == Status::kStrict);
  const auto eq = check_polygon_inequalities(SideLengths({1, 1, 2}));
  CHECK(eq.status == Status::kEquality);
  CHECK(eq.side == 2);
  const auto bad = check_polygon_inequalities(SideLengths({1, 1, 3}));
  CHECK(bad.status == Status::kViolated);
  CHECK(bad.side == 2);
  CHECK(check_polygon_inequalities(SideLengths({5, 1, 1})).side == 0);
}

TEST_CASE("solve_euclidean examples") {
  const auto eq = solve_euclidean(SideLengths({1, 1, 1}));
  CHECK(eq.radius == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  for (double a : eq.angles.values()) CHECK(a == doctest::Approx(kTwoPi / 3.0).epsilon(1e-14));
  CHECK(eq.center_inside);

  const auto t = solve_euclidean(SideLengths({3, 4, 5}));
  CHECK(std::abs(t.radius - 2.5) <= 1e-12);
  CHECK(t.angles[0] == doctest::Approx(2.0 * std::asin(0.6)).epsilon(1e-13));
  CHECK(t.angles[1] == doctest::Approx(2.0 * std::asin(0.8)).epsilon(1e-13));
  CHECK(t.angles[2] == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(t.angles[0] == doctest::Approx(1.28700).epsilon(1e-5));
  CHECK(t.angles[1] == doctest::Approx(1.85459).epsilon(1e-5));

  const std::vector<double> skew{1, 1, 1, 2.9};
  CHECK(3.0 * std::asin(1.0 / 2.9) < kPi / 2.0);
  const auto o = solve_euclidean(SideLengths(skew));
  CHECK_FALSE(o.center_inside);
  CHECK(o.angles[3] > kPi);
  CHECK(o.radius == doctest::Approx(oracle::euclidean_radius(skew)).epsilon(1e-12));

  const auto sq = solve_euclidean(SideLengths({1, 1, 1, 1}));
  CHECK(sq.radius == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
  for (double a : sq.angles.values()) CHECK(a == doctest::Approx(kPi / 2.0).epsilon(1e-14));
}

TEST_CASE("solve_euclidean rejects non-strict input naming the side") {
  try {
    solve_euclidean(SideLengths({1, 2, 1}));
    FAIL("expected NoPolygon");
  } catch (const NoPolygon& e) {
    CHECK(e.reason() == Infeasibility::kPolygonEquality);
    REQUIRE(e.side());
    CHECK(*e.side() == 1);
    CHECK(std::string(e.what()).find("side 2") != std::string::npos);
  }
  try {
    solve_euclidean(SideLengths({1, 1, 1, 7}));
    FAIL("expected NoPolygon");
  } catch (const NoPolygon& e) {
    CHECK(e.reason() == Infeasibility::kPolygonViolated);
    CHECK(*e.side() == 3);
  }
}

TEST_CASE("near-degenerate input fails crisply") {
  // Strict by one ulp: either a finite bounded radius or a crisp refusal.
  const double big = std::nextafter(2.0, 0.0);
  try {
    const auto s = solve_euclidean(SideLengths({1.0, 1.0, big}));
    CHECK(s.radius <= kMaxRadiusRatio * big);
    CHECK(std::isfinite(s.radius));
  } catch (const NoPolygon& e) {
    CHECK(e.reason() == Infeasibility::kNearDegenerate);
  }
  // Barely strict but solvable.
  const std::vector<double> thin{1.0, 1.0, 2.0 - 1e-9};
  const auto s = solve_euclidean(SideLengths(thin));
  CHECK(max_relative_chord_error(s, thin) <= 1e-9);
}

TEST_CASE("vertices_on_circle examples") {
  const auto tri = vertices_on_circle(1.0, CentralAngles(std::vector<double>(3, kTwoPi / 3.0)));
  CHECK(tri[0].x == doctest::Approx(1.0));
  CHECK(std::abs(tri[0].y) <= 1e-15);
  CHECK(tri[1].x == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(tri[1].y == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(tri[2].x == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(tri[2].y == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-15));

  const auto sq = vertices_on_circle(1.0, CentralAngles(std::vector<double>(4, kPi / 2.0)));
  const double want[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(sq[k].x - want[k][0]) <= 1e-15);
    CHECK(std::abs(sq[k].y - want[k][1]) <= 1e-15);
  }

  const auto t = solve_euclidean(SideLengths({3, 4, 5}));
  const auto c = chord_lengths(t.vertices);
  CHECK(std::abs(c[0] - 3.0) <= 1e-10);
  CHECK(std::abs(c[1] - 4.0) <= 1e-10);
  CHECK(std::abs(c[2] - 5.0) <= 1e-10);
}

TEST_CASE("polygon_area examples") {
  const std::vector<Vec2> unit{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(polygon_area(unit) == 1.0);
  const auto t = solve_euclidean(SideLengths({3, 4, 5}));
  CHECK(polygon_area(t.vertices) == doctest::Approx(6.0).epsilon(1e-13));
  const auto q = solve_euclidean(SideLengths({1, 2, 3, 4}));
  CHECK(std::abs(polygon_area(q.vertices) - std::sqrt(24.0)) <= 1e-9);
  CHECK_THROWS_AS(polygon_area(std::vector<Vec2>{{0, 0}, {1, 0}}), DomainError);
}

TEST_CASE("round trip on random strict inputs") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto l = gen::strict_lengths(rng, 3, 64);
    const auto s = solve_euclidean(SideLengths(l));
    CHECK(max_relative_chord_error(s, l) <= 1e-9);
    CHECK(std::abs(angle_sum(s.angles) - kTwoPi) <= 1e-11);
    for (std::size_t k = 0; k < l.size(); ++k) {
      const double r = std::hypot(s.vertices[k].x, s.vertices[k].y);
      CHECK(std::abs(r - s.radius) <= 1e-10 * s.radius);
      CHECK(std::abs(2.0 * s.radius * std::sin(0.5 * s.angles[k]) - l[k]) <= 1e-10 * l[k]);
    }
    const auto big = std::count_if(s.angles.values().begin(), s.angles.values().end(),
                                   [](double a) { return a > kPi; });
    CHECK(big <= 1);
    CHECK(s.center_inside == (big == 0));
  }
}

TEST_CASE("radius matches the bisection oracle, including center-outside cases") {
  gen::Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto l = trial % 2 ? gen::center_outside_lengths(rng, 3, 30)
                             : gen::strict_lengths(rng, 3, 30);
    const auto s = solve_euclidean(SideLengths(l));
    const double ref = oracle::euclidean_radius(l);
    CHECK(std::abs(s.radius - ref) <= 1e-12 * ref);
    if (trial % 2) CHECK_FALSE(s.center_inside);
  }
}

TEST_CASE("radius lower bound") {
  gen::Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const auto l = gen::strict_lengths(rng, 3, 20);
    const auto s = solve_euclidean(SideLengths(l));
    CHECK(s.radius >= 0.5 * *std::max_element(l.begin(), l.end()) * (1.0 - 1e-15));
  }
  // Equality exactly when the longest side is a diameter.
  const auto t = solve_euclidean(SideLengths({3, 4, 5}));
  CHECK(std::abs(t.radius - 2.5) <= 1e-12);
}

TEST_CASE("Brahmagupta on random cyclic quadrilaterals") {
  gen::Rng rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const auto l = gen::strict_lengths(rng, 4, 4, 0.1, 10.0);
    const auto s = solve_euclidean(SideLengths(l));
    const double p = 0.5 * gen::sum(l);
    const double want = (p - l[0]) * (p - l[1]) * (p - l[2]) * (p - l[3]);
    const double area = polygon_area(s.vertices);
    CHECK(std::abs(area * area - want) <= 1e-9 * want);
  }
}

TEST_CASE("the case function decreases on [l_max/2, inf)") {
  gen::Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const auto l = gen::strict_lengths(rng, 3, 20);
    const double r0 = 0.5 * *std::max_element(l.begin(), l.end());
    auto S = [&](double r) {
      double s = 0.0;
      for (double x : l) s += std::asin(std::min(1.0, x / (2.0 * r)));
      return s;
    };
    double prev = S(r0);
    for (int i = 1; i <= 40; ++i) {
      const double r = r0 * std::pow(1.3, i);
      const double cur = S(r);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}
