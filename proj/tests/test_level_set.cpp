#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "locmodfe/level_set.hpp"
#include "support/oracles.hpp"

using namespace locmodfe;

TEST_CASE("circle level set values and gradients") {
  CircleLevelSet ls({0.0, 0.3}, 0.5);
  CHECK(ls.value({0.5, 0.3}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(ls.value({0.0, 0.3}) == doctest::Approx(-0.25));
  CHECK(ls.value({1.0, 0.3}) == doctest::Approx(0.75));
  const Vec2 g = ls.gradient({0.4, 0.1});
  CHECK(g.x == doctest::Approx(0.8));
  CHECK(g.y == doctest::Approx(-0.4));
}

TEST_CASE("edge cut on circle matches analytic root") {
  CircleLevelSet ls({0.0, 0.3}, 0.5);
  // chi(t,0) = t^2 + 0.09 - 0.25 -> t = 0.4
  const double t1 = find_edge_cut(ls, {0.0, 0.0}, {1.0, 0.0});
  CHECK(t1 == doctest::Approx(0.4).epsilon(1e-12));
  // chi(0,t) = (t-0.3)^2 - 0.25 -> t = 0.8
  const double t2 = find_edge_cut(ls, {0.0, 0.0}, {0.0, 1.0});
  CHECK(t2 == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("edge cut residual is tiny and orientation-symmetric") {
  CircleLevelSet ls({0.13, -0.07}, 0.52);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec2 a{oracles::uniform(-1.0, 1.0), oracles::uniform(-1.0, 1.0)};
    const Vec2 b{oracles::uniform(-1.0, 1.0), oracles::uniform(-1.0, 1.0)};
    if (ls.value(a) * ls.value(b) >= 0.0) continue;
    const double t = find_edge_cut(ls, a, b);
    const double s = find_edge_cut(ls, b, a);
    CHECK(t >= 0.0);
    CHECK(t <= 1.0);
    CHECK(std::abs(ls.value(a + (b - a) * t)) <= 1e-12);
    CHECK(t + s == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("edge cut requires a sign change") {
  CircleLevelSet ls({0.0, 0.0}, 0.5);
  CHECK_THROWS_AS(find_edge_cut(ls, {0.6, 0.6}, {0.9, 0.9}), NoConvergenceError);
}

TEST_CASE("line level set cut is exact") {
  LineLevelSet ls({1.0, 0.0}, -0.3);  // chi = x - 0.3
  const double t = find_edge_cut(ls, {0.0, 0.5}, {1.0, 0.5});
  CHECK(t == doctest::Approx(0.3).epsilon(1e-14));
}

namespace {
// Nearly-flat profile away from the root: Newton from the midpoint overshoots
// far outside [0,1], forcing the bisection fallback.
struct SteepTanh final : locmodfe::LevelSet {
  double value(const Vec2& p) const override {
    return std::atan(500.0 * (p.x - 0.01));
  }
  Vec2 gradient(const Vec2& p) const override {
    const double u = 500.0 * (p.x - 0.01);
    return {500.0 / (1.0 + u * u), 0.0};
  }
};
}  // namespace

TEST_CASE("bisection fallback handles Newton-hostile profiles") {
  SteepTanh ls;
  const double t = find_edge_cut(ls, {0.0, 0.0}, {1.0, 0.0});
  CHECK(t == doctest::Approx(0.01).epsilon(1e-9));
}
