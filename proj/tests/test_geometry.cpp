#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "optiflock/angles.hpp"
#include "optiflock/geometry.hpp"
#include "support.hpp"

using namespace optiflock;

TEST_CASE("wrap_angle maps onto [-pi, pi]") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0));
  CHECK(wrap_angle(-5.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0));
  CHECK(wrap_angle(2.0 * kPi) == doctest::Approx(0.0));
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const double a = support::uniform(rng, -50.0, 50.0);
    const double w = wrap_angle(a);
    CHECK(w >= -kPi);
    CHECK(w <= kPi);
    // same direction: the difference is a whole number of turns
    CHECK(std::abs(std::remainder(a - w, 2.0 * kPi)) < 1e-12);
  }
  CHECK_THROWS_AS(wrap_angle(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(wrap_angle(INFINITY), std::invalid_argument);
}

TEST_CASE("circular_distance is a metric on the circle") {
  CHECK(circular_distance(0.0, kPi / 2.0) == doctest::Approx(kPi / 2.0));
  CHECK(circular_distance(kPi - 0.1, -kPi + 0.1) == doctest::Approx(0.2));
  SplitMix64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const double a = support::uniform(rng, -10.0, 10.0);
    const double b = support::uniform(rng, -10.0, 10.0);
    CHECK(circular_distance(a, b) == circular_distance(b, a));
    CHECK(circular_distance(a, b) <= kPi + 1e-15);
    CHECK(circular_distance(a, a) == 0.0);
  }
}

TEST_CASE("pair_geometry: separation, range rate, and both bearings") {
  SUBCASE("co-moving pair ahead") {
    AgentState i{0, 0, 1, 0, 0};
    AgentState j{2, 0, 1, 0, 0};
    const PairGeometry g = pair_geometry(i, j);
    CHECK(g.r == doctest::Approx(2.0));
    CHECK(g.r_dot == doctest::Approx(0.0));
    CHECK(g.gamma_ij == doctest::Approx(0.0));
    CHECK(std::abs(g.gamma_ji) == doctest::Approx(kPi));
  }
  SUBCASE("neighbor due left") {
    AgentState i{0, 0, 1, 0, 0};
    AgentState j{0, 1, 1, 0, 0};
    CHECK(pair_geometry(i, j).gamma_ij == doctest::Approx(kPi / 2.0));
  }
  SUBCASE("opening range") {
    AgentState i{0, 0, 1, 0, 0};
    AgentState j{3, 0, 2, 0, 0};
    CHECK(pair_geometry(i, j).r_dot == doctest::Approx(1.0));
  }
  SUBCASE("coincident positions rejected") {
    AgentState i{1, 1, 1, 0, 0};
    AgentState j{1, 1, 2, 1, 0};
    CHECK_THROWS_AS(pair_geometry(i, j), std::invalid_argument);
  }
  SUBCASE("the two bearings describe one line of sight") {
    SplitMix64 rng(13);
    for (int n = 0; n < 200; ++n) {
      const AgentState a = support::random_state(rng);
      AgentState b = support::random_state(rng);
      if (std::hypot(a.x - b.x, a.y - b.y) < 1e-6) b.x += 1.0;
      const PairGeometry g = pair_geometry(a, b);
      // inertial direction recovered from either end differs by pi
      const double from_i = wrap_angle(g.gamma_ij + a.theta);
      const double from_j = wrap_angle(g.gamma_ji + b.theta);
      CHECK(circular_distance(from_i, from_j) == doctest::Approx(kPi));
      const PairGeometry h = pair_geometry(b, a);
      CHECK(h.r == doctest::Approx(g.r));
      CHECK(h.r_dot == doctest::Approx(g.r_dot));
    }
  }
  SUBCASE("range rate matches differenced range") {
    SplitMix64 rng(14);
    const double dt = 1e-7;
    for (int n = 0; n < 50; ++n) {
      AgentState a = support::random_state(rng);
      AgentState b = support::random_state(rng);
      if (std::hypot(a.x - b.x, a.y - b.y) < 0.1) b.x += 1.0;
      const PairGeometry g = pair_geometry(a, b);
      AgentState a2 = a, b2 = b;
      a2.x += a.v * std::cos(a.theta) * dt;
      a2.y += a.v * std::sin(a.theta) * dt;
      b2.x += b.v * std::cos(b.theta) * dt;
      b2.y += b.v * std::sin(b.theta) * dt;
      const double numeric = (pair_geometry(a2, b2).r - g.r) / dt;
      CHECK(g.r_dot == doctest::Approx(numeric).epsilon(1e-5));
    }
  }
}

TEST_CASE("subtended_angle of a body of semi-length L at range r") {
  CHECK(subtended_angle(1.0, 1.0) == doctest::Approx(kPi / 4.0));
  CHECK(subtended_angle(std::sqrt(3.0), 1.0) == doctest::Approx(kPi / 6.0));
  SplitMix64 rng(15);
  for (int n = 0; n < 200; ++n) {
    const double r = support::uniform(rng, 1e-3, 100.0);
    const double L = support::uniform(rng, 1e-3, 10.0);
    const double alpha = subtended_angle(r, L);
    CHECK(alpha > 0.0);
    CHECK(alpha < kPi / 2.0);
    // r = L * cot(alpha) inverts the definition
    CHECK(L / std::tan(alpha) == doctest::Approx(r));
    CHECK(subtended_angle(r * 2.0, L) < alpha);  // farther looks smaller
  }
  CHECK_THROWS_AS(subtended_angle(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(subtended_angle(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(subtended_angle(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("subtended_rate: growth of the apparent size") {
  CHECK(subtended_rate(-2.0, kPi / 4.0, 1.0) == doctest::Approx(1.0));
  CHECK(subtended_rate(-4.0, kPi / 6.0, 1.0) == doctest::Approx(1.0));
  SUBCASE("matches the differenced subtended angle") {
    SplitMix64 rng(16);
    const double dt = 1e-7;
    for (int n = 0; n < 50; ++n) {
      const double r = support::uniform(rng, 0.2, 20.0);
      const double L = support::uniform(rng, 0.05, 5.0);
      const double r_dot = support::uniform(rng, -3.0, 3.0);
      const double alpha = subtended_angle(r, L);
      const double numeric =
          (subtended_angle(r + r_dot * dt, L) - alpha) / dt;
      CHECK(subtended_rate(r_dot, alpha, L) ==
            doctest::Approx(numeric).epsilon(1e-5));
    }
  }
  CHECK_THROWS_AS(subtended_rate(1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(subtended_rate(1.0, kPi / 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(subtended_rate(1.0, kPi / 4.0, 0.0), std::invalid_argument);
}

TEST_CASE("reflect_to_inertial is an involution that preserves length") {
  const Vec2 e1 = reflect_to_inertial(0.0, 1.0, 0.0);
  CHECK(e1.x == doctest::Approx(1.0));
  CHECK(e1.y == doctest::Approx(0.0));
  const Vec2 e2 = reflect_to_inertial(0.0, 0.0, 1.0);
  CHECK(e2.x == doctest::Approx(0.0));
  CHECK(e2.y == doctest::Approx(-1.0));
  SplitMix64 rng(17);
  for (int n = 0; n < 200; ++n) {
    const double phi = support::uniform(rng, -kPi, kPi);
    const double vt = support::uniform(rng, -3.0, 3.0);
    const double vn = support::uniform(rng, -3.0, 3.0);
    const Vec2 once = reflect_to_inertial(phi, vt, vn);
    const Vec2 twice = reflect_to_inertial(phi, once.x, once.y);
    CHECK(twice.x == doctest::Approx(vt));
    CHECK(twice.y == doctest::Approx(vn));
    CHECK(dot(once, once) == doctest::Approx(vt * vt + vn * vn));
  }
}
