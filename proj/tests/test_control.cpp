#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "optiflock/angles.hpp"
#include "optiflock/control.hpp"
#include "optiflock/geometry.hpp"
#include "optiflock/sensing.hpp"
#include "support.hpp"

using namespace optiflock;

namespace {

std::vector<VisualSignal> clean_signals(const Swarm& swarm, std::size_t i,
                                        const SwarmParams& params) {
  SplitMix64 unused(0);
  return sense(swarm, i, params, NoiseParams{}, unused);
}

}  // namespace

TEST_CASE("cs_acceleration: distance-weighted velocity consensus") {
  SUBCASE("consensus is a fixed point") {
    Swarm swarm;
    for (int n = 0; n < 4; ++n)
      swarm.push_back({double(n), double(n * n), 1.5, 0.7, 0.0});
    for (std::size_t i = 0; i < swarm.size(); ++i) {
      const Vec2 a = cs_acceleration(swarm, i, 1.0, 0.4, 1.0);
      CHECK(a.x == 0.0);
      CHECK(a.y == 0.0);
    }
  }
  SUBCASE("an agent alone feels nothing") {
    Swarm swarm{{0, 0, 1, 0, 0}};
    const Vec2 a = cs_acceleration(swarm, 0, 1.0, 0.4, 1.0);
    CHECK(a.x == 0.0);
    CHECK(a.y == 0.0);
  }
  SUBCASE("two agents, hand-computed weight") {
    // r = sqrt(3), beta = 1/2, sigma = 1: weight = 1/(1+3)^0.5 = 1/2
    Swarm swarm{{0, 0, 1, 0, 0},
                {std::sqrt(3.0), 0, 1, kPi / 2.0, 0}};
    const Vec2 a = cs_acceleration(swarm, 0, 1.0, 0.5, 1.0);
    CHECK(a.x == doctest::Approx(-0.5));
    CHECK(a.y == doctest::Approx(0.5));
  }
}

TEST_CASE("rates_from_vector: acceleration split into body rates") {
  SUBCASE("pure tangential") {
    const DesiredRates r = rates_from_vector(1.0, 0.0, {1.0, 0.0});
    CHECK(r.v_dot_star == doctest::Approx(1.0));
    CHECK(r.theta_dot_star == doctest::Approx(0.0));
  }
  SUBCASE("pure normal") {
    const DesiredRates r = rates_from_vector(1.0, 0.0, {0.0, 1.0});
    CHECK(r.v_dot_star == doctest::Approx(0.0));
    CHECK(r.theta_dot_star == doctest::Approx(1.0));
  }
  SUBCASE("heading straight up is not singular") {
    const DesiredRates r = rates_from_vector(1.0, kPi / 2.0, {1.0, 0.0});
    CHECK(r.v_dot_star == doctest::Approx(0.0));
    CHECK(r.theta_dot_star == doctest::Approx(-1.0));
  }
  SUBCASE("slow agents are rejected") {
    CHECK_THROWS_AS(rates_from_vector(1e-9, 0.0, {1.0, 0.0}),
                    std::invalid_argument);
    CHECK_NOTHROW(rates_from_vector(1e-3, 0.0, {1.0, 0.0}));
  }
  SUBCASE("turn rate scales like 1/v") {
    const DesiredRates slow = rates_from_vector(0.5, 0.3, {0.0, 1.0});
    const DesiredRates fast = rates_from_vector(2.0, 0.3, {0.0, 1.0});
    CHECK(slow.theta_dot_star == doctest::Approx(4.0 * fast.theta_dot_star));
  }
}

TEST_CASE("sign_select: minus when the line of sight points forward") {
  CHECK(sign_select(0.0, 0.0) == -1.0);
  CHECK(sign_select(kPi / 2.0, kPi / 2.0) == 1.0);
  CHECK(sign_select(kPi / 4.0, kPi / 4.0) == -1.0);  // |pi/2| is minus
  CHECK(sign_select(-kPi / 4.0, -kPi / 4.0) == -1.0);
  CHECK(sign_select(kPi, 0.0) == 1.0);
  CHECK(sign_select(kPi, kPi) == -1.0);  // wraps to zero
}

TEST_CASE("visual laws: degenerate sums") {
  SwarmParams params;
  SUBCASE("nothing visible, nothing commanded") {
    std::vector<VisualSignal> blind(3);
    for (VisualSignal& s : blind) {
      s.alpha = 0.3;
      s.visible = false;
    }
    CHECK(yfm_speed_control(blind, 0.5, 0.1, params) == 0.0);
    CHECK(yfm_desired_heading_rate(blind, 1.0, 0.5, 0.1, params) == 0.0);
  }
  SUBCASE("empty view leaves only the turn damping") {
    CHECK(yfm_heading_control({}, 1.0, 1.0, 0.0, params) ==
          doctest::Approx(-20.0));
  }
  SUBCASE("a visible signal outside (0, pi/2) is rejected") {
    std::vector<VisualSignal> bad(1);
    bad[0].alpha = kPi / 2.0;
    bad[0].visible = true;
    CHECK_THROWS_AS(yfm_speed_control(bad, 0.0, 0.0, params),
                    std::invalid_argument);
  }
}

TEST_CASE("visual laws: consensus is an exact fixed point") {
  SplitMix64 rng(31);
  SwarmParams params;
  for (int n = 0; n < 100; ++n) {
    AgentState proto = support::random_state(rng);
    proto.omega = 0.0;
    Swarm swarm;
    for (int a = 0; a < 4; ++a) {
      AgentState s = proto;
      s.x = support::uniform(rng, -5.0, 5.0);
      s.y = support::uniform(rng, -5.0, 5.0);
      swarm.push_back(s);
    }
    bool spaced = true;
    for (std::size_t i = 0; i < swarm.size() && spaced; ++i)
      for (std::size_t j = i + 1; j < swarm.size(); ++j)
        if (std::hypot(swarm[i].x - swarm[j].x, swarm[i].y - swarm[j].y) <
            0.1) {
          spaced = false;
          break;
        }
    if (!spaced) continue;
    for (std::size_t i = 0; i < swarm.size(); ++i) {
      const auto signals = clean_signals(swarm, i, params);
      CHECK(yfm_speed_control(signals, 0.0, swarm[i].theta, params) == 0.0);
      CHECK(yfm_heading_control(signals, swarm[i].v, 0.0, swarm[i].theta,
                                params) == 0.0);
    }
  }
}

TEST_CASE("branch sign times apparent growth recovers the range rate") {
  SplitMix64 rng(32);
  SwarmParams params;
  for (int n = 0; n < 500; ++n) {
    AgentState a = support::random_state(rng);
    AgentState b = support::random_state(rng);
    if (std::hypot(a.x - b.x, a.y - b.y) < 0.1) b.x += 1.0;
    const PairGeometry g = pair_geometry(a, b);
    const double alpha = subtended_angle(g.r, params.L);
    const double alpha_dot = subtended_rate(g.r_dot, alpha, params.L);
    const double s = sign_select(a.theta, g.gamma_ij);
    const double cot = 1.0 / std::tan(alpha);
    // fold both bearings through the origin on the + branch
    const double flip = s > 0.0 ? kPi : 0.0;
    const double gamma_obs = wrap_angle(g.gamma_ij + flip);
    const double gamma_ray = wrap_angle(g.gamma_ji - kPi + flip);
    const double lhs = s * (1.0 + cot * cot) * params.L * alpha_dot;
    const double rhs =
        b.v * std::cos(gamma_ray) - a.v * std::cos(gamma_obs);
    CHECK(support::close(lhs, rhs, 1e-10));
  }
}

TEST_CASE("visual laws do not depend on the true body size") {
  SplitMix64 rng(33);
  const double sizes[] = {0.01, 0.08, 1.0, 10.0};
  for (int n = 0; n < 200; ++n) {
    // one fixed view: ranges, range rates, flows, bearings, own rotation
    const std::size_t neighbors = 1 + rng.next() % 3;
    std::vector<double> r(neighbors), r_dot(neighbors), q(neighbors),
        gamma(neighbors);
    for (std::size_t s = 0; s < neighbors; ++s) {
      r[s] = support::uniform(rng, 0.3, 20.0);
      r_dot[s] = support::uniform(rng, -3.0, 3.0);
      q[s] = support::uniform(rng, -2.0, 2.0);
      gamma[s] = support::uniform(rng, -kPi, kPi);
    }
    const double omega = support::uniform(rng, -2.0, 2.0);
    const double theta = support::uniform(rng, -kPi, kPi);
    const double v = support::uniform(rng, 0.5, 2.0);

    double u_v_ref = 0.0, rate_ref = 0.0;
    for (std::size_t which = 0; which < 4; ++which) {
      SwarmParams params;
      params.L = sizes[which];
      params.L_e = sizes[which];
      params.alpha_min = 0.0;
      std::vector<VisualSignal> signals(neighbors);
      for (std::size_t s = 0; s < neighbors; ++s) {
        signals[s].gamma = gamma[s];
        signals[s].alpha = subtended_angle(r[s], params.L);
        signals[s].alpha_dot =
            subtended_rate(r_dot[s], signals[s].alpha, params.L);
        signals[s].q_dot = q[s];
        signals[s].visible = true;
      }
      const double u_v = yfm_speed_control(signals, omega, theta, params);
      const double rate =
          yfm_desired_heading_rate(signals, v, omega, theta, params);
      if (which == 0) {
        u_v_ref = u_v;
        rate_ref = rate;
      } else {
        CHECK(support::close(u_v, u_v_ref, 1e-12));
        CHECK(support::close(rate, rate_ref, 1e-12));
      }
    }
  }
}

TEST_CASE("visual laws reproduce the perfect-information rates") {
  SplitMix64 rng(34);
  SwarmParams params;
  params.alpha_min = 0.0;
  for (int n = 0; n < 300; ++n) {
    const Swarm swarm = support::random_swarm(rng, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      const auto signals = clean_signals(swarm, i, params);
      const double u_v =
          yfm_speed_control(signals, swarm[i].omega, swarm[i].theta, params);
      const double rate = yfm_desired_heading_rate(
          signals, swarm[i].v, swarm[i].omega, swarm[i].theta, params);
      const Vec2 acc =
          cs_acceleration(swarm, i, params.H, params.beta, 1.0);
      const DesiredRates rates =
          rates_from_vector(swarm[i].v, swarm[i].theta, acc);
      CHECK(support::close(u_v, rates.v_dot_star, 1e-9));
      CHECK(support::close(rate, rates.theta_dot_star, 1e-9));
      CHECK(yfm_heading_control(signals, swarm[i].v, swarm[i].omega,
                                swarm[i].theta, params) ==
            doctest::Approx(-params.k * (swarm[i].omega - rate)));
    }
  }
}
