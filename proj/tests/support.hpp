#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "optiflock/rng.hpp"
#include "optiflock/types.hpp"

namespace support {

/// |a - b| <= tol * max(1, |a|, |b|): relative comparison with an absolute
/// floor of tol, so values near zero (consensus limits) stay comparable.
inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <=
         tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline double uniform(optiflock::SplitMix64& rng, double lo, double hi) {
  return lo + rng.next_unit() * (hi - lo);
}

inline optiflock::AgentState random_state(optiflock::SplitMix64& rng) {
  optiflock::AgentState s;
  s.x = uniform(rng, -5.0, 5.0);
  s.y = uniform(rng, -5.0, 5.0);
  s.v = uniform(rng, 0.5, 2.0);
  s.theta = uniform(rng, -optiflock::kPi, optiflock::kPi);
  s.omega = uniform(rng, -2.0, 2.0);
  return s;
}

/// Random swarm with every pair at least min_sep apart.
inline optiflock::Swarm random_swarm(optiflock::SplitMix64& rng,
                                     std::size_t n, double min_sep = 0.1) {
  optiflock::Swarm swarm;
  while (swarm.size() < n) {
    optiflock::AgentState s = random_state(rng);
    bool ok = true;
    for (const optiflock::AgentState& other : swarm)
      if (std::hypot(s.x - other.x, s.y - other.y) < min_sep) ok = false;
    if (ok) swarm.push_back(s);
  }
  return swarm;
}

}  // namespace support
