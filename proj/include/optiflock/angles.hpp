#pragma once

#include <cmath>
#include <stdexcept>

namespace optiflock {

inline constexpr double kPi = 3.14159265358979323846;

/// Wraps an angle to [-pi, pi]. Implemented with IEEE remainder, so inputs
/// already in range come back unchanged (wrap(pi) == pi, wrap(-pi) == -pi);
/// other odd multiples of pi may land on either endpoint.
inline double wrap_angle(double a) {
  if (!std::isfinite(a)) {
    throw std::invalid_argument("wrap_angle: non-finite input");
  }
  return std::remainder(a, 2.0 * kPi);
}

/// Circular distance between two angles, in [0, pi].
inline double circular_distance(double a, double b) {
  return std::abs(wrap_angle(a - b));
}

}  // namespace optiflock
