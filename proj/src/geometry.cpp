#include "optiflock/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "optiflock/angles.hpp"

namespace optiflock {

PairGeometry pair_geometry(const AgentState& si, const AgentState& sj) {
  const double dx = sj.x - si.x;
  const double dy = sj.y - si.y;
  const double r = std::hypot(dx, dy);
  if (r == 0.0) {
    throw std::invalid_argument("pair_geometry: coincident positions");
  }
  PairGeometry g;
  g.r = r;
  g.gamma_ij = wrap_angle(std::atan2(dy, dx) - si.theta);
  g.gamma_ji = wrap_angle(std::atan2(-dy, -dx) - sj.theta);
  const double dvx = sj.v * std::cos(sj.theta) - si.v * std::cos(si.theta);
  const double dvy = sj.v * std::sin(sj.theta) - si.v * std::sin(si.theta);
  g.r_dot = (dx * dvx + dy * dvy) / r;
  return g;
}

double subtended_angle(double r, double L) {
  if (!(r > 0.0) || !(L > 0.0)) {
    throw std::invalid_argument("subtended_angle: r and L must be > 0");
  }
  return std::atan2(L, r);
}

double subtended_rate(double r_dot, double alpha, double L) {
  if (!(alpha > 0.0) || !(alpha < kPi / 2.0)) {
    throw std::invalid_argument("subtended_rate: alpha must be in (0, pi/2)");
  }
  if (!(L > 0.0)) {
    throw std::invalid_argument("subtended_rate: L must be > 0");
  }
  const double cot = 1.0 / std::tan(alpha);
  return -r_dot / (L * (1.0 + cot * cot));
}

Vec2 reflect_to_inertial(double phi, double vt, double vn) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {c * vt + s * vn, s * vt - c * vn};
}

}  // namespace optiflock
