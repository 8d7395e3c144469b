#include "optiflock/control.hpp"

#include <cmath>
#include <stdexcept>

#include "optiflock/angles.hpp"

namespace optiflock {

Vec2 cs_acceleration(const Swarm& swarm, std::size_t i, double H, double beta,
                     double sigma) {
  if (i >= swarm.size())
    throw std::out_of_range("cs_acceleration: agent index out of range");
  const AgentState& si = swarm[i];
  Vec2 acc{0.0, 0.0};
  for (std::size_t j = 0; j < swarm.size(); ++j) {
    if (j == i) continue;
    const AgentState& sj = swarm[j];
    const double dx = sj.x - si.x;
    const double dy = sj.y - si.y;
    const double r2 = dx * dx + dy * dy;
    const double w = H / std::pow(sigma * sigma + r2, beta);
    acc.x += w * (sj.v * std::cos(sj.theta) - si.v * std::cos(si.theta));
    acc.y += w * (sj.v * std::sin(sj.theta) - si.v * std::sin(si.theta));
  }
  return acc;
}

DesiredRates rates_from_vector(double v, double theta, Vec2 a, double v_floor) {
  if (v < v_floor)
    throw std::invalid_argument(
        "rates_from_vector: speed below v_floor, heading rate undefined");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  DesiredRates out;
  out.v_dot_star = c * a.x + s * a.y;
  out.theta_dot_star = (c * a.y - s * a.x) / v;
  return out;
}

double sign_select(double theta_i, double gamma_ij) {
  const double line = std::abs(wrap_angle(theta_i + gamma_ij));
  return line <= kPi / 2.0 ? -1.0 : 1.0;
}

namespace {

// Per-neighbor contribution shared by the speed and heading laws.
//
// Bearings are stored full-quadrant; the control laws are written on the
// half-folded convention where the + branch of sign_select corresponds to a
// line of sight reflected through the origin. Folding negates cos(gamma),
// sin(gamma) and the rotation-compensated flow together, which keeps the two
// branches consistent with a single formula.
struct NeighborTerms {
  double radial;      // s*alpha_dot*(1 + cot^2 alpha)
  double transverse;  // (q_dot + omega_i)*cot(alpha)
  double cos_g;
  double sin_g;
  double denom;  // (1 + L_e^2 cot^2 alpha)^beta
};

bool neighbor_terms(const VisualSignal& sig, double omega_i, double theta_i,
                    const SwarmParams& params, NeighborTerms& out) {
  if (!sig.visible) return false;
  if (!(sig.alpha > 0.0) || !(sig.alpha < kPi / 2.0))
    throw std::invalid_argument(
        "control: visible signal has subtended angle outside (0, pi/2)");
  const double s = sign_select(theta_i, sig.gamma);
  const double cot = 1.0 / std::tan(sig.alpha);
  double cg = std::cos(sig.gamma);
  double sg = std::sin(sig.gamma);
  double flow = sig.q_dot + omega_i;
  if (s > 0.0) {
    cg = -cg;
    sg = -sg;
    flow = -flow;
  }
  out.radial = s * sig.alpha_dot * (1.0 + cot * cot);
  out.transverse = flow * cot;
  out.cos_g = cg;
  out.sin_g = sg;
  out.denom =
      std::pow(1.0 + params.L_e * params.L_e * cot * cot, params.beta);
  return true;
}

}  // namespace

double yfm_speed_control(const std::vector<VisualSignal>& signals,
                         double omega_i, double theta_i,
                         const SwarmParams& params) {
  double sum = 0.0;
  NeighborTerms t;
  for (const VisualSignal& sig : signals) {
    if (!neighbor_terms(sig, omega_i, theta_i, params, t)) continue;
    sum += (t.radial * t.cos_g - t.transverse * t.sin_g) / t.denom;
  }
  return params.H * params.L_e * sum;
}

double yfm_desired_heading_rate(const std::vector<VisualSignal>& signals,
                                double v_i, double omega_i, double theta_i,
                                const SwarmParams& params) {
  double sum = 0.0;
  NeighborTerms t;
  for (const VisualSignal& sig : signals) {
    if (!neighbor_terms(sig, omega_i, theta_i, params, t)) continue;
    sum += (t.radial * t.sin_g + t.transverse * t.cos_g) / t.denom;
  }
  const double v = std::max(v_i, params.v_floor);
  return params.H * params.L_e * sum / v;
}

double yfm_heading_control(const std::vector<VisualSignal>& signals,
                           double v_i, double omega_i, double theta_i,
                           const SwarmParams& params) {
  const double target =
      yfm_desired_heading_rate(signals, v_i, omega_i, theta_i, params);
  return -params.k * (omega_i - target);
}

}  // namespace optiflock
