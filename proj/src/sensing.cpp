#include "optiflock/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "optiflock/angles.hpp"
#include "optiflock/geometry.hpp"

namespace optiflock {

double optic_flow(const AgentState& si, const AgentState& sj,
                  const PairGeometry& geom) {
  const double psi = std::atan2(sj.y - si.y, sj.x - si.x);
  const double gamma_obs = wrap_angle(psi - si.theta);  // == geom.gamma_ij
  const double gamma_ray = wrap_angle(psi - sj.theta);  // i->j ray in j's frame
  return -si.omega +
         (si.v * std::sin(gamma_obs) - sj.v * std::sin(gamma_ray)) / geom.r;
}

bool visibility(double alpha, double gamma, const SwarmParams& params) {
  if (alpha < params.alpha_min) {
    return false;
  }
  if (params.Gamma > 0.0) {
    const double g = std::abs(wrap_angle(gamma));
    if (g < params.Gamma || g > kPi - params.Gamma) {
      return false;  // fore (|g| < Gamma) or aft (|g| > pi - Gamma) sector
    }
  }
  return true;
}

std::vector<VisualSignal> sense(const Swarm& swarm, std::size_t i,
                                const SwarmParams& params,
                                const NoiseParams& noise, SplitMix64& rng) {
  if (i >= swarm.size()) {
    throw std::invalid_argument("sense: agent index out of range");
  }
  const AgentState& si = swarm[i];
  const bool noisy = noise.sigma_a != 0.0 || noise.sigma_q != 0.0;

  std::vector<VisualSignal> out;
  out.reserve(swarm.size() - 1);
  for (std::size_t j = 0; j < swarm.size(); ++j) {
    if (j == i) {
      continue;
    }
    const PairGeometry geom = pair_geometry(si, swarm[j]);
    VisualSignal sig;
    sig.gamma = geom.gamma_ij;
    double alpha = subtended_angle(geom.r, params.L);
    sig.alpha_dot = subtended_rate(geom.r_dot, alpha, params.L);
    sig.q_dot = optic_flow(si, swarm[j], geom);
    if (noisy) {
      double g1 = 0.0, g2 = 0.0;
      rng.next_gauss_pair(g1, g2);
      alpha += noise.sigma_a * g1;
      sig.q_dot += noise.sigma_q * g2;
    }
    sig.alpha = std::clamp(alpha, 1e-9, kPi / 2.0 - 1e-9);
    sig.visible = visibility(sig.alpha, sig.gamma, params);
    out.push_back(sig);
  }
  return out;
}

double noise_bound(const NoiseBoundInput& in) {
  if (!(in.n_bar >= 0.0)) {
    throw std::invalid_argument("noise_bound: n_bar must be >= 0");
  }
  if (!(in.Gamma >= 0.0) || !(in.Gamma <= kPi / 2.0)) {
    throw std::invalid_argument("noise_bound: Gamma must be in [0, pi/2]");
  }
  if (!(in.rho > 0.0)) {
    throw std::invalid_argument("noise_bound: rho must be > 0");
  }
  return in.n_bar * std::sin(in.Gamma) / in.rho;
}

}  // namespace optiflock
