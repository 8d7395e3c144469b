#pragma once

#include <cstddef>
#include <vector>

#include "optiflock/rng.hpp"
#include "optiflock/types.hpp"

namespace optiflock {

/// Optic flow of j as seen by i: the rate at which j's image sweeps across
/// i's visual field, i.e. the line-of-sight rotation rate minus the
/// observer's own rotation. Written in per-agent terms,
///
///   q_dot = -omega_i + (v_i*sin(gamma_ij) - v_j*sin(gamma_ji')) / r
///
/// where gamma_ij is the apparent bearing of j and gamma_ji' is the angle of
/// the i->j ray in j's body frame (the bearing of i seen from j, shifted by
/// pi). Using the ray direction for the target term makes identical
/// velocities cancel exactly, which the consensus fixed-point tests rely on.
double optic_flow(const AgentState& si, const AgentState& sj,
                  const PairGeometry& geom);

/// Whether a target with subtended half-angle alpha at bearing gamma can be
/// seen: targets below alpha_min are unresolvable, and with Gamma > 0 the
/// fore and aft sectors of half-width Gamma are blind.
bool visibility(double alpha, double gamma, const SwarmParams& params);

/// Synthesizes the visual signals agent i receives from every other agent
/// (output has length N-1, ordered by increasing neighbor index). Bearing and
/// the subtended-angle rate are noise-free; alpha and q_dot receive additive
/// gaussian noise (one Box-Muller pair per neighbor, alpha first), and the
/// noisy alpha is clamped into (0, pi/2) before the visibility test. With
/// both sigmas zero no draws are consumed.
std::vector<VisualSignal> sense(const Swarm& swarm, std::size_t i,
                                const SwarmParams& params,
                                const NoiseParams& noise, SplitMix64& rng);

/// Worst-case optic-flow error induced by bounded velocity noise n_bar on a
/// group of extent rho with blind sectors Gamma: n_bar * sin(Gamma) / rho.
double noise_bound(const NoiseBoundInput& in);

}  // namespace optiflock
