#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "optiflock/types.hpp"

namespace optiflock {

/// How far the swarm is from consensus at one instant.
struct DispersionRecord {
  double t = 0.0;
  double speed_spread = 0.0;    // max over pairs |v_i - v_j|, m/s
  double heading_spread = 0.0;  // max over pairs wrapped |theta_i - theta_j|
};

/// Equivalent-linear oscillation parameters read off successive response
/// peaks. peak_times holds every detected peak; the per-pair sequences hold
/// one entry per successive-peak pair that yielded a valid estimate, with
/// pair_times giving the leading peak of each such pair (pairs whose leading
/// or trailing amplitude is nonpositive are skipped, so the sequences can be
/// shorter than peak count minus one).
struct OscillationEstimate {
  std::vector<double> peak_times;
  std::vector<double> pair_times;
  std::vector<double> zeta_seq;
  std::vector<double> omega_n_seq;
};

/// Max pairwise speed and heading differences (t is left for the caller to
/// fill). Heading differences are circular, so the spread never exceeds pi.
DispersionRecord dispersion(const Swarm& states);

/// Earliest time after which BOTH spreads stay below tol_frac times their
/// initial values through the end of the series (sustained crossing, so a dip
/// that re-exceeds the tolerance does not count). A spread whose initial
/// value is zero is required to stay exactly zero instead, since nothing can
/// be below zero. Returns nothing when the condition never holds.
std::optional<double> detect_convergence(
    const std::vector<DispersionRecord>& series, double tol_frac);

/// Mean of the last tenth of the samples — the final-value estimate used as
/// the oscillation asymptote when the true limit is unknown.
double estimate_asymptote(const std::vector<double>& signal);

/// Logarithmic-decrement extraction on a uniformly sampled signal. Peaks are
/// strict local maxima of (signal - asymptote); for each successive pair
/// (p_k at t_k, p_{k+1} at t_{k+1}) with both amplitudes positive:
///   delta  = ln(p_k / p_{k+1})
///   zeta   = delta / sqrt(4*pi^2 + delta^2)
///   omega_d = 2*pi / (t_{k+1} - t_k),  omega_n = omega_d / sqrt(1 - zeta^2)
/// Fewer than two peaks gives an empty estimate.
OscillationEstimate log_decrement(const std::vector<double>& signal, double dt,
                                  double asymptote);

/// Panoramic optic-flow magnitude seen by agent i, binned over bearings
/// [-pi, pi) at the given bin width: a bin holds |q_dot| of the neighbor
/// whose angular extent [gamma - alpha, gamma + alpha] covers the bin center
/// (nearest neighbor wins on overlap, invisible neighbors contribute
/// nothing), else 0. Returns (bin center, magnitude) pairs.
std::vector<std::pair<double, double>> flow_profile(const Swarm& swarm,
                                                    std::size_t i,
                                                    double resolution,
                                                    const SwarmParams& params);

}  // namespace optiflock
