#include "optiflock/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "optiflock/angles.hpp"
#include "optiflock/geometry.hpp"
#include "optiflock/sensing.hpp"

namespace optiflock {

DispersionRecord dispersion(const Swarm& states) {
  if (states.empty()) throw std::invalid_argument("dispersion: empty swarm");
  DispersionRecord rec;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      rec.speed_spread =
          std::max(rec.speed_spread, std::abs(states[i].v - states[j].v));
      rec.heading_spread = std::max(
          rec.heading_spread,
          circular_distance(states[i].theta, states[j].theta));
    }
  }
  return rec;
}

std::optional<double> detect_convergence(
    const std::vector<DispersionRecord>& series, double tol_frac) {
  if (series.empty())
    throw std::invalid_argument("detect_convergence: empty series");
  if (!(tol_frac > 0.0) || !(tol_frac < 1.0))
    throw std::invalid_argument("detect_convergence: tol_frac must be in (0,1)");
  const double speed_tol = tol_frac * series.front().speed_spread;
  const double heading_tol = tol_frac * series.front().heading_spread;
  const auto ok = [&](const DispersionRecord& rec) {
    const bool speed_ok = speed_tol > 0.0 ? rec.speed_spread < speed_tol
                                          : rec.speed_spread == 0.0;
    const bool heading_ok = heading_tol > 0.0
                                ? rec.heading_spread < heading_tol
                                : rec.heading_spread == 0.0;
    return speed_ok && heading_ok;
  };
  // Walk backward to the last failing sample; convergence starts just after.
  std::size_t idx = series.size();
  while (idx > 0 && ok(series[idx - 1])) --idx;
  if (idx == series.size()) return std::nullopt;
  return series[idx].t;
}

double estimate_asymptote(const std::vector<double>& signal) {
  if (signal.empty())
    throw std::invalid_argument("estimate_asymptote: empty signal");
  const std::size_t count = std::max<std::size_t>(1, signal.size() / 10);
  double sum = 0.0;
  for (std::size_t i = signal.size() - count; i < signal.size(); ++i)
    sum += signal[i];
  return sum / static_cast<double>(count);
}

OscillationEstimate log_decrement(const std::vector<double>& signal, double dt,
                                  double asymptote) {
  if (!(dt > 0.0))
    throw std::invalid_argument("log_decrement: dt must be > 0");
  OscillationEstimate est;
  std::vector<double> amplitudes;
  for (std::size_t i = 1; i + 1 < signal.size(); ++i) {
    const double prev = signal[i - 1] - asymptote;
    const double here = signal[i] - asymptote;
    const double next = signal[i + 1] - asymptote;
    if (here > prev && here > next) {
      est.peak_times.push_back(static_cast<double>(i) * dt);
      amplitudes.push_back(here);
    }
  }
  if (est.peak_times.size() < 2) return est;
  for (std::size_t k = 0; k + 1 < amplitudes.size(); ++k) {
    const double p0 = amplitudes[k];
    const double p1 = amplitudes[k + 1];
    if (!(p0 > 0.0) || !(p1 > 0.0)) continue;
    const double delta = std::log(p0 / p1);
    const double zeta = delta / std::sqrt(4.0 * kPi * kPi + delta * delta);
    const double omega_d =
        2.0 * kPi / (est.peak_times[k + 1] - est.peak_times[k]);
    est.pair_times.push_back(est.peak_times[k]);
    est.zeta_seq.push_back(zeta);
    est.omega_n_seq.push_back(omega_d / std::sqrt(1.0 - zeta * zeta));
  }
  return est;
}

std::vector<std::pair<double, double>> flow_profile(const Swarm& swarm,
                                                    std::size_t i,
                                                    double resolution,
                                                    const SwarmParams& params) {
  if (i >= swarm.size())
    throw std::out_of_range("flow_profile: agent index out of range");
  if (!(resolution > 0.0))
    throw std::invalid_argument("flow_profile: resolution must be > 0");

  struct Extent {
    double gamma, alpha, magnitude, r;
  };
  std::vector<Extent> extents;
  for (std::size_t j = 0; j < swarm.size(); ++j) {
    if (j == i) continue;
    const PairGeometry geom = pair_geometry(swarm[i], swarm[j]);
    const double alpha = subtended_angle(geom.r, params.L);
    if (!visibility(alpha, geom.gamma_ij, params)) continue;
    extents.push_back({geom.gamma_ij, alpha,
                       std::abs(optic_flow(swarm[i], swarm[j], geom)),
                       geom.r});
  }

  const auto n_bins = static_cast<std::size_t>(
      std::ceil(2.0 * kPi / resolution - 1e-12));
  std::vector<std::pair<double, double>> profile;
  profile.reserve(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b) {
    const double center = -kPi + (static_cast<double>(b) + 0.5) * resolution;
    double magnitude = 0.0;
    double best_r = 0.0;
    bool covered = false;
    for (const Extent& e : extents) {
      if (circular_distance(center, e.gamma) > e.alpha) continue;
      if (!covered || e.r < best_r) {
        covered = true;
        best_r = e.r;
        magnitude = e.magnitude;
      }
    }
    profile.emplace_back(center, magnitude);
  }
  return profile;
}

}  // namespace optiflock
