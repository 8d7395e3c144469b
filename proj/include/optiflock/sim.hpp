#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "optiflock/analysis.hpp"
#include "optiflock/angles.hpp"
#include "optiflock/types.hpp"

namespace optiflock {

/// Which feedback drives the swarm: the visual law working from synthesized
/// optical measurements, or the perfect-information consensus oracle the
/// visual law is supposed to reduce to.
enum class Mode { kYfm, kCsOracle };

/// How the heading channel is closed. The servo runs the second-order loop
/// u_omega = -k (omega - theta_dot*); the direct hook assigns
/// omega := theta_dot* each step, bypassing the servo so rollouts can be
/// compared against the first-order oracle.
enum class HeadingLoop { kServo, kDirect };

/// Initial-condition recipe. When explicit_states is nonempty it is used
/// verbatim (length must equal n_agents); otherwise agents are sampled:
/// positions uniform in a centered box x box square with pairwise spacing at
/// least min_spacing (rejection), speeds and headings uniform in their
/// ranges, omega = 0.
struct InitSpec {
  double box = 10.0;          // side length of the position square, m
  double min_spacing = 0.5;   // minimum pairwise distance, m
  double speed_min = 0.5;     // m/s, must be > 0
  double speed_max = 2.0;     // m/s
  double heading_min = -kPi;  // rad
  double heading_max = kPi;   // rad
  std::vector<AgentState> explicit_states;
};

struct SimConfig {
  std::size_t n_agents = 5;
  Mode mode = Mode::kYfm;
  HeadingLoop heading_loop = HeadingLoop::kServo;
  SwarmParams params;
  NoiseParams noise;
  double dt = 0.01;      // s
  double t_max = 200.0;  // s
  std::uint64_t seed = 1;
  InitSpec init;
};

/// Everything a run produces: states and dispersion metrics at t = 0, dt,
/// 2*dt, ..., t_max (inclusive, so t_max/dt + 1 records).
struct TrajectoryLog {
  std::vector<double> times;
  std::vector<Swarm> states;
  std::vector<DispersionRecord> metrics;
};

/// Raised when a run cannot proceed (agent coincidence, bad configuration,
/// failed initial placement).
class SimError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws SimError naming the offending field when a config invariant fails.
void validate_config(const SimConfig& config);

/// Seeded initial swarm per config.init. Deterministic in config.seed.
Swarm initial_swarm(const SimConfig& config);

/// One explicit forward-Euler step; every derivative is evaluated at the
/// pre-step state, and theta stays wrapped to [-pi, pi].
Swarm euler_step(const Swarm& swarm, const std::vector<ControlInput>& controls,
                 double dt);

/// Per-pair sensor history carried between steps. With sigma_a > 0 the
/// expansion rate an agent acts on is the first difference of its noisy
/// apparent-size measurements across consecutive frames — a sensor can only
/// obtain the rate by differencing what it measures, which is what makes
/// apparent-size noise so much more damaging than flow noise (the error is
/// amplified by 1/dt). With sigma_a = 0 the measurements are exact and the
/// analytic rate is used, keeping the noise-free visual loop equal to the
/// perfect-information rollout to machine precision.
struct SensorMemory {
  std::vector<double> prev_alpha;  // row-major [agent][neighbor slot]
  bool primed = false;             // false until one full frame is stored
};

/// Controls for every agent from a frozen snapshot of the swarm. In YFM mode
/// each agent senses its neighbors (noise streams keyed by (seed, step,
/// agent)) and runs the visual laws; in oracle mode the consensus
/// acceleration is computed from true states and split into body rates. The
/// oracle — and YFM under the direct heading hook — writes theta_dot* into
/// swarm[i].omega (hence the mutable reference) and leaves u_omega at zero,
/// so the heading channel integrates the desired rate itself.
/// When memory is supplied and sigma_a > 0, YFM agents act on differenced
/// apparent-size rates (see SensorMemory); the first frame has no history
/// and uses the analytic rate.
std::vector<ControlInput> compute_controls(Swarm& swarm,
                                           const SimConfig& config,
                                           std::uint64_t step,
                                           SensorMemory* memory = nullptr);

/// Full rollout: initialize, then repeat snapshot -> controls -> step,
/// logging every instant. Identical configs give bitwise-identical logs.
/// Agent coincidence (r = 0) aborts with a SimError naming step and pair.
TrajectoryLog run_scenario(const SimConfig& config);

/// Copy of base with one parameter replaced. Axis names: H, k, L, L_e, beta,
/// sigma_q, sigma_a, Gamma. Sweeping L also moves L_e when the base config
/// has them tied, preserving "the feedback knows the true size" across the
/// sweep; sweep L_e separately to study mismatch.
SimConfig apply_axis(const SimConfig& base, const std::string& axis,
                     double value);

/// One run per value (all else fixed, including the seed), in value order.
/// jobs > 1 runs scenarios on that many threads; results are identical to a
/// serial sweep because each run is self-contained.
std::vector<TrajectoryLog> run_sweep(const SimConfig& base,
                                     const std::string& axis,
                                     const std::vector<double>& values,
                                     int jobs = 1);

}  // namespace optiflock
