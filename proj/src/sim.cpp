#include "optiflock/sim.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "optiflock/control.hpp"
#include "optiflock/geometry.hpp"
#include "optiflock/rng.hpp"
#include "optiflock/sensing.hpp"

namespace optiflock {

namespace {

[[noreturn]] void fail(const char* field, const char* constraint) {
  throw SimError(std::string("config: ") + field + " " + constraint);
}

void check_separation(const Swarm& swarm, std::uint64_t step) {
  for (std::size_t i = 0; i < swarm.size(); ++i) {
    for (std::size_t j = i + 1; j < swarm.size(); ++j) {
      if (swarm[i].x == swarm[j].x && swarm[i].y == swarm[j].y) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "agents %zu and %zu coincide at step %llu", i, j,
                      static_cast<unsigned long long>(step));
        throw SimError(msg);
      }
    }
  }
}

void record(TrajectoryLog& log, double t, const Swarm& swarm) {
  log.times.push_back(t);
  log.states.push_back(swarm);
  DispersionRecord rec = dispersion(swarm);
  rec.t = t;
  log.metrics.push_back(rec);
}

}  // namespace

void validate_config(const SimConfig& config) {
  if (config.n_agents < 1) fail("n_agents", "must be >= 1");
  if (!(config.dt > 0.0)) fail("dt", "must be > 0");
  if (!(config.t_max >= config.dt)) fail("t_max", "must be >= dt");
  if (!(config.params.L > 0.0)) fail("L", "must be > 0");
  if (!(config.params.L_e > 0.0)) fail("L_e", "must be > 0");
  if (!(config.params.alpha_min >= 0.0)) fail("alpha_min", "must be >= 0");
  if (!(config.params.Gamma >= 0.0) || !(config.params.Gamma < kPi / 2.0))
    fail("Gamma", "must be in [0, pi/2)");
  if (!(config.params.v_floor > 0.0)) fail("v_floor", "must be > 0");
  if (!(config.noise.sigma_q >= 0.0)) fail("sigma_q", "must be >= 0");
  if (!(config.noise.sigma_a >= 0.0)) fail("sigma_a", "must be >= 0");
  if (config.init.explicit_states.empty()) {
    if (!(config.init.box > 0.0)) fail("init_box", "must be > 0");
    if (!(config.init.min_spacing >= 0.0))
      fail("init_min_spacing", "must be >= 0");
    if (!(config.init.speed_min > 0.0))
      fail("init_speed_min", "must be > 0 (speed range strictly positive)");
    if (!(config.init.speed_max >= config.init.speed_min))
      fail("init_speed_max", "must be >= init_speed_min");
    if (!(config.init.heading_max >= config.init.heading_min))
      fail("init_heading_max", "must be >= init_heading_min");
  } else if (config.init.explicit_states.size() != config.n_agents) {
    fail("init_explicit", "must list exactly n_agents states");
  }
}

Swarm initial_swarm(const SimConfig& config) {
  validate_config(config);
  if (!config.init.explicit_states.empty()) return config.init.explicit_states;

  const InitSpec& init = config.init;
  SplitMix64 rng(substream(config.seed, rng_purpose::kInit, 0, 0));
  Swarm swarm;
  swarm.reserve(config.n_agents);
  for (std::size_t i = 0; i < config.n_agents; ++i) {
    AgentState s;
    bool placed = false;
    for (int attempt = 0; attempt < 10000 && !placed; ++attempt) {
      s.x = (rng.next_unit() - 0.5) * init.box;
      s.y = (rng.next_unit() - 0.5) * init.box;
      placed = true;
      for (const AgentState& other : swarm) {
        if (std::hypot(s.x - other.x, s.y - other.y) < init.min_spacing) {
          placed = false;
          break;
        }
      }
    }
    if (!placed)
      throw SimError(
          "initial_swarm: could not place agents with the requested spacing");
    s.v = init.speed_min + rng.next_unit() * (init.speed_max - init.speed_min);
    s.theta = init.heading_min +
              rng.next_unit() * (init.heading_max - init.heading_min);
    s.omega = 0.0;
    swarm.push_back(s);
  }
  return swarm;
}

Swarm euler_step(const Swarm& swarm, const std::vector<ControlInput>& controls,
                 double dt) {
  if (swarm.size() != controls.size())
    throw std::invalid_argument("euler_step: state/control length mismatch");
  if (!(dt > 0.0)) throw std::invalid_argument("euler_step: dt must be > 0");
  Swarm out = swarm;
  for (std::size_t i = 0; i < swarm.size(); ++i) {
    const AgentState& s = swarm[i];
    out[i].x = s.x + s.v * std::cos(s.theta) * dt;
    out[i].y = s.y + s.v * std::sin(s.theta) * dt;
    out[i].v = s.v + controls[i].u_v * dt;
    out[i].theta = wrap_angle(s.theta + s.omega * dt);
    out[i].omega = s.omega + controls[i].u_omega * dt;
  }
  return out;
}

std::vector<ControlInput> compute_controls(Swarm& swarm,
                                           const SimConfig& config,
                                           std::uint64_t step,
                                           SensorMemory* memory) {
  const std::size_t n = swarm.size();
  const SwarmParams& p = config.params;
  const bool direct = config.mode == Mode::kCsOracle ||
                      config.heading_loop == HeadingLoop::kDirect;
  const Swarm snapshot = swarm;  // controls all read the pre-step state
  std::vector<ControlInput> controls(n);
  std::vector<double> target_rate(n, 0.0);

  const bool differenced = memory != nullptr &&
                           config.mode == Mode::kYfm &&
                           config.noise.sigma_a > 0.0;
  if (differenced && memory->prev_alpha.size() != n * (n - 1)) {
    memory->prev_alpha.assign(n * (n - 1), 0.0);
    memory->primed = false;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (config.mode == Mode::kCsOracle) {
      // The coupling the visual law realizes: weight (sigma^2 + r^2)^-beta
      // with sigma = L/L_e and gain H*(L_e/L)^(1-2*beta). With L_e = L this
      // is plain H/(1 + r^2)^beta.
      const double sigma = p.L / p.L_e;
      const double gain = p.H * std::pow(p.L_e / p.L, 1.0 - 2.0 * p.beta);
      const Vec2 acc = cs_acceleration(snapshot, i, gain, p.beta, sigma);
      const DesiredRates rates =
          rates_from_vector(snapshot[i].v, snapshot[i].theta, acc, p.v_floor);
      controls[i].u_v = rates.v_dot_star;
      target_rate[i] = rates.theta_dot_star;
    } else {
      SplitMix64 rng(
          substream(config.seed, rng_purpose::kSense, step, i));
      std::vector<VisualSignal> signals =
          sense(snapshot, i, p, config.noise, rng);
      if (differenced) {
        // act on the measured expansion rate: the frame-to-frame difference
        // of the noisy apparent size (the analytic rate stands in on the
        // first frame, which has no history)
        for (std::size_t slot = 0; slot < signals.size(); ++slot) {
          double& stored = memory->prev_alpha[i * (n - 1) + slot];
          if (memory->primed)
            signals[slot].alpha_dot =
                (signals[slot].alpha - stored) / config.dt;
          stored = signals[slot].alpha;
        }
      }
      controls[i].u_v =
          yfm_speed_control(signals, snapshot[i].omega, snapshot[i].theta, p);
      target_rate[i] = yfm_desired_heading_rate(
          signals, snapshot[i].v, snapshot[i].omega, snapshot[i].theta, p);
    }
  }
  if (differenced) memory->primed = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (direct)
      swarm[i].omega = target_rate[i];
    else
      controls[i].u_omega = -p.k * (swarm[i].omega - target_rate[i]);
  }
  return controls;
}

TrajectoryLog run_scenario(const SimConfig& config) {
  validate_config(config);
  Swarm swarm = initial_swarm(config);
  const auto n_steps =
      static_cast<std::uint64_t>(std::llround(config.t_max / config.dt));
  TrajectoryLog log;
  log.times.reserve(n_steps + 1);
  log.states.reserve(n_steps + 1);
  log.metrics.reserve(n_steps + 1);
  SensorMemory memory;
  for (std::uint64_t step = 0; step < n_steps; ++step) {
    check_separation(swarm, step);
    const std::vector<ControlInput> controls =
        compute_controls(swarm, config, step, &memory);
    record(log, static_cast<double>(step) * config.dt, swarm);
    swarm = euler_step(swarm, controls, config.dt);
  }
  check_separation(swarm, n_steps);
  record(log, static_cast<double>(n_steps) * config.dt, swarm);
  return log;
}

SimConfig apply_axis(const SimConfig& base, const std::string& axis,
                     double value) {
  SimConfig cfg = base;
  if (axis == "H") {
    cfg.params.H = value;
  } else if (axis == "k") {
    cfg.params.k = value;
  } else if (axis == "L") {
    if (base.params.L_e == base.params.L) cfg.params.L_e = value;
    cfg.params.L = value;
  } else if (axis == "L_e") {
    cfg.params.L_e = value;
  } else if (axis == "beta") {
    cfg.params.beta = value;
  } else if (axis == "sigma_q") {
    cfg.noise.sigma_q = value;
  } else if (axis == "sigma_a") {
    cfg.noise.sigma_a = value;
  } else if (axis == "Gamma") {
    cfg.params.Gamma = value;
  } else {
    throw SimError("run_sweep: unknown axis '" + axis + "'");
  }
  return cfg;
}

std::vector<TrajectoryLog> run_sweep(const SimConfig& base,
                                     const std::string& axis,
                                     const std::vector<double>& values,
                                     int jobs) {
  std::vector<SimConfig> configs;
  configs.reserve(values.size());
  for (double value : values) configs.push_back(apply_axis(base, axis, value));

  std::vector<TrajectoryLog> logs(values.size());
  if (jobs <= 1 || values.size() <= 1) {
    for (std::size_t i = 0; i < configs.size(); ++i)
      logs[i] = run_scenario(configs[i]);
    return logs;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::size_t n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), values.size());
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (std::size_t w = 0; w < n_threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < configs.size();
           i = next.fetch_add(1)) {
        try {
          logs[i] = run_scenario(configs[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return logs;
}

}  // namespace optiflock
