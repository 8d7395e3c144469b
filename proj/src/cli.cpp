#include "optiflock/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "optiflock/analysis.hpp"
#include "optiflock/config.hpp"
#include "optiflock/csv.hpp"
#include "optiflock/sensing.hpp"
#include "optiflock/sim.hpp"

namespace optiflock {

namespace fs = std::filesystem;

namespace {

template <typename WriteFn>
void write_file(const fs::path& path, WriteFn&& write) {
  std::ofstream os(path, std::ios::binary);  // '\n' endings on every platform
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "'");
  write(os);
  if (!os) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::vector<double> extract_series(const TrajectoryLog& log,
                                   std::size_t agent,
                                   const std::string& field) {
  if (log.states.empty() || agent >= log.states[0].size())
    throw std::runtime_error("analyze_agent out of range");
  std::vector<double> series;
  series.reserve(log.states.size());
  for (const Swarm& swarm : log.states) {
    const AgentState& s = swarm[agent];
    if (field == "x")
      series.push_back(s.x);
    else if (field == "y")
      series.push_back(s.y);
    else if (field == "v")
      series.push_back(s.v);
    else if (field == "theta")
      series.push_back(s.theta);
    else if (field == "omega")
      series.push_back(s.omega);
    else
      throw std::runtime_error("unknown analyze_field '" + field + "'");
  }
  return series;
}

OscillationEstimate estimate_oscillation(const TrajectoryLog& log,
                                         const FileConfig& config) {
  const std::vector<double> series =
      extract_series(log, config.analyze_agent, config.analyze_field);
  const double dt =
      log.times.size() > 1 ? log.times[1] - log.times[0] : 1.0;
  return log_decrement(series, dt, estimate_asymptote(series));
}

void write_run_outputs(const fs::path& dir, const TrajectoryLog& log) {
  fs::create_directories(dir);
  write_file(dir / "trajectory.csv",
             [&](std::ostream& os) { write_trajectory_csv(os, log); });
  write_file(dir / "metrics.csv",
             [&](std::ostream& os) { write_metrics_csv(os, log); });
}

int do_run(const CliCommand& cmd) {
  const FileConfig config =
      load_config(cmd.config_path, cmd.overrides, cmd.seed);
  const TrajectoryLog log = run_scenario(config.sim);
  write_run_outputs(cmd.output_dir, log);
  return 0;
}

int do_sweep(const CliCommand& cmd) {
  const FileConfig config =
      load_config(cmd.config_path, cmd.overrides, cmd.seed);
  if (config.sweep_axis.empty())
    throw ConfigError("config: sweep_axis is required by the sweep verb");
  if (config.sweep_values.empty())
    throw ConfigError("config: sweep_values is required by the sweep verb");
  const std::vector<TrajectoryLog> logs = run_sweep(
      config.sim, config.sweep_axis, config.sweep_values, cmd.jobs);

  std::vector<SweepRow> rows;
  rows.reserve(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const double value = config.sweep_values[i];
    const TrajectoryLog& log = logs[i];
    write_run_outputs(fs::path(cmd.output_dir) /
                          (config.sweep_axis + "_" + format_label(value)),
                      log);
    SweepRow row;
    row.value = value;
    row.conv_time = detect_convergence(log.metrics, config.conv_tol);
    row.final_speed_spread = log.metrics.back().speed_spread;
    row.final_heading_spread = log.metrics.back().heading_spread;
    row.n_peaks = estimate_oscillation(log, config).peak_times.size();
    rows.push_back(row);
  }
  fs::create_directories(cmd.output_dir);
  write_file(fs::path(cmd.output_dir) / "sweep_summary.csv",
             [&](std::ostream& os) { write_sweep_summary_csv(os, rows); });
  return 0;
}

int do_analyze(const CliCommand& cmd) {
  if (cmd.config_path.empty())
    throw std::runtime_error(
        "analyze: --config must name the trajectory CSV to analyze");
  std::ifstream is(cmd.config_path, std::ios::binary);
  if (!is)
    throw std::runtime_error("cannot open '" + cmd.config_path + "'");
  const TrajectoryLog log = read_trajectory_csv(is);
  const FileConfig config = load_config("", cmd.overrides, cmd.seed);
  const OscillationEstimate est = estimate_oscillation(log, config);
  fs::create_directories(cmd.output_dir);
  write_file(fs::path(cmd.output_dir) / "oscillation.csv",
             [&](std::ostream& os) { write_oscillation_csv(os, est); });
  return 0;
}

int do_flowfield(const CliCommand& cmd) {
  const FileConfig config =
      load_config(cmd.config_path, cmd.overrides, cmd.seed);
  const Swarm swarm = initial_swarm(config.sim);
  if (config.flow_agent >= swarm.size())
    throw std::runtime_error("flow_agent out of range");
  const auto profile = flow_profile(swarm, config.flow_agent,
                                    config.flow_resolution, config.sim.params);
  fs::create_directories(cmd.output_dir);
  write_file(fs::path(cmd.output_dir) / "profile.csv",
             [&](std::ostream& os) { write_profile_csv(os, profile); });
  return 0;
}

int do_noisebound(const CliCommand& cmd, std::ostream& out) {
  const FileConfig config =
      load_config(cmd.config_path, cmd.overrides, cmd.seed);
  const double bound = noise_bound(
      {config.n_bar, config.sim.params.Gamma, config.rho});
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.6g\n", bound);  // 6 significant digits
  out << buf;
  return 0;
}

}  // namespace

int execute(const CliCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.verb == "run") return do_run(cmd);
    if (cmd.verb == "sweep") return do_sweep(cmd);
    if (cmd.verb == "analyze") return do_analyze(cmd);
    if (cmd.verb == "flowfield") return do_flowfield(cmd);
    if (cmd.verb == "noisebound") return do_noisebound(cmd, out);
    err << "error: unknown verb '" << cmd.verb << "'\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace optiflock
