#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "optiflock/analysis.hpp"
#include "optiflock/sim.hpp"

namespace optiflock {

/// One line of a sweep summary: the swept value plus the headline metrics of
/// its run. conv_time empty means the run never satisfied the sustained
/// convergence criterion (written as "nan").
struct SweepRow {
  double value = 0.0;
  std::optional<double> conv_time;
  double final_speed_spread = 0.0;
  double final_heading_spread = 0.0;
  std::size_t n_peaks = 0;
};

/// 17-significant-digit decimal form of every floating-point CSV field, so
/// reading a file back reproduces the exact double.
std::string format_double(double x);

/// Shortest decimal form that parses back to exactly the same double — used
/// for sweep directory labels (e.g. "k_0.2" rather than "k_0.200...01").
std::string format_label(double x);

// Writers; headers are part of the schema and always emitted.
void write_trajectory_csv(std::ostream& os, const TrajectoryLog& log);
void write_metrics_csv(std::ostream& os, const TrajectoryLog& log);
void write_sweep_summary_csv(std::ostream& os,
                             const std::vector<SweepRow>& rows);
void write_oscillation_csv(std::ostream& os, const OscillationEstimate& est);
void write_profile_csv(std::ostream& os,
                       const std::vector<std::pair<double, double>>& profile);

/// Inverse of write_trajectory_csv (dispersion metrics are recomputed).
/// Throws std::runtime_error on schema violations.
TrajectoryLog read_trajectory_csv(std::istream& is);

}  // namespace optiflock
