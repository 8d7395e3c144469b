#include "optiflock/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace optiflock {

namespace {

constexpr char kTrajectoryHeader[] = "t,agent,x,y,v,theta,omega";

double parse_field(const std::string& field, const char* what) {
  double out = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    throw std::runtime_error(std::string("trajectory csv: bad ") + what +
                             " field '" + field + "'");
  return out;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return fields;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_label(double x) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_trajectory_csv(std::ostream& os, const TrajectoryLog& log) {
  os << kTrajectoryHeader << '\n';
  for (std::size_t t = 0; t < log.times.size(); ++t) {
    const std::string time = format_double(log.times[t]);
    for (std::size_t i = 0; i < log.states[t].size(); ++i) {
      const AgentState& s = log.states[t][i];
      os << time << ',' << i << ',' << format_double(s.x) << ','
         << format_double(s.y) << ',' << format_double(s.v) << ','
         << format_double(s.theta) << ',' << format_double(s.omega) << '\n';
    }
  }
}

void write_metrics_csv(std::ostream& os, const TrajectoryLog& log) {
  os << "t,speed_spread,heading_spread\n";
  for (const DispersionRecord& rec : log.metrics) {
    os << format_double(rec.t) << ',' << format_double(rec.speed_spread) << ','
       << format_double(rec.heading_spread) << '\n';
  }
}

void write_sweep_summary_csv(std::ostream& os,
                             const std::vector<SweepRow>& rows) {
  os << "value,conv_time,final_speed_spread,final_heading_spread,n_peaks\n";
  for (const SweepRow& row : rows) {
    os << format_double(row.value) << ','
       << (row.conv_time ? format_double(*row.conv_time) : "nan") << ','
       << format_double(row.final_speed_spread) << ','
       << format_double(row.final_heading_spread) << ',' << row.n_peaks
       << '\n';
  }
}

void write_oscillation_csv(std::ostream& os, const OscillationEstimate& est) {
  os << "peak_time,zeta,omega_n\n";
  for (std::size_t k = 0; k < est.zeta_seq.size(); ++k) {
    os << format_double(est.pair_times[k]) << ','
       << format_double(est.zeta_seq[k]) << ','
       << format_double(est.omega_n_seq[k]) << '\n';
  }
}

void write_profile_csv(std::ostream& os,
                       const std::vector<std::pair<double, double>>& profile) {
  os << "bearing_rad,qdot_mag\n";
  for (const auto& [bearing, magnitude] : profile)
    os << format_double(bearing) << ',' << format_double(magnitude) << '\n';
}

TrajectoryLog read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("trajectory csv: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTrajectoryHeader)
    throw std::runtime_error("trajectory csv: unexpected header '" + line +
                             "'");
  TrajectoryLog log;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_row(line);
    if (fields.size() != 7)
      throw std::runtime_error("trajectory csv: expected 7 fields, got row '" +
                               line + "'");
    const double t = parse_field(fields[0], "t");
    const auto agent =
        static_cast<std::size_t>(parse_field(fields[1], "agent"));
    AgentState s;
    s.x = parse_field(fields[2], "x");
    s.y = parse_field(fields[3], "y");
    s.v = parse_field(fields[4], "v");
    s.theta = parse_field(fields[5], "theta");
    s.omega = parse_field(fields[6], "omega");
    if (log.times.empty() || t != log.times.back()) {
      log.times.push_back(t);
      log.states.emplace_back();
    }
    if (agent != log.states.back().size())
      throw std::runtime_error(
          "trajectory csv: agent indices must count up from 0 within a step");
    log.states.back().push_back(s);
  }
  if (log.times.empty())
    throw std::runtime_error("trajectory csv: no data rows");
  log.metrics.reserve(log.times.size());
  for (std::size_t t = 0; t < log.times.size(); ++t) {
    if (log.states[t].size() != log.states[0].size())
      throw std::runtime_error("trajectory csv: inconsistent agent count");
    DispersionRecord rec = dispersion(log.states[t]);
    rec.t = log.times[t];
    log.metrics.push_back(rec);
  }
  return log;
}

}  // namespace optiflock
