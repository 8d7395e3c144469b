#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "optiflock/angles.hpp"
#include "optiflock/sim.hpp"
#include "optiflock/types.hpp"

namespace optiflock {

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything a command can be told: the simulation config plus the knobs the
/// command-line verbs need (sweep axis, analysis targets, noise-bound
/// inputs). Populated by parse_config / load_config.
struct FileConfig {
  SimConfig sim;
  double conv_tol = 0.01;         // spread fraction for convergence detection
  std::string sweep_axis;         // required by the sweep verb
  std::vector<double> sweep_values;
  std::size_t analyze_agent = 0;  // whose time series to analyze
  std::string analyze_field = "theta";
  std::size_t flow_agent = 0;     // whose panorama to render
  double flow_resolution = kPi / 180.0;
  double n_bar = 1.0;             // velocity-noise bound for the noisebound verb
  double rho = 1.0;               // group-extent bound for the noisebound verb
  bool L_e_explicit = false;      // whether the file/overrides set L_e
};

/// Parses the flat key=value config grammar:
///   - one `key = value` pair per line ('=' required, spaces optional)
///   - '#' starts a comment; blank lines are ignored
///   - later assignments win
/// Unknown keys and malformed values raise ConfigError naming the key.
/// An empty document yields the full default configuration. When L_e is
/// never assigned it inherits the final L.
FileConfig parse_config(const std::string& text);

/// Applies one `key=value` assignment to an already-parsed config (the
/// command-line override path). Same grammar and errors as parse_config.
void apply_override(FileConfig& config, const std::string& assignment);

/// Reads path (empty path → defaults), layers the overrides on top, then the
/// seed if present, and resolves the L_e-follows-L default.
FileConfig load_config(const std::string& path,
                       const std::vector<std::string>& overrides,
                       std::optional<std::uint64_t> seed);

}  // namespace optiflock
