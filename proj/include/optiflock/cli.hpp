#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace optiflock {

/// A fully parsed command line. verb selects what runs; config_path is the
/// scenario file for run/sweep/flowfield/noisebound and the trajectory CSV
/// for analyze; overrides are key=value assignments layered on the file.
struct CliCommand {
  std::string verb;
  std::string config_path;
  std::string output_dir = ".";
  std::vector<std::string> overrides;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
};

/// Runs one command, writing files under output_dir and human-readable text
/// to out. Returns the process exit status; every failure is reported as a
/// one-line diagnostic on err.
int execute(const CliCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace optiflock
