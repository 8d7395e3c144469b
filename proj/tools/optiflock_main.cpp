#include <cstdint>
#include <iostream>

#include "CLI11.hpp"
#include "optiflock/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "optiflock: planar flocking with visually-guided feedback.\n"
      "Runs scenarios and parameter sweeps, post-processes trajectory logs,\n"
      "and evaluates the occlusion noise bound."};
  app.require_subcommand(1);

  optiflock::CliCommand cmd;
  std::uint64_t seed_value = 0;

  const auto add_common = [&](CLI::App* sub, bool with_jobs) {
    sub->add_option("--config", cmd.config_path,
                    sub->get_name() == std::string("analyze")
                        ? "trajectory.csv produced by a previous run"
                        : "scenario config file (key = value lines)");
    sub->add_option("--out", cmd.output_dir, "output directory")
        ->capture_default_str();
    sub->add_option("--set", cmd.overrides,
                    "config override key=value (repeatable)");
    if (with_jobs)
      sub->add_option("--jobs", cmd.jobs, "max parallel runs")
          ->capture_default_str();
    sub->add_option("--seed", seed_value, "replaces the config seed")
        ->each([&](const std::string&) { cmd.seed = seed_value; });
  };

  add_common(app.add_subcommand(
                 "run", "simulate one scenario -> trajectory.csv, metrics.csv"),
             false);
  add_common(app.add_subcommand("sweep",
                                "one run per sweep_values entry -> per-value "
                                "subdirectories + sweep_summary.csv"),
             true);
  add_common(app.add_subcommand(
                 "analyze",
                 "logarithmic-decrement analysis of a trajectory -> "
                 "oscillation.csv"),
             false);
  add_common(app.add_subcommand("flowfield",
                                "panoramic optic-flow magnitude of the "
                                "initial swarm -> profile.csv"),
             false);
  add_common(app.add_subcommand(
                 "noisebound",
                 "print the worst-case flow error n_bar*sin(Gamma)/rho"),
             false);

  CLI11_PARSE(app, argc, argv);
  cmd.verb = app.get_subcommands().front()->get_name();
  return optiflock::execute(cmd, std::cout, std::cerr);
}
