#include "optiflock/config.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace optiflock {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const char* expected) {
  throw ConfigError("config: " + key + ": expected " + expected + ", got '" +
                    value + "'");
}

double to_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) bad_value(key, value, "a number");
  return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    bad_value(key, value, "an unsigned integer");
  return out;
}

std::size_t to_size(const std::string& key, const std::string& value) {
  return static_cast<std::size_t>(to_u64(key, value));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<double> to_double_list(const std::string& key,
                                   const std::string& value) {
  std::vector<double> out;
  for (const std::string& part : split(value, ',')) {
    if (part.empty()) bad_value(key, value, "a comma-separated number list");
    out.push_back(to_double(key, part));
  }
  return out;
}

// "x,y,v,theta,omega; x,y,v,theta,omega; ..."
std::vector<AgentState> to_states(const std::string& key,
                                  const std::string& value) {
  std::vector<AgentState> out;
  for (const std::string& group : split(value, ';')) {
    if (group.empty()) continue;
    const std::vector<std::string> fields = split(group, ',');
    if (fields.size() != 5)
      bad_value(key, group, "five comma-separated numbers per agent");
    AgentState s;
    s.x = to_double(key, fields[0]);
    s.y = to_double(key, fields[1]);
    s.v = to_double(key, fields[2]);
    s.theta = to_double(key, fields[3]);
    s.omega = to_double(key, fields[4]);
    out.push_back(s);
  }
  return out;
}

void assign(FileConfig& c, const std::string& key, const std::string& value) {
  SimConfig& sim = c.sim;
  if (key == "mode") {
    if (value == "yfm")
      sim.mode = Mode::kYfm;
    else if (value == "cs_oracle")
      sim.mode = Mode::kCsOracle;
    else
      bad_value(key, value, "'yfm' or 'cs_oracle'");
  } else if (key == "heading_mode") {
    if (value == "servo")
      sim.heading_loop = HeadingLoop::kServo;
    else if (value == "direct")
      sim.heading_loop = HeadingLoop::kDirect;
    else
      bad_value(key, value, "'servo' or 'direct'");
  } else if (key == "n_agents") {
    sim.n_agents = to_size(key, value);
  } else if (key == "dt") {
    sim.dt = to_double(key, value);
  } else if (key == "t_max") {
    sim.t_max = to_double(key, value);
  } else if (key == "seed") {
    sim.seed = to_u64(key, value);
  } else if (key == "conv_tol") {
    c.conv_tol = to_double(key, value);
  } else if (key == "H") {
    sim.params.H = to_double(key, value);
  } else if (key == "k") {
    sim.params.k = to_double(key, value);
  } else if (key == "beta") {
    sim.params.beta = to_double(key, value);
  } else if (key == "L") {
    sim.params.L = to_double(key, value);
  } else if (key == "L_e") {
    sim.params.L_e = to_double(key, value);
    c.L_e_explicit = true;
  } else if (key == "alpha_min") {
    sim.params.alpha_min = to_double(key, value);
  } else if (key == "Gamma") {
    sim.params.Gamma = to_double(key, value);
  } else if (key == "v_floor") {
    sim.params.v_floor = to_double(key, value);
  } else if (key == "sigma_q") {
    sim.noise.sigma_q = to_double(key, value);
  } else if (key == "sigma_a") {
    sim.noise.sigma_a = to_double(key, value);
  } else if (key == "init_box") {
    sim.init.box = to_double(key, value);
  } else if (key == "init_min_spacing") {
    sim.init.min_spacing = to_double(key, value);
  } else if (key == "init_speed_min") {
    sim.init.speed_min = to_double(key, value);
  } else if (key == "init_speed_max") {
    sim.init.speed_max = to_double(key, value);
  } else if (key == "init_heading_min") {
    sim.init.heading_min = to_double(key, value);
  } else if (key == "init_heading_max") {
    sim.init.heading_max = to_double(key, value);
  } else if (key == "init_explicit") {
    sim.init.explicit_states = to_states(key, value);
  } else if (key == "sweep_axis") {
    c.sweep_axis = value;
  } else if (key == "sweep_values") {
    c.sweep_values = to_double_list(key, value);
  } else if (key == "analyze_agent") {
    c.analyze_agent = to_size(key, value);
  } else if (key == "analyze_field") {
    if (value != "x" && value != "y" && value != "v" && value != "theta" &&
        value != "omega")
      bad_value(key, value, "one of x, y, v, theta, omega");
    c.analyze_field = value;
  } else if (key == "flow_agent") {
    c.flow_agent = to_size(key, value);
  } else if (key == "flow_resolution") {
    c.flow_resolution = to_double(key, value);
  } else if (key == "n_bar") {
    c.n_bar = to_double(key, value);
  } else if (key == "rho") {
    c.rho = to_double(key, value);
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

void apply_line(FileConfig& config, const std::string& raw, bool from_file) {
  std::string line = raw;
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  line = trim(line);
  if (line.empty()) return;
  const auto eq = line.find('=');
  if (eq == std::string::npos) {
    const char* where = from_file ? "config: " : "override: ";
    throw ConfigError(std::string(where) + "expected key=value, got '" + line +
                      "'");
  }
  const std::string key = trim(line.substr(0, eq));
  const std::string value = trim(line.substr(eq + 1));
  if (key.empty()) throw ConfigError("config: missing key in '" + line + "'");
  assign(config, key, value);
}

}  // namespace

FileConfig parse_config(const std::string& text) {
  FileConfig config;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) apply_line(config, line, /*from_file=*/true);
  if (!config.L_e_explicit) config.sim.params.L_e = config.sim.params.L;
  return config;
}

void apply_override(FileConfig& config, const std::string& assignment) {
  apply_line(config, assignment, /*from_file=*/false);
}

FileConfig load_config(const std::string& path,
                       const std::vector<std::string>& overrides,
                       std::optional<std::uint64_t> seed) {
  FileConfig config;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    config = parse_config(text.str());
  }
  for (const std::string& assignment : overrides)
    apply_override(config, assignment);
  if (seed) config.sim.seed = *seed;
  if (!config.L_e_explicit) config.sim.params.L_e = config.sim.params.L;
  config.sim.noise.seed = config.sim.seed;
  return config;
}

}  // namespace optiflock
