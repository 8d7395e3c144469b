// Python bindings for the optiflock core: state types, sensing geometry,
// feedback laws, the scenario engine, and the analysis helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "optiflock/analysis.hpp"
#include "optiflock/angles.hpp"
#include "optiflock/control.hpp"
#include "optiflock/geometry.hpp"
#include "optiflock/rng.hpp"
#include "optiflock/sensing.hpp"
#include "optiflock/sim.hpp"

namespace py = pybind11;
using namespace optiflock;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vision-based flocking: sensing, feedback laws, simulation, and "
            "analysis.";
  m.attr("PI") = kPi;

  // ---- plain data -------------------------------------------------------
  py::class_<Vec2>(m, "Vec2")
      .def(py::init<>())
      .def(py::init([](double x, double y) { return Vec2{x, y}; }),
           py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Vec2::x)
      .def_readwrite("y", &Vec2::y)
      .def("__repr__", [](const Vec2& v) {
        return "Vec2(" + std::to_string(v.x) + ", " + std::to_string(v.y) +
               ")";
      });

  py::class_<AgentState>(m, "AgentState")
      .def(py::init<>())
      .def(py::init([](double x, double y, double v, double theta,
                       double omega) {
             return AgentState{x, y, v, theta, omega};
           }),
           py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("v") = 0.0,
           py::arg("theta") = 0.0, py::arg("omega") = 0.0)
      .def_readwrite("x", &AgentState::x)
      .def_readwrite("y", &AgentState::y)
      .def_readwrite("v", &AgentState::v)
      .def_readwrite("theta", &AgentState::theta)
      .def_readwrite("omega", &AgentState::omega);

  py::class_<SwarmParams>(m, "SwarmParams")
      .def(py::init<>())
      .def_readwrite("H", &SwarmParams::H)
      .def_readwrite("k", &SwarmParams::k)
      .def_readwrite("beta", &SwarmParams::beta)
      .def_readwrite("L", &SwarmParams::L)
      .def_readwrite("L_e", &SwarmParams::L_e)
      .def_readwrite("alpha_min", &SwarmParams::alpha_min)
      .def_readwrite("Gamma", &SwarmParams::Gamma)
      .def_readwrite("v_floor", &SwarmParams::v_floor);

  py::class_<NoiseParams>(m, "NoiseParams")
      .def(py::init<>())
      .def_readwrite("sigma_q", &NoiseParams::sigma_q)
      .def_readwrite("sigma_a", &NoiseParams::sigma_a)
      .def_readwrite("seed", &NoiseParams::seed);

  py::class_<PairGeometry>(m, "PairGeometry")
      .def(py::init<>())
      .def_readwrite("r", &PairGeometry::r)
      .def_readwrite("r_dot", &PairGeometry::r_dot)
      .def_readwrite("gamma_ij", &PairGeometry::gamma_ij)
      .def_readwrite("gamma_ji", &PairGeometry::gamma_ji);

  py::class_<VisualSignal>(m, "VisualSignal")
      .def(py::init<>())
      .def_readwrite("gamma", &VisualSignal::gamma)
      .def_readwrite("alpha", &VisualSignal::alpha)
      .def_readwrite("alpha_dot", &VisualSignal::alpha_dot)
      .def_readwrite("q_dot", &VisualSignal::q_dot)
      .def_readwrite("visible", &VisualSignal::visible);

  py::class_<ControlInput>(m, "ControlInput")
      .def(py::init<>())
      .def_readwrite("u_v", &ControlInput::u_v)
      .def_readwrite("u_omega", &ControlInput::u_omega);

  py::class_<DesiredRates>(m, "DesiredRates")
      .def(py::init<>())
      .def_readwrite("v_dot_star", &DesiredRates::v_dot_star)
      .def_readwrite("theta_dot_star", &DesiredRates::theta_dot_star);

  // ---- rng --------------------------------------------------------------
  py::class_<SplitMix64>(m, "SplitMix64")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next", &SplitMix64::next)
      .def("next_unit", &SplitMix64::next_unit);
  m.def("substream", &substream, py::arg("seed"), py::arg("purpose"),
        py::arg("step"), py::arg("agent"));

  // ---- geometry and sensing ---------------------------------------------
  m.def("wrap_angle", &wrap_angle, py::arg("a"));
  m.def("circular_distance", &circular_distance, py::arg("a"), py::arg("b"));
  m.def("pair_geometry", &pair_geometry, py::arg("si"), py::arg("sj"));
  m.def("subtended_angle", &subtended_angle, py::arg("r"), py::arg("L"));
  m.def("subtended_rate", &subtended_rate, py::arg("r_dot"), py::arg("alpha"),
        py::arg("L"));
  m.def("reflect_to_inertial", &reflect_to_inertial, py::arg("phi"),
        py::arg("vt"), py::arg("vn"));
  m.def("optic_flow", &optic_flow, py::arg("si"), py::arg("sj"),
        py::arg("geom"));
  m.def("visibility", &visibility, py::arg("alpha"), py::arg("gamma"),
        py::arg("params"));
  m.def("sense", &sense, py::arg("swarm"), py::arg("i"), py::arg("params"),
        py::arg("noise"), py::arg("rng"));
  m.def(
      "noise_bound",
      [](double n_bar, double Gamma, double rho) {
        return noise_bound({n_bar, Gamma, rho});
      },
      py::arg("n_bar"), py::arg("Gamma"), py::arg("rho"));

  // ---- feedback laws ------------------------------------------------------
  m.def("cs_acceleration", &cs_acceleration, py::arg("swarm"), py::arg("i"),
        py::arg("H"), py::arg("beta"), py::arg("sigma"));
  m.def("rates_from_vector", &rates_from_vector, py::arg("v"),
        py::arg("theta"), py::arg("accel"), py::arg("v_floor") = 1e-6);
  m.def("sign_select", &sign_select, py::arg("theta_i"), py::arg("gamma_ij"));
  m.def("yfm_speed_control", &yfm_speed_control, py::arg("signals"),
        py::arg("omega_i"), py::arg("theta_i"), py::arg("params"));
  m.def("yfm_desired_heading_rate", &yfm_desired_heading_rate,
        py::arg("signals"), py::arg("v_i"), py::arg("omega_i"),
        py::arg("theta_i"), py::arg("params"));
  m.def("yfm_heading_control", &yfm_heading_control, py::arg("signals"),
        py::arg("v_i"), py::arg("omega_i"), py::arg("theta_i"),
        py::arg("params"));

  // ---- simulation ---------------------------------------------------------
  py::enum_<Mode>(m, "Mode")
      .value("YFM", Mode::kYfm)
      .value("CS_ORACLE", Mode::kCsOracle);
  py::enum_<HeadingLoop>(m, "HeadingLoop")
      .value("SERVO", HeadingLoop::kServo)
      .value("DIRECT", HeadingLoop::kDirect);

  py::class_<InitSpec>(m, "InitSpec")
      .def(py::init<>())
      .def_readwrite("box", &InitSpec::box)
      .def_readwrite("min_spacing", &InitSpec::min_spacing)
      .def_readwrite("speed_min", &InitSpec::speed_min)
      .def_readwrite("speed_max", &InitSpec::speed_max)
      .def_readwrite("heading_min", &InitSpec::heading_min)
      .def_readwrite("heading_max", &InitSpec::heading_max)
      .def_readwrite("explicit_states", &InitSpec::explicit_states);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("n_agents", &SimConfig::n_agents)
      .def_readwrite("mode", &SimConfig::mode)
      .def_readwrite("heading_loop", &SimConfig::heading_loop)
      .def_readwrite("params", &SimConfig::params)
      .def_readwrite("noise", &SimConfig::noise)
      .def_readwrite("dt", &SimConfig::dt)
      .def_readwrite("t_max", &SimConfig::t_max)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("init", &SimConfig::init);

  py::class_<DispersionRecord>(m, "DispersionRecord")
      .def(py::init<>())
      .def_readwrite("t", &DispersionRecord::t)
      .def_readwrite("speed_spread", &DispersionRecord::speed_spread)
      .def_readwrite("heading_spread", &DispersionRecord::heading_spread);

  py::class_<TrajectoryLog>(m, "TrajectoryLog")
      .def(py::init<>())
      .def_readwrite("times", &TrajectoryLog::times)
      .def_readwrite("states", &TrajectoryLog::states)
      .def_readwrite("metrics", &TrajectoryLog::metrics);

  py::register_exception<SimError>(m, "SimError");

  m.def("validate_config", &validate_config, py::arg("config"));
  m.def("initial_swarm", &initial_swarm, py::arg("config"));
  m.def(
      "euler_step",
      [](Swarm swarm, const std::vector<ControlInput>& controls, double dt) {
        euler_step(swarm, controls, dt);
        return swarm;
      },
      py::arg("swarm"), py::arg("controls"), py::arg("dt"),
      "Returns the advanced swarm (the input list is not modified).");
  m.def("run_scenario", &run_scenario, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("apply_axis", &apply_axis, py::arg("config"), py::arg("axis"),
        py::arg("value"));
  m.def("run_sweep", &run_sweep, py::arg("base"), py::arg("axis"),
        py::arg("values"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());

  // ---- analysis -----------------------------------------------------------
  py::class_<OscillationEstimate>(m, "OscillationEstimate")
      .def(py::init<>())
      .def_readwrite("peak_times", &OscillationEstimate::peak_times)
      .def_readwrite("pair_times", &OscillationEstimate::pair_times)
      .def_readwrite("zeta_seq", &OscillationEstimate::zeta_seq)
      .def_readwrite("omega_n_seq", &OscillationEstimate::omega_n_seq);

  m.def("dispersion", &dispersion, py::arg("swarm"));
  m.def("detect_convergence", &detect_convergence, py::arg("series"),
        py::arg("tol_frac"));
  m.def("estimate_asymptote", &estimate_asymptote, py::arg("signal"));
  m.def("log_decrement", &log_decrement, py::arg("signal"), py::arg("dt"),
        py::arg("asymptote"));
  m.def("flow_profile", &flow_profile, py::arg("swarm"), py::arg("i"),
        py::arg("resolution"), py::arg("params"));
}
