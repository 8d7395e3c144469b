#pragma once

#include <cstdint>
#include <vector>

namespace optiflock {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Planar unicycle state: the agent moves along its heading only (no
/// sideslip). theta is kept wrapped to [-pi, pi] by the integrator.
struct AgentState {
  double x = 0.0;      // position, m
  double y = 0.0;      // position, m
  double v = 0.0;      // forward speed, m/s; must stay > 0 for heading control
  double theta = 0.0;  // heading, rad
  double omega = 0.0;  // heading rate, rad/s
};

using Swarm = std::vector<AgentState>;

/// Constants shared by the whole swarm (physical sizes and control gains).
struct SwarmParams {
  double H = 1.0;            // velocity-coupling gain
  double k = 20.0;           // heading-rate servo gain
  double beta = 0.4;         // distance-decay exponent; consensus needs beta < 1/2
  double L = 1.0;            // true body semi-length, m
  double L_e = 1.0;          // semi-length estimate used inside the feedback
  double alpha_min = 0.005;  // smallest resolvable subtended angle, rad
  double Gamma = 0.0;        // fore/aft blind-sector half-width, rad; 0 disables
  double v_floor = 1e-6;     // guard for divisions by the speed
};

/// Relative geometry of an ordered pair (i observing j).
struct PairGeometry {
  double r = 0.0;         // separation, m (> 0)
  double r_dot = 0.0;     // range rate, m/s
  double gamma_ij = 0.0;  // bearing of j in i's body frame, [-pi, pi]
  double gamma_ji = 0.0;  // bearing of i in j's body frame, [-pi, pi]
};

/// One neighbor as it appears to an observer: apparent bearing, subtended
/// half-angle with its rate, and the bearing-rate optic flow.
struct VisualSignal {
  double gamma = 0.0;      // apparent bearing, [-pi, pi]
  double alpha = 0.0;      // subtended half-angle, (0, pi/2)
  double alpha_dot = 0.0;  // rate of the subtended half-angle, rad/s
  double q_dot = 0.0;      // optic flow (bearing rate in the body frame), rad/s
  bool visible = true;     // false when masked by alpha_min or Gamma
};

struct ControlInput {
  double u_v = 0.0;      // speed-rate command, m/s^2
  double u_omega = 0.0;  // turn-acceleration command, rad/s^2
};

struct DesiredRates {
  double v_dot_star = 0.0;      // desired speed rate, m/s^2
  double theta_dot_star = 0.0;  // desired heading rate, rad/s
};

struct NoiseParams {
  double sigma_q = 0.0;  // std-dev of additive flow noise, rad/s
  double sigma_a = 0.0;  // std-dev of additive subtended-angle noise, rad
  std::uint64_t seed = 0;
};

struct NoiseBoundInput {
  double n_bar = 0.0;  // velocity-noise bound, m/s
  double Gamma = 0.0;  // occlusion half-angle, rad
  double rho = 1.0;    // group-size bound, m
};

}  // namespace optiflock
