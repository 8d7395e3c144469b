#pragma once

#include <cstddef>
#include <vector>

#include "optiflock/types.hpp"

namespace optiflock {

/// Perfect-information velocity-consensus acceleration for agent i:
/// sum over j != i of H * (v_j - v_i) / (sigma^2 + r_ij^2)^beta,
/// as a vector in the inertial frame.
Vec2 cs_acceleration(const Swarm& swarm, std::size_t i, double H, double beta,
                     double sigma);

/// Splits an inertial acceleration into the speed rate and heading rate a
/// unicycle must follow to realize it:
///   v_dot*     = cos(theta)*a_x + sin(theta)*a_y
///   theta_dot* = (cos(theta)*a_y - sin(theta)*a_x) / v
/// (the 1/v of the dot-product form cancels against the velocity components,
/// which removes the spurious singularity of the tangent-based expression).
/// Throws if v < v_floor.
DesiredRates rates_from_vector(double v, double theta, Vec2 a,
                               double v_floor = 1e-6);

/// Branch of the -/+ rule: -1 when the line of sight theta_i + gamma_ij wraps
/// into [-pi/2, pi/2] (boundary inclusive), +1 otherwise.
double sign_select(double theta_i, double gamma_ij);

/// Visually-guided speed law. Per visible neighbor, with s from sign_select:
///
///   [ s*alpha_dot*(1+cot^2 alpha)*cos(gamma)
///     - (q_dot + omega_i)*cot(alpha)*sin(gamma) ] / (1 + L_e^2 cot^2 alpha)^beta
///
/// summed and scaled by H*L_e. The law is stated in the half-folded bearing
/// convention: on the + branch the apparent bearing is reflected through the
/// origin and the flow changes sense (see fold_signal in control.cpp).
/// Invisible signals contribute exactly zero.
double yfm_speed_control(const std::vector<VisualSignal>& signals,
                         double omega_i, double theta_i,
                         const SwarmParams& params);

/// The heading rate the visual feedback asks for (the servo target):
/// (H*L_e / max(v_i, v_floor)) * sum of the same per-neighbor terms with
/// sin(gamma) and cos(gamma) exchanged as in the heading law.
double yfm_desired_heading_rate(const std::vector<VisualSignal>& signals,
                                double v_i, double omega_i, double theta_i,
                                const SwarmParams& params);

/// Visually-guided heading law: u_omega = -k * (omega_i - theta_dot*), with
/// theta_dot* from yfm_desired_heading_rate.
double yfm_heading_control(const std::vector<VisualSignal>& signals,
                           double v_i, double omega_i, double theta_i,
                           const SwarmParams& params);

}  // namespace optiflock
