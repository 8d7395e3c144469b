#pragma once

#include "optiflock/types.hpp"

namespace optiflock {

/// Relative geometry of the ordered pair (i, j). Bearings are full-quadrant
/// (atan2) angles measured in each agent's body frame; the range rate is the
/// projection of the relative velocity on the line of sight, computed
/// analytically so downstream identity checks are exact.
/// Throws std::invalid_argument on coincident positions.
PairGeometry pair_geometry(const AgentState& si, const AgentState& sj);

/// Half-angle subtended by a body of semi-length L at distance r:
/// alpha = arctan(L/r), so cot(alpha) = r/L. Requires r > 0 and L > 0.
double subtended_angle(double r, double L);

/// Rate of the subtended half-angle given the range rate:
/// alpha_dot = -r_dot / (L * (1 + cot^2(alpha))).
/// Requires alpha in (0, pi/2) and L > 0.
double subtended_rate(double r_dot, double alpha, double L);

/// Applies the reflection [[cos phi, sin phi], [sin phi, -cos phi]] to the
/// tangential/normal components (vt, vn). The matrix is its own inverse, so
/// the same call maps line-of-sight components to inertial ones and back.
Vec2 reflect_to_inertial(double phi, double vt, double vn);

}  // namespace optiflock
