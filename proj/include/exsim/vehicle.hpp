#pragma once

#include "exsim/grid.hpp"

namespace exsim {

struct VehicleParams {
    double length = 0.8;           // wheelbase, meters
    double v_max = 2.0;            // m/s
    double a_max = 1.0;            // m/s^2
    double phi_max = 0.6;          // steering limit, radians
    double footprint_radius = 0.4; // meters

    void validate() const; // throws std::invalid_argument
};

struct AgentState {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    double v = 0.0;

    Vec2 position() const { return {x, y}; }
};

struct ControlInput {
    double a = 0.0;   // acceleration, m/s^2
    double phi = 0.0; // front-wheel steering angle, radians
};

/// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

/// One explicit-Euler step of the Ackermann kinematics
///   x' = x + dt v cos(theta),  y' = y + dt v sin(theta),
///   theta' = theta + dt v tan(phi) / L,  v' = clamp(v + dt a, +-v_max).
/// theta is wrapped to (-pi, pi].
AgentState step_kinematics(const AgentState& state, const ControlInput& u, double dt,
                           const VehicleParams& params);

} // namespace exsim
