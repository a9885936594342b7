#include "exsim/vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace exsim {

void VehicleParams::validate() const {
    if (!(length > 0.0) || !(v_max > 0.0) || !(a_max > 0.0) ||
        !(footprint_radius > 0.0)) {
        throw std::invalid_argument("vehicle: all parameters must be positive");
    }
    if (!(phi_max > 0.0) || phi_max >= std::numbers::pi / 2.0) {
        throw std::invalid_argument("vehicle: phi_max must be in (0, pi/2)");
    }
}

double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a + std::numbers::pi, two_pi);
    if (a <= 0.0) a += two_pi;
    return a - std::numbers::pi;
}

AgentState step_kinematics(const AgentState& s, const ControlInput& u, double dt,
                           const VehicleParams& params) {
    AgentState next;
    next.x = s.x + dt * s.v * std::cos(s.theta);
    next.y = s.y + dt * s.v * std::sin(s.theta);
    next.theta = wrap_angle(s.theta + dt * s.v * std::tan(u.phi) / params.length);
    next.v = std::clamp(s.v + dt * u.a, -params.v_max, params.v_max);
    return next;
}

} // namespace exsim
