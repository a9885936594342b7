#pragma once

#include "exsim/grid.hpp"
#include "exsim/vehicle.hpp"

namespace exsim {

struct DwaConfig {
    double alpha = 1.0;               // obstacle-penalty weight
    double clearance_threshold = 2.0; // C: no penalty at or beyond this distance
    int accel_samples = 7;
    int steer_samples = 11;
    int horizon_steps = 20;           // rollout length, movement ticks

    void validate() const; // throws std::invalid_argument
};

// Penalty floor substituted for log(0) when the clearance is exactly zero.
inline constexpr double kObstaclePenaltyFloor = -1.0e9;

/// Minimum Euclidean distance from the point to any known Obstacle cell
/// center; +infinity when the belief holds no obstacles. Throws
/// std::domain_error if the point lies outside the grid.
double nearest_obstacle_distance(const OccupancyGrid& belief, const Vec2& point);

/// 0 when clearance >= threshold, else log(clearance / threshold) (<= 0),
/// clamped to kObstaclePenaltyFloor at zero clearance. Continuous at the
/// threshold.
double obstacle_penalty(double clearance, double threshold);

/// True when the point is outside the map, its own cell is an Obstacle, or
/// any Obstacle cell center lies within `radius` of it.
bool footprint_collides(const OccupancyGrid& grid, const Vec2& point, double radius);

/// The sampled control lattice: value(i) = (2 i / (n - 1) - 1) * max, so the
/// endpoints are exactly +-max and, for odd n, the midpoint is exactly 0.
double lattice_value(int i, int n, double max_value);

/// Evaluates the full accel x steer control lattice. Each candidate is rolled
/// out horizon_steps with step_kinematics under constant control; rollouts
/// whose footprint collides at any step are infeasible. Cost at the rollout
/// endpoint is |endpoint - goal| - alpha * obstacle_penalty(clearance, C).
/// Returns the minimum-cost feasible control; ties break by smallest |phi|,
/// then smallest |a|, then smallest phi, then smallest a. If every rollout
/// collides, returns a full brake (a = -a_max * sign(v), phi = 0).
ControlInput dwa_select(const AgentState& state, const Vec2& goal,
                        const OccupancyGrid& belief, const DwaConfig& cfg,
                        const VehicleParams& params, double dt);

} // namespace exsim
