#include "exsim/dwa.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace exsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimum squared distance from `point` to an Obstacle cell center within a
// window guaranteed to cover every obstacle closer than `cap`. Returns +inf
// when no obstacle center lies within the window; any such obstacle is then
// farther than cap, where the penalty is zero anyway.
double capped_clearance_sq(const OccupancyGrid& g, const Vec2& point, double cap) {
    const double res = g.resolution();
    const int reach = static_cast<int>(std::ceil(cap / res)) + 1;
    const Cell c = g.cell_of(point);
    const int x0 = std::max(0, c.x() - reach);
    const int x1 = std::min(g.width() - 1, c.x() + reach);
    const int y0 = std::max(0, c.y() - reach);
    const int y1 = std::min(g.height() - 1, c.y() + reach);
    double best = kInf;
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            if (g.at(x, y) != CellState::Obstacle) continue;
            const double dx = (x + 0.5) * res - point.x();
            const double dy = (y + 0.5) * res - point.y();
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) best = d2;
        }
    }
    return best;
}

} // namespace

void DwaConfig::validate() const {
    if (!(alpha > 0.0) || !(clearance_threshold > 0.0)) {
        throw std::invalid_argument("dwa: alpha and clearance threshold must be positive");
    }
    if (accel_samples < 3 || steer_samples < 3) {
        throw std::invalid_argument("dwa: sample counts must be >= 3");
    }
    if (horizon_steps < 1) {
        throw std::invalid_argument("dwa: horizon must be >= 1");
    }
}

double nearest_obstacle_distance(const OccupancyGrid& belief, const Vec2& point) {
    if (!belief.contains(point)) {
        throw std::domain_error("nearest_obstacle_distance: point outside grid");
    }
    double best = kInf;
    const double res = belief.resolution();
    for (int y = 0; y < belief.height(); ++y) {
        for (int x = 0; x < belief.width(); ++x) {
            if (belief.at(x, y) != CellState::Obstacle) continue;
            const double dx = (x + 0.5) * res - point.x();
            const double dy = (y + 0.5) * res - point.y();
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) best = d2;
        }
    }
    return best == kInf ? kInf : std::sqrt(best);
}

double obstacle_penalty(double clearance, double threshold) {
    if (clearance >= threshold) return 0.0;
    if (clearance <= 0.0) return kObstaclePenaltyFloor;
    const double p = std::log(clearance / threshold);
    return p < kObstaclePenaltyFloor ? kObstaclePenaltyFloor : p;
}

bool footprint_collides(const OccupancyGrid& grid, const Vec2& point, double radius) {
    if (!grid.contains(point)) return true;
    if (grid.at_point(point) == CellState::Obstacle) return true;
    const double res = grid.resolution();
    const int reach = static_cast<int>(std::ceil(radius / res)) + 1;
    const Cell c = grid.cell_of(point);
    const double r2 = radius * radius;
    const int x0 = std::max(0, c.x() - reach);
    const int x1 = std::min(grid.width() - 1, c.x() + reach);
    const int y0 = std::max(0, c.y() - reach);
    const int y1 = std::min(grid.height() - 1, c.y() + reach);
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            if (grid.at(x, y) != CellState::Obstacle) continue;
            const double dx = (x + 0.5) * res - point.x();
            const double dy = (y + 0.5) * res - point.y();
            if (dx * dx + dy * dy <= r2) return true;
        }
    }
    return false;
}

double lattice_value(int i, int n, double max_value) {
    return (2.0 * i / (n - 1) - 1.0) * max_value;
}

ControlInput dwa_select(const AgentState& state, const Vec2& goal,
                        const OccupancyGrid& belief, const DwaConfig& cfg,
                        const VehicleParams& params, double dt) {
    bool found = false;
    double best_cost = kInf;
    ControlInput best{};

    for (int ai = 0; ai < cfg.accel_samples; ++ai) {
        const double a = lattice_value(ai, cfg.accel_samples, params.a_max);
        for (int si = 0; si < cfg.steer_samples; ++si) {
            const double phi = lattice_value(si, cfg.steer_samples, params.phi_max);
            AgentState s = state;
            bool feasible = true;
            for (int h = 0; h < cfg.horizon_steps; ++h) {
                s = step_kinematics(s, {a, phi}, dt, params);
                if (footprint_collides(belief, s.position(), params.footprint_radius)) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;

            const double goal_dist = (s.position() - goal).norm();
            const double clearance_sq =
                capped_clearance_sq(belief, s.position(), cfg.clearance_threshold);
            const double clearance = clearance_sq == kInf ? kInf : std::sqrt(clearance_sq);
            const double cost =
                goal_dist - cfg.alpha * obstacle_penalty(clearance, cfg.clearance_threshold);

            bool better = false;
            if (!found || cost < best_cost) {
                better = true;
            } else if (cost == best_cost) {
                const auto key = [](const ControlInput& u) {
                    return std::array<double, 4>{std::abs(u.phi), std::abs(u.a), u.phi, u.a};
                };
                better = key({a, phi}) < key(best);
            }
            if (better) {
                found = true;
                best_cost = cost;
                best = {a, phi};
            }
        }
    }

    if (!found) {
        const double sign = state.v > 0.0 ? 1.0 : (state.v < 0.0 ? -1.0 : 0.0);
        return {-params.a_max * sign, 0.0};
    }
    return best;
}

} // namespace exsim
