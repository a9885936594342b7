#include "exsim/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace exsim {

void traverse_segment(const Vec2& p0, const Vec2& p1, double resolution,
                      const std::function<bool(int, int)>& visit) {
    const double res = resolution;
    int ix = static_cast<int>(std::floor(p0.x() / res));
    int iy = static_cast<int>(std::floor(p0.y() / res));
    if (!visit(ix, iy)) return;

    const double dx = p1.x() - p0.x();
    const double dy = p1.y() - p0.y();
    const int step_x = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
    const int step_y = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);

    const double inf = std::numeric_limits<double>::infinity();
    // Parametric t in [0, 1] at which the ray crosses the next cell boundary.
    double t_max_x = inf, t_max_y = inf, t_delta_x = inf, t_delta_y = inf;
    if (step_x != 0) {
        const double boundary = (step_x > 0 ? ix + 1 : ix) * res;
        t_max_x = (boundary - p0.x()) / dx;
        t_delta_x = res / std::abs(dx);
    }
    if (step_y != 0) {
        const double boundary = (step_y > 0 ? iy + 1 : iy) * res;
        t_max_y = (boundary - p0.y()) / dy;
        t_delta_y = res / std::abs(dy);
    }

    const int max_steps = std::abs(static_cast<int>(std::floor(p1.x() / res)) - ix) +
                          std::abs(static_cast<int>(std::floor(p1.y() / res)) - iy) + 4;
    for (int steps = 0; steps < 2 * max_steps; ++steps) {
        if (t_max_x >= 1.0 && t_max_y >= 1.0) break;
        if (t_max_x < t_max_y) {
            ix += step_x;
            t_max_x += t_delta_x;
            if (!visit(ix, iy)) return;
        } else if (t_max_y < t_max_x) {
            iy += step_y;
            t_max_y += t_delta_y;
            if (!visit(ix, iy)) return;
        } else {
            // Exact corner crossing: touch both side cells before the diagonal.
            if (!visit(ix + step_x, iy)) return;
            if (!visit(ix, iy + step_y)) return;
            ix += step_x;
            iy += step_y;
            t_max_x += t_delta_x;
            t_max_y += t_delta_y;
            if (!visit(ix, iy)) return;
        }
    }
}

namespace {

void sort_unique(std::vector<std::int32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

ScanResult raycast_scan(const OccupancyGrid& truth, const Vec2& pose, double heading,
                        double range, double angular_resolution) {
    if (!truth.contains(pose)) {
        throw std::domain_error("raycast_scan: pose outside grid");
    }
    if (range < 0.0) {
        throw std::domain_error("raycast_scan: negative range");
    }

    ScanResult result;
    const double range_sq = range * range;
    std::vector<std::int32_t> hit_cells;

    const auto classify = [&](int x, int y) -> bool {
        if (!truth.in_bounds(x, y)) return false;
        const Vec2 center = truth.center_of(x, y);
        const bool in_range = (center - pose).squaredNorm() <= range_sq;
        if (truth.at(x, y) == CellState::Obstacle) {
            if (in_range) {
                const std::int32_t idx = truth.index_of(x, y);
                result.obstacle_cells.push_back(idx);
                hit_cells.push_back(idx);
            }
            return false; // beam blocked regardless of range bookkeeping
        }
        if (in_range) result.freed_cells.push_back(truth.index_of(x, y));
        return true;
    };

    if (range == 0.0) {
        const Cell c = truth.cell_of(pose);
        classify(c.x(), c.y());
    } else {
        const int beams = static_cast<int>(
            std::ceil(2.0 * std::numbers::pi / angular_resolution));
        for (int b = 0; b < beams; ++b) {
            const double angle = heading + b * angular_resolution;
            const Vec2 end = pose + range * Vec2(std::cos(angle), std::sin(angle));
            traverse_segment(pose, end, truth.resolution(), classify);
        }
    }

    sort_unique(result.freed_cells);
    sort_unique(result.obstacle_cells);
    sort_unique(hit_cells);
    result.hit_points.reserve(hit_cells.size());
    for (std::int32_t idx : hit_cells) {
        result.hit_points.push_back(truth.center_of_index(idx));
    }
    return result;
}

void integrate_scan(OccupancyGrid& belief, const ScanResult& scan) {
    const auto check = [&](std::int32_t idx) {
        if (idx < 0 || idx >= belief.cell_count()) {
            throw std::domain_error("integrate_scan: scan does not match belief geometry");
        }
    };
    for (std::int32_t idx : scan.freed_cells) {
        check(idx);
        if (belief.at_index(idx) != CellState::Obstacle) {
            belief.at_index(idx) = CellState::Free;
        }
    }
    for (std::int32_t idx : scan.obstacle_cells) {
        check(idx);
        belief.at_index(idx) = CellState::Obstacle;
    }
}

} // namespace exsim
