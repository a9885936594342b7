#pragma once

#include "exsim/grid.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace exsim {

/// One lidar sweep. freed_cells and obstacle_cells are disjoint, sorted,
/// deduplicated flat indices; hit_points are the obstacle-cell centers struck
/// by beams (the per-step point cloud).
struct ScanResult {
    std::vector<std::int32_t> freed_cells;
    std::vector<std::int32_t> obstacle_cells;
    std::vector<Vec2> hit_points;
};

/// Supercover traversal of the segment [p0, p1] over a grid of the given
/// resolution. Visits every cell the segment passes through in order; when
/// the segment crosses a lattice corner exactly, both side cells are visited
/// before the diagonal one, so an obstacle wall can never be slipped through
/// diagonally. The visitor returns false to stop the walk.
void traverse_segment(const Vec2& p0, const Vec2& p1, double resolution,
                      const std::function<bool(int, int)>& visit);

/// Casts ceil(2*pi/angular_resolution) beams from the pose. Each beam marks
/// traversed cells Free until the first Obstacle cell (recorded with its
/// center as hit point) or range exhaustion. Only cells whose center lies
/// within `range` of the pose are recorded. Throws std::domain_error if the
/// pose is outside the grid.
ScanResult raycast_scan(const OccupancyGrid& truth, const Vec2& pose, double heading,
                        double range, double angular_resolution);

/// Applies a scan to a belief: freed cells become Free, obstacle cells become
/// Obstacle. Obstacle never reverts to Free. Throws std::domain_error on
/// geometry mismatch (index out of range).
void integrate_scan(OccupancyGrid& belief, const ScanResult& scan);

} // namespace exsim
