#include "exsim/mapgen.hpp"

#include "exsim/rng.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace exsim {

namespace {

int grid_cells(double side, double resolution) {
    if (!(side > 0.0) || !(resolution > 0.0)) {
        throw std::invalid_argument("map generator: side and resolution must be positive");
    }
    const double cells = side / resolution;
    const double rounded = std::round(cells);
    if (std::abs(cells - rounded) > 1e-9 || rounded < 8.0) {
        throw std::invalid_argument("map generator: side/resolution must be an integer >= 8");
    }
    return static_cast<int>(rounded);
}

void fill_rect(OccupancyGrid& g, int x0, int y0, int w, int h, CellState s) {
    for (int y = y0; y < y0 + h; ++y) {
        for (int x = x0; x < x0 + w; ++x) {
            g.at(x, y) = s;
        }
    }
}

// Free space must stay one 4-connected component.
bool free_space_connected(const OccupancyGrid& g) {
    int seed = -1;
    int free_total = 0;
    for (int i = 0; i < g.cell_count(); ++i) {
        if (g.at_index(i) == CellState::Free) {
            if (seed < 0) seed = i;
            ++free_total;
        }
    }
    if (free_total == 0) return false;
    const int w = g.width();
    std::vector<std::uint8_t> seen(g.cell_count(), 0);
    std::vector<int> stack{seed};
    seen[seed] = 1;
    int reached = 0;
    while (!stack.empty()) {
        const int idx = stack.back();
        stack.pop_back();
        ++reached;
        const int x = idx % w;
        const int y = idx / w;
        const auto push = [&](int nx, int ny) {
            if (!g.in_bounds(nx, ny)) return;
            const int n = ny * w + nx;
            if (!seen[n] && g.at_index(n) == CellState::Free) {
                seen[n] = 1;
                stack.push_back(n);
            }
        };
        push(x - 1, y);
        push(x + 1, y);
        push(x, y - 1);
        push(x, y + 1);
    }
    return reached == free_total;
}

} // namespace

OccupancyGrid generate_maze(std::uint64_t seed, double side, double resolution,
                            int corridor_width) {
    const int n = grid_cells(side, resolution);
    if (corridor_width < 2) {
        throw std::invalid_argument("generate_maze: corridor_width must be >= 2");
    }

    OccupancyGrid grid(n, n, resolution, CellState::Obstacle);
    const int interior = n - 2;
    const int pitch = corridor_width + 1;
    const int lattice = (interior + 1) / pitch;

    if (lattice < 2) {
        // Corridor too wide for any wall to fit: single open room.
        fill_rect(grid, 1, 1, interior, interior, CellState::Free);
        return grid;
    }

    const int span = lattice * pitch - 1;
    const int x0 = 1 + (interior - span) / 2;
    const int y0 = 1 + (interior - span) / 2;
    const auto room_origin = [&](int a, int b) {
        return Cell{x0 + a * pitch, y0 + b * pitch};
    };

    // Carve the rooms.
    for (int b = 0; b < lattice; ++b) {
        for (int a = 0; a < lattice; ++a) {
            const Cell o = room_origin(a, b);
            fill_rect(grid, o.x(), o.y(), corridor_width, corridor_width, CellState::Free);
        }
    }

    // Depth-first spanning tree over the lattice; carving a passage opens the
    // one-cell wall strip between two rooms across its full corridor width.
    RngStream rng(derive_seed(seed, {fnv1a64("maze")}));
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(lattice) * lattice, 0);
    std::vector<std::pair<int, int>> stack;
    stack.emplace_back(0, 0);
    visited[0] = 1;
    const std::array<std::pair<int, int>, 4> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    while (!stack.empty()) {
        const auto [a, b] = stack.back();
        std::array<int, 4> order{0, 1, 2, 3};
        for (int i = 3; i > 0; --i) {
            std::swap(order[i], order[rng.uniform_int(0, i)]);
        }
        bool advanced = false;
        for (int i = 0; i < 4 && !advanced; ++i) {
            const auto [da, db] = dirs[order[i]];
            const int na = a + da;
            const int nb = b + db;
            if (na < 0 || na >= lattice || nb < 0 || nb >= lattice) continue;
            if (visited[static_cast<std::size_t>(nb) * lattice + na]) continue;
            visited[static_cast<std::size_t>(nb) * lattice + na] = 1;
            const Cell o = room_origin(a, b);
            if (da != 0) {
                const int wall_x = da > 0 ? o.x() + corridor_width : o.x() - 1;
                fill_rect(grid, wall_x, o.y(), 1, corridor_width, CellState::Free);
            } else {
                const int wall_y = db > 0 ? o.y() + corridor_width : o.y() - 1;
                fill_rect(grid, o.x(), wall_y, corridor_width, 1, CellState::Free);
            }
            stack.emplace_back(na, nb);
            advanced = true;
        }
        if (!advanced) stack.pop_back();
    }
    return grid;
}

OccupancyGrid generate_random_obstacles(std::uint64_t seed, double side,
                                        double resolution, double density) {
    const int n = grid_cells(side, resolution);
    if (!(density >= 0.0) || density >= 0.5) {
        throw std::invalid_argument("generate_random_obstacles: density must be in [0, 0.5)");
    }

    OccupancyGrid grid(n, n, resolution, CellState::Free);
    fill_rect(grid, 0, 0, n, 1, CellState::Obstacle);
    fill_rect(grid, 0, n - 1, n, 1, CellState::Obstacle);
    fill_rect(grid, 0, 0, 1, n, CellState::Obstacle);
    fill_rect(grid, n - 1, 0, 1, n, CellState::Obstacle);

    const int interior = (n - 2) * (n - 2);
    const long target = std::lround(density * interior);
    if (target == 0) return grid;

    RngStream rng(derive_seed(seed, {fnv1a64("random_obstacle")}));
    long placed = 0;
    const long max_attempts = 400 + 40 * (target / 16 + 1);
    std::vector<int> shape;
    for (long attempt = 0; attempt < max_attempts && placed < target; ++attempt) {
        shape.clear();
        if (rng.uniform01() < 0.5) {
            const int w = rng.uniform_int(2, 8);
            const int h = rng.uniform_int(2, 8);
            const int x = rng.uniform_int(1, n - 1 - w);
            const int y = rng.uniform_int(1, n - 1 - h);
            for (int yy = y; yy < y + h; ++yy) {
                for (int xx = x; xx < x + w; ++xx) {
                    shape.push_back(yy * n + xx);
                }
            }
        } else {
            const int r = rng.uniform_int(1, 4);
            const int cx = rng.uniform_int(1 + r, n - 2 - r);
            const int cy = rng.uniform_int(1 + r, n - 2 - r);
            for (int yy = cy - r; yy <= cy + r; ++yy) {
                for (int xx = cx - r; xx <= cx + r; ++xx) {
                    const int dx = xx - cx;
                    const int dy = yy - cy;
                    if (dx * dx + dy * dy <= r * r) shape.push_back(yy * n + xx);
                }
            }
        }

        std::vector<int> changed;
        for (int idx : shape) {
            if (grid.at_index(idx) == CellState::Free) {
                grid.at_index(idx) = CellState::Obstacle;
                changed.push_back(idx);
            }
        }
        if (changed.empty()) continue;
        if (free_space_connected(grid)) {
            placed += static_cast<long>(changed.size());
        } else {
            for (int idx : changed) grid.at_index(idx) = CellState::Free;
        }
    }
    if (placed * 2 < target) {
        throw std::runtime_error("generate_random_obstacles: could not reach target density");
    }
    return grid;
}

void ScenarioConfig::validate() const {
    if (!(side > 0.0) || !(resolution > 0.0)) {
        throw std::invalid_argument("scenario: side and resolution must be positive");
    }
    if (global_step_budget < 0) {
        throw std::invalid_argument("scenario: global step budget must be >= 0");
    }
    if (local_steps_per_decision < 1) {
        throw std::invalid_argument("scenario: local steps per decision must be >= 1");
    }
    if (!(lidar_range > 0.0) || !(dt > 0.0) || !(lidar_angular_resolution > 0.0)) {
        throw std::invalid_argument("scenario: lidar range, dt, angular resolution must be positive");
    }
    if (!(completion_threshold > 0.0) || completion_threshold > 1.0) {
        throw std::invalid_argument("scenario: completion threshold must be in (0, 1]");
    }
    if (kind == Kind::Maze && corridor_width < 2) {
        throw std::invalid_argument("scenario: corridor width must be >= 2");
    }
    if (kind == Kind::RandomObstacle &&
        (!(obstacle_density >= 0.0) || obstacle_density >= 0.5)) {
        throw std::invalid_argument("scenario: obstacle density must be in [0, 0.5)");
    }
}

ScenarioConfig ScenarioConfig::maze_defaults() {
    ScenarioConfig s;
    s.kind = Kind::Maze;
    s.local_steps_per_decision = 20;
    s.lidar_range = 10.0;
    return s;
}

ScenarioConfig ScenarioConfig::random_obstacle_defaults() {
    ScenarioConfig s;
    s.kind = Kind::RandomObstacle;
    s.local_steps_per_decision = 30;
    s.lidar_range = 12.0;
    return s;
}

OccupancyGrid build_scenario_map(const ScenarioConfig& scenario) {
    scenario.validate();
    switch (scenario.kind) {
    case ScenarioConfig::Kind::Maze:
        return generate_maze(scenario.seed, scenario.side, scenario.resolution,
                             scenario.corridor_width);
    case ScenarioConfig::Kind::RandomObstacle:
        return generate_random_obstacles(scenario.seed, scenario.side,
                                         scenario.resolution, scenario.obstacle_density);
    }
    throw std::invalid_argument("scenario: unknown kind");
}

} // namespace exsim
