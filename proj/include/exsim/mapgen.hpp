#pragma once

#include "exsim/grid.hpp"

#include <cstdint>
#include <numbers>

namespace exsim {

/// Scenario description: map family plus the task budget that drives one
/// exploration episode.
struct ScenarioConfig {
    enum class Kind { Maze, RandomObstacle };

    Kind kind = Kind::Maze;
    double side = 125.0;                 // meters, square map
    double resolution = 1.0;             // meters per cell
    int corridor_width = 3;              // maze corridors, in cells
    double obstacle_density = 0.2;       // random-obstacle fill fraction
    int global_step_budget = 30;         // decisions per episode
    int local_steps_per_decision = 20;   // movement ticks between decisions
    double lidar_range = 10.0;           // meters
    double lidar_angular_resolution = std::numbers::pi / 180.0;
    double dt = 0.1;                     // seconds per movement tick
    double completion_threshold = 0.95;
    std::uint64_t seed = 0;              // map generator seed

    void validate() const; // throws std::invalid_argument

    static ScenarioConfig maze_defaults();
    static ScenarioConfig random_obstacle_defaults();
};

/// Recursive-backtracker maze on a coarse lattice, corridors dilated to
/// corridor_width cells. Fully known grid, free space one 4-connected
/// component, outer boundary Obstacle. A corridor width that does not leave
/// room for at least a 2x2 lattice degenerates into a single open room.
/// Throws std::invalid_argument on invalid dimensions or corridor_width < 2.
OccupancyGrid generate_maze(std::uint64_t seed, double side, double resolution,
                            int corridor_width);

/// Scattered rectangular/circular obstacles; each placement is rejected if it
/// would disconnect the free space, so free cells always form one 4-connected
/// component inside an Obstacle boundary ring. Throws std::invalid_argument
/// for density outside [0, 0.5) and std::runtime_error if the target density
/// cannot be approached within bounded retries.
OccupancyGrid generate_random_obstacles(std::uint64_t seed, double side,
                                        double resolution, double density);

/// Builds the ground-truth map described by a scenario.
OccupancyGrid build_scenario_map(const ScenarioConfig& scenario);

} // namespace exsim
