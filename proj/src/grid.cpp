#include "exsim/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace exsim {

OccupancyGrid::OccupancyGrid(int width, int height, double resolution, CellState fill)
    : width_(width), height_(height), resolution_(resolution) {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("OccupancyGrid: dimensions must be positive");
    }
    if (!(resolution > 0.0)) {
        throw std::invalid_argument("OccupancyGrid: resolution must be positive");
    }
    cells_.assign(static_cast<std::size_t>(width) * height, fill);
}

int OccupancyGrid::count(CellState s) const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), s));
}

} // namespace exsim
