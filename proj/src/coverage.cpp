#include "exsim/coverage.hpp"

#include <algorithm>
#include <stdexcept>

namespace exsim {

void merge_into(OccupancyGrid& dst, const OccupancyGrid& src) {
    if (!dst.same_geometry(src)) {
        throw std::domain_error("merge_maps: geometry mismatch");
    }
    auto d = dst.cells();
    auto s = src.cells();
    for (int i = 0; i < dst.cell_count(); ++i) {
        // Join order Unknown < Free < Obstacle: known beats Unknown,
        // Obstacle beats Free.
        if (static_cast<std::uint8_t>(s[i]) > static_cast<std::uint8_t>(d[i])) {
            d[i] = s[i];
        }
    }
}

OccupancyGrid merge_maps(const std::vector<const OccupancyGrid*>& beliefs) {
    if (beliefs.empty()) {
        throw std::domain_error("merge_maps: empty input");
    }
    OccupancyGrid merged = *beliefs.front();
    for (std::size_t i = 1; i < beliefs.size(); ++i) {
        merge_into(merged, *beliefs[i]);
    }
    return merged;
}

std::vector<std::int32_t> detect_frontiers(const OccupancyGrid& belief) {
    std::vector<std::int32_t> frontiers;
    const int w = belief.width();
    const int h = belief.height();
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (belief.at(x, y) != CellState::Free) continue;
            const bool frontier =
                (x > 0 && belief.at(x - 1, y) == CellState::Unknown) ||
                (x + 1 < w && belief.at(x + 1, y) == CellState::Unknown) ||
                (y > 0 && belief.at(x, y - 1) == CellState::Unknown) ||
                (y + 1 < h && belief.at(x, y + 1) == CellState::Unknown);
            if (frontier) frontiers.push_back(belief.index_of(x, y));
        }
    }
    return frontiers;
}

std::vector<std::int32_t> reachable_free_cells(const OccupancyGrid& truth, const Cell& start) {
    if (!truth.in_bounds(start) || truth.at(start.x(), start.y()) != CellState::Free) {
        throw std::domain_error("reachable_free_cells: start cell is not Free");
    }
    const int w = truth.width();
    const int h = truth.height();
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::int32_t> queue;
    queue.push_back(truth.index_of(start));
    seen[queue.front()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::int32_t idx = queue[head];
        const int x = idx % w;
        const int y = idx / w;
        const auto push = [&](int nx, int ny) {
            if (nx < 0 || nx >= w || ny < 0 || ny >= h) return;
            const std::int32_t n = ny * w + nx;
            if (!seen[n] && truth.at_index(n) == CellState::Free) {
                seen[n] = 1;
                queue.push_back(n);
            }
        };
        push(x - 1, y);
        push(x + 1, y);
        push(x, y - 1);
        push(x, y + 1);
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

double exploration_ratio(const OccupancyGrid& belief,
                         const std::vector<std::int32_t>& reachable) {
    if (reachable.empty()) {
        throw std::domain_error("exploration_ratio: empty reachable set");
    }
    long known = 0;
    for (std::int32_t idx : reachable) {
        if (belief.at_index(idx) != CellState::Unknown) ++known;
    }
    return static_cast<double>(known) / static_cast<double>(reachable.size());
}

} // namespace exsim
