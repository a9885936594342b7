#pragma once

#include "exsim/grid.hpp"

#include <cstdint>
#include <vector>

namespace exsim {

/// Cell-wise join of beliefs: any known state beats Unknown, Obstacle beats
/// Free on conflict. Commutative, associative, idempotent. Throws
/// std::domain_error on geometry mismatch or empty input.
OccupancyGrid merge_maps(const std::vector<const OccupancyGrid*>& beliefs);
void merge_into(OccupancyGrid& dst, const OccupancyGrid& src);

/// Free cells 4-adjacent to at least one Unknown cell, as sorted flat indices.
std::vector<std::int32_t> detect_frontiers(const OccupancyGrid& belief);

/// 4-connected flood fill over Free cells. Throws std::domain_error if start
/// is not Free.
std::vector<std::int32_t> reachable_free_cells(const OccupancyGrid& truth, const Cell& start);

/// |{c in reachable : belief[c] != Unknown}| / |reachable|. Throws
/// std::domain_error if reachable is empty.
double exploration_ratio(const OccupancyGrid& belief,
                         const std::vector<std::int32_t>& reachable);

} // namespace exsim
