#pragma once

#include "exsim/grid.hpp"

#include <string>
#include <vector>

namespace exsim {

// Portable binary layout (documented in docs/formats.md):
//   bytes 0-3   magic "EXGR"
//   byte  4     format version (1)
//   bytes 5-8   width,  uint32 little-endian
//   bytes 9-12  height, uint32 little-endian
//   bytes 13-20 resolution, IEEE-754 double little-endian
//   then width*height cell bytes, row-major: 0 Unknown, 1 Free, 2 Obstacle
std::vector<std::uint8_t> grid_to_bytes(const OccupancyGrid& grid);
OccupancyGrid grid_from_bytes(const std::vector<std::uint8_t>& bytes);

void save_grid(const OccupancyGrid& grid, const std::string& path);
OccupancyGrid load_grid(const std::string& path);

// PGM (P5) export for eyeballing: Free 255, Unknown 127, Obstacle 0.
void save_pgm(const OccupancyGrid& grid, const std::string& path);

} // namespace exsim
