#include "exsim/grid_io.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace exsim {

namespace {

constexpr char kMagic[4] = {'E', 'X', 'G', 'R'};
constexpr std::uint8_t kVersion = 1;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(const std::vector<std::uint8_t>& in, std::size_t off) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in[off + i]) << (8 * i);
    return v;
}

} // namespace

std::vector<std::uint8_t> grid_to_bytes(const OccupancyGrid& grid) {
    std::vector<std::uint8_t> out;
    out.reserve(21 + grid.cell_count());
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kVersion);
    put_u32(out, static_cast<std::uint32_t>(grid.width()));
    put_u32(out, static_cast<std::uint32_t>(grid.height()));
    std::uint64_t bits;
    const double res = grid.resolution();
    std::memcpy(&bits, &res, sizeof bits);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
    for (CellState c : grid.cells()) out.push_back(static_cast<std::uint8_t>(c));
    return out;
}

OccupancyGrid grid_from_bytes(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 21 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw std::runtime_error("grid_from_bytes: bad magic");
    }
    if (bytes[4] != kVersion) {
        throw std::runtime_error("grid_from_bytes: unsupported version");
    }
    const std::uint32_t w = get_u32(bytes, 5);
    const std::uint32_t h = get_u32(bytes, 9);
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[13 + i]) << (8 * i);
    double res;
    std::memcpy(&res, &bits, sizeof res);
    if (bytes.size() != 21 + static_cast<std::size_t>(w) * h) {
        throw std::runtime_error("grid_from_bytes: truncated payload");
    }
    OccupancyGrid grid(static_cast<int>(w), static_cast<int>(h), res);
    for (std::size_t i = 0; i < static_cast<std::size_t>(w) * h; ++i) {
        const std::uint8_t b = bytes[21 + i];
        if (b > 2) throw std::runtime_error("grid_from_bytes: invalid cell state");
        grid.at_index(static_cast<int>(i)) = static_cast<CellState>(b);
    }
    return grid;
}

void save_grid(const OccupancyGrid& grid, const std::string& path) {
    const auto bytes = grid_to_bytes(grid);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_grid: cannot open " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

OccupancyGrid load_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_grid: cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return grid_from_bytes(bytes);
}

void save_pgm(const OccupancyGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_pgm: cannot open " + path);
    out << "P5\n" << grid.width() << " " << grid.height() << "\n255\n";
    for (CellState c : grid.cells()) {
        const char v = c == CellState::Free ? char(255)
                     : c == CellState::Unknown ? char(127) : char(0);
        out.put(v);
    }
}

} // namespace exsim
