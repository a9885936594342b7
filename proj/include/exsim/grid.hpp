#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

namespace exsim {

using Vec2 = Eigen::Vector2d;
using Cell = Eigen::Vector2i;

enum class CellState : std::uint8_t { Unknown = 0, Free = 1, Obstacle = 2 };

/// Row-major 2D cell field. Serves as both the ground-truth world and a
/// per-agent belief: a ground-truth grid contains no Unknown cells, a belief
/// may contain any state. World x runs along columns, y along rows; cell
/// (x, y) owns the square [x*res, (x+1)*res) x [y*res, (y+1)*res).
class OccupancyGrid {
public:
    OccupancyGrid() = default;
    OccupancyGrid(int width, int height, double resolution,
                  CellState fill = CellState::Unknown);

    int width() const { return width_; }
    int height() const { return height_; }
    double resolution() const { return resolution_; }
    int cell_count() const { return width_ * height_; }
    double side_x() const { return width_ * resolution_; }
    double side_y() const { return height_ * resolution_; }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }
    bool in_bounds(const Cell& c) const { return in_bounds(c.x(), c.y()); }

    // Point strictly inside the map rectangle (cell lookup is valid).
    bool contains(const Vec2& p) const {
        return p.x() >= 0.0 && p.x() < side_x() && p.y() >= 0.0 && p.y() < side_y();
    }
    // Closed-rectangle test; admits points on the far boundary (valid goals,
    // not valid cell lookups).
    bool contains_closed(const Vec2& p) const {
        return p.x() >= 0.0 && p.x() <= side_x() && p.y() >= 0.0 && p.y() <= side_y();
    }

    int index_of(int x, int y) const { return y * width_ + x; }
    int index_of(const Cell& c) const { return index_of(c.x(), c.y()); }
    Cell cell_at(int index) const { return {index % width_, index / width_}; }

    Cell cell_of(const Vec2& p) const {
        return {static_cast<int>(std::floor(p.x() / resolution_)),
                static_cast<int>(std::floor(p.y() / resolution_))};
    }
    Vec2 center_of(int x, int y) const {
        return {(x + 0.5) * resolution_, (y + 0.5) * resolution_};
    }
    Vec2 center_of(const Cell& c) const { return center_of(c.x(), c.y()); }
    Vec2 center_of_index(int index) const { return center_of(cell_at(index)); }

    CellState at(int x, int y) const { return cells_[index_of(x, y)]; }
    CellState& at(int x, int y) { return cells_[index_of(x, y)]; }
    CellState at_index(int index) const { return cells_[index]; }
    CellState& at_index(int index) { return cells_[index]; }
    CellState at_point(const Vec2& p) const { return cells_[index_of(cell_of(p))]; }

    std::span<const CellState> cells() const { return cells_; }
    std::span<CellState> cells() { return cells_; }

    bool same_geometry(const OccupancyGrid& other) const {
        return width_ == other.width_ && height_ == other.height_ &&
               resolution_ == other.resolution_;
    }

    int count(CellState s) const;
    int known_count() const { return cell_count() - count(CellState::Unknown); }

    void fill(CellState s) { std::fill(cells_.begin(), cells_.end(), s); }

    bool operator==(const OccupancyGrid&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    double resolution_ = 1.0;
    std::vector<CellState> cells_;
};

} // namespace exsim
