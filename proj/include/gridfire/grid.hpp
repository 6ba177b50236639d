#pragma once

// Matrix-coordinate grid geometry: cells, bounds, the eight move
// directions and the distance measure shared by every other component.
//
// Coordinates are 1-indexed (row, col) with rows growing downward, the
// way matrix elements are addressed. All types are immutable values
// after construction and safe to share across threads.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridfire {

struct CellCoord {
    int row = 0;
    int col = 0;

    friend constexpr bool operator==(CellCoord, CellCoord) = default;
    friend constexpr auto operator<=>(CellCoord, CellCoord) = default;
};

inline std::string to_string(CellCoord c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// Grid of rows x cols square cells. Each cell hosts one sensor with a
// circular sensing disc of radius sensing_range; the cell side is tied
// to the sensing range by construction (side = 2r, the inscribed disc).
struct GridSpec {
    int rows = 0;
    int cols = 0;
    double sensing_range = 1.0;

    constexpr double cell_side() const { return 2.0 * sensing_range; }

    constexpr bool contains(CellCoord c) const {
        return c.row >= 1 && c.row <= rows && c.col >= 1 && c.col <= cols;
    }

    constexpr std::int64_t cell_count() const {
        return static_cast<std::int64_t>(rows) * cols;
    }

    friend constexpr bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline void validate_grid(const GridSpec& g) {
    if (g.rows < 1 || g.cols < 1)
        throw std::invalid_argument("grid dimensions must be at least 1x1");
    if (!(g.sensing_range > 0.0))
        throw std::invalid_argument("sensing range must be positive");
}

// The eight move directions. Codes are fixed by the obstacle-check
// offsets of the planner's detour scan: 1 is up-right and code+1 is one
// anticlockwise step on screen (rows grow downward), wrapping 8 -> 1.
enum class Direction : int {
    UpRight   = 1,  // (-1,+1)
    Up        = 2,  // (-1, 0)
    UpLeft    = 3,  // (-1,-1)
    Left      = 4,  // ( 0,-1)
    DownLeft  = 5,  // (+1,-1)
    Down      = 6,  // (+1, 0)
    DownRight = 7,  // (+1,+1)
    Right     = 8,  // ( 0,+1)
};

struct CellOffset {
    int row_delta = 0;
    int col_delta = 0;

    friend constexpr bool operator==(CellOffset, CellOffset) = default;
};

inline constexpr std::array<Direction, 8> kAllDirections = {
    Direction::UpRight, Direction::Up,   Direction::UpLeft,    Direction::Left,
    Direction::DownLeft, Direction::Down, Direction::DownRight, Direction::Right,
};

constexpr CellOffset offset(Direction d) {
    switch (d) {
        case Direction::UpRight:   return {-1, +1};
        case Direction::Up:        return {-1, 0};
        case Direction::UpLeft:    return {-1, -1};
        case Direction::Left:      return {0, -1};
        case Direction::DownLeft:  return {+1, -1};
        case Direction::Down:      return {+1, 0};
        case Direction::DownRight: return {+1, +1};
        case Direction::Right:     return {0, +1};
    }
    return {0, 0};  // unreachable for valid codes
}

constexpr int code(Direction d) { return static_cast<int>(d); }

inline Direction direction_from_code(int c) {
    if (c < 1 || c > 8)
        throw std::invalid_argument("direction code must be in [1,8]");
    return static_cast<Direction>(c);
}

// One anticlockwise step on screen: 1 -> 2 -> ... -> 8 -> 1.
constexpr Direction rotate_anticlockwise(Direction d, int steps = 1) {
    int c = (static_cast<int>(d) - 1 + steps) % 8;
    if (c < 0) c += 8;
    return static_cast<Direction>(c + 1);
}

constexpr Direction opposite(Direction d) { return rotate_anticlockwise(d, 4); }

// Cell one step away in direction d, or nullopt when the move would
// leave the grid. Callers treat out-of-bounds exactly like an obstacle.
constexpr std::optional<CellCoord> neighbor(CellCoord cell, Direction d,
                                            const GridSpec& grid) {
    const CellOffset o = offset(d);
    const CellCoord next{cell.row + o.row_delta, cell.col + o.col_delta};
    if (!grid.contains(next)) return std::nullopt;
    return next;
}

// Minimal move count between two cells on an empty 8-connected grid.
constexpr int chebyshev(CellCoord a, CellCoord b) {
    const int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
    const int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
    return dr > dc ? dr : dc;
}

// The actor's home cell. Even-sized grids have no exact center; we fix
// the upper-left of the four central cells: (ceil(m/2), ceil(n/2)).
constexpr CellCoord center_cell(const GridSpec& grid) {
    return {(grid.rows + 1) / 2, (grid.cols + 1) / 2};
}

// Boolean occupancy array over the grid, true where a cell holds an
// obstacle. Obstacles never span more than one cell.
class ObstacleMap {
  public:
    ObstacleMap() = default;

    explicit ObstacleMap(const GridSpec& grid)
        : grid_(grid), occupied_(static_cast<std::size_t>(grid.cell_count()), 0) {}

    const GridSpec& grid() const { return grid_; }

    void add(CellCoord c) {
        occupied_.at(index(c)) = 1;
    }

    bool blocked(CellCoord c) const {
        if (!grid_.contains(c)) return true;  // edges behave like obstacles
        return occupied_[index(c)] != 0;
    }

    bool occupied(CellCoord c) const {
        return grid_.contains(c) && occupied_[index(c)] != 0;
    }

    int count() const {
        int n = 0;
        for (auto v : occupied_) n += v;
        return n;
    }

    // Occupied cells in row-major order.
    std::vector<CellCoord> cells() const {
        std::vector<CellCoord> out;
        for (int r = 1; r <= grid_.rows; ++r)
            for (int c = 1; c <= grid_.cols; ++c)
                if (occupied_[index({r, c})]) out.push_back({r, c});
        return out;
    }

  private:
    std::size_t index(CellCoord c) const {
        if (!grid_.contains(c))
            throw std::out_of_range("cell " + to_string(c) + " outside grid");
        return static_cast<std::size_t>(c.row - 1) * grid_.cols + (c.col - 1);
    }

    GridSpec grid_;
    std::vector<std::uint8_t> occupied_;
};

inline ObstacleMap make_obstacle_map(const GridSpec& grid,
                                     const std::vector<CellCoord>& cells) {
    ObstacleMap map(grid);
    for (auto c : cells) map.add(c);
    return map;
}

}  // namespace gridfire
