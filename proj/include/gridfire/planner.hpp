#pragma once

// Incremental actor path planning. Each step moves one cell in the
// direction whose sign pattern points at the goal; when that cell is
// blocked, an anticlockwise scan picks the first free neighbor instead.
//
// The planner is memoryless: the next move depends only on the current
// cell, the goal and the obstacle map. Revisiting any cell therefore
// proves the walk is periodic, so livelock detection by cell revisit is
// exact rather than heuristic. A step budget remains as a second guard
// for callers that ask for one.

#include <optional>
#include <stdexcept>
#include <vector>

#include "gridfire/detection.hpp"
#include "gridfire/grid.hpp"

namespace gridfire {

enum class Outcome {
    Reached,              // actor is standing on the goal cell
    NoFreeNeighbor,       // all eight neighbors blocked; actor enclosed
    Livelock,             // a cell repeated; the walk would cycle forever
    StepBudgetExhausted,  // max_steps moves taken without reaching the goal
};

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Reached:             return "reached";
        case Outcome::NoFreeNeighbor:      return "no_free_neighbor";
        case Outcome::Livelock:            return "livelock";
        case Outcome::StepBudgetExhausted: return "step_budget_exhausted";
    }
    return "unknown";
}

struct Move {
    Direction dir;
    CellCoord to;

    friend constexpr bool operator==(Move, Move) = default;
};

struct PathTrace {
    CellCoord start;
    CellCoord goal;
    std::vector<Move> moves;
    Outcome outcome = Outcome::Reached;

    int length() const { return static_cast<int>(moves.size()); }

    CellCoord final_cell() const { return moves.empty() ? start : moves.back().to; }

    friend bool operator==(const PathTrace&, const PathTrace&) = default;
};

// Direction whose offset signs match the coordinate differences to the
// goal: row above -> up family, column to the right -> right family, and
// so on. nullopt once both coordinates agree (already at the goal).
constexpr std::optional<Direction> direction_code(CellCoord current, CellCoord goal) {
    const int dr = current.row - goal.row;
    const int dc = current.col - goal.col;
    if (dr == 0 && dc == 0) return std::nullopt;
    if (dr > 0)  return dc < 0 ? Direction::UpRight
                 : dc == 0    ? Direction::Up
                              : Direction::UpLeft;
    if (dr < 0)  return dc > 0 ? Direction::DownLeft
                 : dc == 0    ? Direction::Down
                              : Direction::DownRight;
    return dc > 0 ? Direction::Left : Direction::Right;
}

namespace detail {

inline void require_in_bounds(CellCoord c, const GridSpec& grid, const char* what) {
    if (!grid.contains(c))
        throw std::invalid_argument(std::string(what) + " " + to_string(c) +
                                    " outside grid");
}

// Dense visited set; deterministic and cheap for repeated planning runs.
class VisitedSet {
  public:
    explicit VisitedSet(const GridSpec& grid)
        : cols_(grid.cols), seen_(static_cast<std::size_t>(grid.cell_count()), 0) {}

    // Returns true if the cell was already present.
    bool insert(CellCoord c) {
        auto& slot = seen_[static_cast<std::size_t>(c.row - 1) * cols_ + (c.col - 1)];
        const bool repeat = slot != 0;
        slot = 1;
        return repeat;
    }

  private:
    int cols_;
    std::vector<std::uint8_t> seen_;
};

}  // namespace detail

// Obstacle-free walk: step toward the goal until both coordinates match.
// Every move cuts the Chebyshev distance by exactly one, so the trace
// always reaches the goal in chebyshev(start, goal) moves.
inline PathTrace plan_free(CellCoord start, CellCoord goal, const GridSpec& grid) {
    detail::require_in_bounds(start, grid, "start");
    detail::require_in_bounds(goal, grid, "goal");

    PathTrace trace{start, goal, {}, Outcome::Reached};
    CellCoord current = start;
    while (auto d = direction_code(current, goal)) {
        const CellOffset o = offset(*d);
        current = {current.row + o.row_delta, current.col + o.col_delta};
        trace.moves.push_back({*d, current});
    }
    return trace;
}

// When the intended move is blocked, scan the remaining seven directions
// anticlockwise from it (intended+1, intended+2, ... wrapping 8 -> 1) and
// take the first in-bounds, obstacle-free neighbor. nullopt means the
// actor is fully enclosed. The intended direction itself is not
// rechecked; callers invoke this only on blockage.
inline std::optional<Move> freespace_search(CellCoord current, Direction intended,
                                            const ObstacleMap& obstacles,
                                            const GridSpec& grid) {
    for (int step = 1; step <= 7; ++step) {
        const Direction d = rotate_anticlockwise(intended, step);
        if (auto next = neighbor(current, d, grid); next && !obstacles.blocked(*next))
            return Move{d, *next};
    }
    return std::nullopt;
}

// Obstacle-aware walk. Per iteration: take the goal-directed move if its
// cell is free, otherwise detour via the anticlockwise scan. Terminates
// with Reached at the goal, Livelock on the first repeated cell,
// NoFreeNeighbor when enclosed, or StepBudgetExhausted after max_steps
// moves. The trace never enters an obstacle or leaves the grid.
inline PathTrace plan_obstacles(CellCoord start, CellCoord goal,
                                const ObstacleMap& obstacles, const GridSpec& grid,
                                int max_steps) {
    detail::require_in_bounds(start, grid, "start");
    detail::require_in_bounds(goal, grid, "goal");
    if (obstacles.blocked(start))
        throw std::invalid_argument("start cell " + to_string(start) + " is an obstacle");
    if (obstacles.blocked(goal))
        throw std::invalid_argument("goal cell " + to_string(goal) + " is an obstacle");
    if (max_steps < 1) throw std::invalid_argument("max_steps must be positive");

    PathTrace trace{start, goal, {}, Outcome::Reached};
    detail::VisitedSet visited(grid);
    visited.insert(start);

    CellCoord current = start;
    while (true) {
        const auto intended = direction_code(current, goal);
        if (!intended) {
            trace.outcome = Outcome::Reached;
            break;
        }
        if (trace.length() >= max_steps) {
            trace.outcome = Outcome::StepBudgetExhausted;
            break;
        }

        Move move{*intended, current};
        if (auto next = neighbor(current, *intended, grid);
            next && !obstacles.blocked(*next)) {
            move.to = *next;
        } else if (auto detour = freespace_search(current, *intended, obstacles, grid)) {
            move = *detour;
        } else {
            trace.outcome = Outcome::NoFreeNeighbor;
            break;
        }

        trace.moves.push_back(move);
        current = move.to;
        if (visited.insert(current)) {
            trace.outcome = Outcome::Livelock;  // first repeated cell ends the walk
            break;
        }
    }
    return trace;
}

enum class PlannerMode { Free, Obstacles };

struct DispatchResult {
    PathTrace outbound;
    std::optional<PathTrace> return_trip;  // only present when the fire was reached
};

// Full actor response to an accepted report: plan to the fire cell,
// extinguish (instantaneous), and plan the trip home. No return trip is
// attempted when the outbound plan fails.
inline DispatchResult dispatch_and_extinguish(const ActorInbox& inbox,
                                              CellCoord actor_start,
                                              const GridSpec& grid,
                                              const ObstacleMap& obstacles,
                                              int max_steps,
                                              PlannerMode mode = PlannerMode::Obstacles) {
    if (!inbox.accepted)
        throw std::invalid_argument("no accepted detection message to dispatch on");
    const CellCoord fire = inbox.accepted->fire_cell;

    const auto plan = [&](CellCoord from, CellCoord to) {
        return mode == PlannerMode::Free ? plan_free(from, to, grid)
                                         : plan_obstacles(from, to, obstacles, grid,
                                                          max_steps);
    };

    DispatchResult result{plan(actor_start, fire), std::nullopt};
    if (result.outbound.outcome == Outcome::Reached)
        result.return_trip = plan(fire, actor_start);
    return result;
}

}  // namespace gridfire
