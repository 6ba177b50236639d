#pragma once

// End-to-end scenario execution and the run record: detect -> relay ->
// dedupe -> plan out -> plan home, plus metrics against the shortest-path
// oracle. emit_run is canonical (sorted keys, stable number formatting);
// check_record independently replays a record against the obstacle map
// and recomputes everything recomputable.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gridfire/detection.hpp"
#include "gridfire/oracle.hpp"
#include "gridfire/planner.hpp"
#include "gridfire/scenario.hpp"

namespace gridfire {

struct RunMetrics {
    int path_length = 0;               // outbound moves taken (partial on failure)
    std::optional<int> oracle_length;  // BFS minimum, absent when unreachable
    bool oracle_reachable = false;
    Outcome outcome = Outcome::Reached;
    std::optional<int> detour_excess;  // path_length - oracle_length, Reached only

    friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

struct RunRecord {
    ScenarioConfig scenario;
    std::vector<DetectionMessage> messages;
    ActorInbox inbox;
    PathTrace outbound;
    std::optional<PathTrace> return_trip;
    RunMetrics metrics;
};

inline RunRecord run_scenario(const ScenarioConfig& config) {
    validate(config);

    const GridSpec& grid = config.grid;
    const SensorField field{grid};
    const ObstacleMap obstacles = make_obstacle_map(grid, config.obstacles);
    const FireEvent fire = fire_event(config);

    RunRecord rec;
    rec.scenario = config;
    rec.messages = broadcast(fire, field, config.spread_speed);
    rec.inbox = dedupe_first(rec.messages);

    DispatchResult dispatch =
        dispatch_and_extinguish(rec.inbox, config.actor_start, grid, obstacles,
                                config.planner.max_steps, config.planner.mode);
    rec.outbound = std::move(dispatch.outbound);
    rec.return_trip = std::move(dispatch.return_trip);

    const OracleResult oracle = bfs_shortest(config.actor_start, fire.cell,
                                             obstacles, grid);
    rec.metrics.path_length = rec.outbound.length();
    rec.metrics.oracle_reachable = oracle.reachable;
    rec.metrics.oracle_length = oracle.shortest_length;
    rec.metrics.outcome = rec.outbound.outcome;
    if (rec.outbound.outcome == Outcome::Reached && oracle.shortest_length)
        rec.metrics.detour_excess = rec.outbound.length() - *oracle.shortest_length;
    return rec;
}

// --- independent re-validation ----------------------------------------------

namespace detail {

inline void record_fail(const std::string& field, const std::string& reason) {
    throw ValidationError("record." + field, reason);
}

// Replays one trace move by move and re-checks the outcome semantics.
inline void check_trace(const PathTrace& trace, CellCoord start, CellCoord goal,
                        const ObstacleMap& obstacles, const GridSpec& grid,
                        int max_steps, const std::string& field) {
    if (trace.start != start) record_fail(field, "start does not match scenario");
    if (trace.goal != goal) record_fail(field, "goal does not match scenario");
    if (trace.length() > max_steps) record_fail(field, "more moves than max_steps");

    VisitedSet visited(grid);
    visited.insert(start);
    CellCoord current = start;
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        const Move& m = trace.moves[i];
        const std::string at = field + ".moves[" + std::to_string(i) + "]";
        const CellOffset o = offset(m.dir);
        if (m.to != CellCoord{current.row + o.row_delta, current.col + o.col_delta})
            record_fail(at, "cell does not follow from the move direction");
        if (!grid.contains(m.to)) record_fail(at, "move leaves the grid");
        if (obstacles.occupied(m.to))
            record_fail(at, "move enters obstacle " + to_string(m.to));
        current = m.to;
        const bool repeat = visited.insert(current);
        const bool last = i + 1 == trace.moves.size();
        if (repeat && !(last && trace.outcome == Outcome::Livelock))
            record_fail(at, "cell revisited before the end of the walk");
    }

    switch (trace.outcome) {
        case Outcome::Reached:
            if (current != goal) record_fail(field, "reached but not at goal");
            break;
        case Outcome::Livelock: {
            if (trace.moves.empty()) record_fail(field, "livelock with no moves");
            // The final cell must duplicate an earlier one; earlier cells are
            // all distinct (checked above), so this is the first repeat.
            const CellCoord final_cell = trace.moves.back().to;
            bool seen = final_cell == start;
            for (std::size_t i = 0; i + 1 < trace.moves.size() && !seen; ++i)
                seen = trace.moves[i].to == final_cell;
            if (!seen) record_fail(field, "livelock without a repeated cell");
            break;
        }
        case Outcome::NoFreeNeighbor:
            for (Direction d : kAllDirections) {
                const auto n = neighbor(current, d, grid);
                if (n && !obstacles.blocked(*n))
                    record_fail(field, "no_free_neighbor but " + to_string(*n) +
                                           " is free");
            }
            if (current == goal) record_fail(field, "no_free_neighbor at the goal");
            break;
        case Outcome::StepBudgetExhausted:
            if (trace.length() != max_steps)
                record_fail(field, "budget outcome without exhausting max_steps");
            if (current == goal) record_fail(field, "budget outcome at the goal");
            break;
    }
}

}  // namespace detail

// Replays the record against its own scenario: message pipeline, both
// traces and all metrics must be reproducible from the config. Throws
// ValidationError naming the inconsistent field.
inline void check_record(const RunRecord& rec) {
    validate(rec.scenario);
    const GridSpec& grid = rec.scenario.grid;
    const ObstacleMap obstacles = make_obstacle_map(grid, rec.scenario.obstacles);
    const FireEvent fire = fire_event(rec.scenario);
    const CellCoord start = rec.scenario.actor_start;

    const auto expected_messages =
        broadcast(fire, SensorField{grid}, rec.scenario.spread_speed);
    if (rec.messages != expected_messages)
        detail::record_fail("messages", "not reproducible from the scenario");

    const ActorInbox expected_inbox = dedupe_first(rec.messages);
    if (!rec.inbox.accepted) detail::record_fail("inbox", "no accepted message");
    if (*rec.inbox.accepted != *expected_inbox.accepted ||
        rec.inbox.discarded_count != expected_inbox.discarded_count)
        detail::record_fail("inbox", "does not match first-wins dedupe");

    detail::check_trace(rec.outbound, start, fire.cell, obstacles, grid,
                        rec.scenario.planner.max_steps, "outbound");

    if (rec.outbound.outcome == Outcome::Reached) {
        if (!rec.return_trip)
            detail::record_fail("return_trip", "missing after a reached outbound");
        detail::check_trace(*rec.return_trip, fire.cell, start, obstacles, grid,
                            rec.scenario.planner.max_steps, "return_trip");
    } else if (rec.return_trip) {
        detail::record_fail("return_trip", "present although outbound failed");
    }

    RunMetrics m;
    const OracleResult oracle = bfs_shortest(start, fire.cell, obstacles, grid);
    m.path_length = rec.outbound.length();
    m.oracle_reachable = oracle.reachable;
    m.oracle_length = oracle.shortest_length;
    m.outcome = rec.outbound.outcome;
    if (rec.outbound.outcome == Outcome::Reached && oracle.shortest_length)
        m.detour_excess = rec.outbound.length() - *oracle.shortest_length;
    if (m != rec.metrics)
        detail::record_fail("metrics", "not consistent with the embedded traces");
}

// --- canonical serialization --------------------------------------------------

namespace detail {

inline json message_json(const DetectionMessage& m) {
    return {{"arrival_time", m.arrival_time},
            {"fire_cell", cell_json(m.fire_cell)},
            {"origin_sensor", cell_json(m.origin_sensor)},
            {"relay_corner", cell_json(m.relay_corner)}};
}

inline json trace_json(const PathTrace& t) {
    json moves = json::array();
    for (const Move& m : t.moves)
        moves.push_back(json::array({code(m.dir), m.to.row, m.to.col}));
    return {{"start", cell_json(t.start)},
            {"goal", cell_json(t.goal)},
            {"moves", moves},
            {"outcome", to_string(t.outcome)}};
}

}  // namespace detail

inline nlohmann::json run_to_json(const RunRecord& rec) {
    nlohmann::json j;
    j["scenario"] = scenario_to_json(rec.scenario);
    j["messages"] = nlohmann::json::array();
    for (const DetectionMessage& m : rec.messages)
        j["messages"].push_back(detail::message_json(m));
    j["inbox"] = {{"accepted", rec.inbox.accepted
                                   ? detail::message_json(*rec.inbox.accepted)
                                   : nlohmann::json()},
                  {"discarded_count", rec.inbox.discarded_count}};
    j["outbound"] = detail::trace_json(rec.outbound);
    j["return_trip"] = rec.return_trip ? detail::trace_json(*rec.return_trip)
                                       : nlohmann::json();
    j["metrics"] = {
        {"path_length", rec.metrics.path_length},
        {"oracle_length", rec.metrics.oracle_length
                              ? nlohmann::json(*rec.metrics.oracle_length)
                              : nlohmann::json()},
        {"oracle_reachable", rec.metrics.oracle_reachable},
        {"outcome", to_string(rec.metrics.outcome)},
        {"detour_excess", rec.metrics.detour_excess
                              ? nlohmann::json(*rec.metrics.detour_excess)
                              : nlohmann::json()},
    };
    return j;
}

// Canonical run serialization: identical runs produce identical bytes.
inline std::string emit_run(const RunRecord& rec) {
    return run_to_json(rec).dump(2) + "\n";
}

}  // namespace gridfire
