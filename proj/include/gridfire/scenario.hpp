#pragma once

// Declarative scenario definition: a single JSON document describing the
// grid, obstacles, fire and planner settings. Parsing is strict (unknown
// keys are rejected, every invariant checked) and emit is canonical:
// sorted keys, shortest round-trip numbers, identical configs produce
// identical bytes.
//
// Schema (all data 1-indexed [row, col] cell pairs):
//
//   {
//     "grid":         {"rows": 20, "cols": 20, "sensing_range": 1.0},
//     "obstacles":    [[3, 4], [5, 6]],              // optional, default []
//     "fire":         {"cell": [3, 7], "time": 0.0}, // or "point": [x, y]
//     "actor_start":  [10, 10],                      // optional, default center
//     "planner":      {"mode": "obstacles",          // or "free"
//                      "max_steps": 1600},           // default 4*rows*cols
//     "spread_speed": 2.0,                           // optional, default 2r
//     "seed":         0                              // optional
//   }
//
// "fire" takes exactly one of "cell" (ignition at that cell's center) or
// "point" (continuous position, x down from the top edge, y right from
// the left edge, in length units).

#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gridfire/coverage.hpp"
#include "gridfire/grid.hpp"
#include "gridfire/planner.hpp"
#include "gridfire/rng.hpp"

namespace gridfire {

class ValidationError : public std::runtime_error {
  public:
    ValidationError(std::string field, std::string reason)
        : std::runtime_error(field + ": " + reason),
          field_(std::move(field)),
          reason_(std::move(reason)) {}

    const std::string& field() const { return field_; }
    const std::string& reason() const { return reason_; }

  private:
    std::string field_;
    std::string reason_;
};

struct FireSpec {
    std::optional<CellCoord> cell;  // exactly one of cell / point is set
    std::optional<Point> point;
    double time = 0.0;

    friend bool operator==(const FireSpec&, const FireSpec&) = default;
};

struct PlannerConfig {
    PlannerMode mode = PlannerMode::Obstacles;
    int max_steps = 0;  // 0 means "use the default", filled by finalize_defaults

    friend bool operator==(const PlannerConfig&, const PlannerConfig&) = default;
};

struct ScenarioConfig {
    GridSpec grid;
    std::vector<CellCoord> obstacles;  // order preserved exactly as given
    FireSpec fire;
    CellCoord actor_start{0, 0};  // {0,0} means "use the default"
    PlannerConfig planner;
    double spread_speed = 0.0;  // 0 means "use the default" (one cell side / time)
    std::uint64_t seed = 0;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

inline int default_max_steps(const GridSpec& g) { return 4 * g.rows * g.cols; }

inline void finalize_defaults(ScenarioConfig& c) {
    if (c.actor_start == CellCoord{0, 0}) c.actor_start = center_cell(c.grid);
    if (c.planner.max_steps == 0) c.planner.max_steps = default_max_steps(c.grid);
    if (c.spread_speed == 0.0) c.spread_speed = c.grid.cell_side();
}

inline CellCoord fire_cell(const ScenarioConfig& c) {
    if (c.fire.cell) return *c.fire.cell;
    return cell_of_point(*c.fire.point, c.grid);
}

inline FireEvent fire_event(const ScenarioConfig& c) {
    if (c.fire.cell) return fire_at_cell(*c.fire.cell, c.grid, c.fire.time);
    return fire_at_point(*c.fire.point, c.grid, c.fire.time);
}

inline void validate(const ScenarioConfig& c) {
    try {
        validate_grid(c.grid);
    } catch (const std::invalid_argument& e) {
        throw ValidationError("grid", e.what());
    }

    ObstacleMap map(c.grid);
    for (std::size_t i = 0; i < c.obstacles.size(); ++i) {
        const CellCoord cell = c.obstacles[i];
        const std::string field = "obstacles[" + std::to_string(i) + "]";
        if (!c.grid.contains(cell))
            throw ValidationError(field, "cell " + to_string(cell) + " out of bounds");
        if (map.occupied(cell))
            throw ValidationError(field, "duplicate obstacle " + to_string(cell));
        map.add(cell);
    }

    if (!c.grid.contains(c.actor_start))
        throw ValidationError("actor_start",
                              "cell " + to_string(c.actor_start) + " out of bounds");
    if (map.occupied(c.actor_start))
        throw ValidationError("actor_start",
                              "cell " + to_string(c.actor_start) + " is an obstacle");

    if (c.fire.cell.has_value() == c.fire.point.has_value())
        throw ValidationError("fire", "exactly one of \"cell\" or \"point\" required");
    if (c.fire.time < 0.0)
        throw ValidationError("fire.time", "must be non-negative");
    if (c.fire.cell && !c.grid.contains(*c.fire.cell))
        throw ValidationError("fire.cell",
                              "cell " + to_string(*c.fire.cell) + " out of bounds");
    if (c.fire.point && !SensorField{c.grid}.contains(*c.fire.point))
        throw ValidationError("fire.point", "outside the grid area");
    if (map.occupied(fire_cell(c)))
        throw ValidationError("fire",
                              "fire cell " + to_string(fire_cell(c)) + " is an obstacle");

    if (c.planner.mode == PlannerMode::Free && !c.obstacles.empty())
        throw ValidationError("planner.mode", "\"free\" requires an empty obstacle list");
    if (c.planner.max_steps < 1)
        throw ValidationError("planner.max_steps", "must be positive");
    if (!(c.spread_speed > 0.0))
        throw ValidationError("spread_speed", "must be positive");
}

// --- JSON mapping -----------------------------------------------------------

namespace detail {

using json = nlohmann::json;

inline void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known)
            throw ValidationError(path, "unknown key \"" + it.key() + "\"");
    }
}

inline const json& require(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ValidationError(path, "missing required key \"" + std::string(key) + "\"");
    return *it;
}

inline int parse_int(const json& j, const std::string& path) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw ValidationError(path, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < INT_MIN || v > INT_MAX) throw ValidationError(path, "integer out of range");
    return static_cast<int>(v);
}

inline double parse_double(const json& j, const std::string& path) {
    if (!j.is_number()) throw ValidationError(path, "expected a number");
    return j.get<double>();
}

inline CellCoord parse_cell(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2)
        throw ValidationError(path, "expected a [row, col] pair");
    return {parse_int(j[0], path + "[0]"), parse_int(j[1], path + "[1]")};
}

inline json cell_json(CellCoord c) { return json::array({c.row, c.col}); }

inline const char* mode_name(PlannerMode m) {
    return m == PlannerMode::Free ? "free" : "obstacles";
}

}  // namespace detail

inline nlohmann::json scenario_to_json(const ScenarioConfig& c) {
    using detail::cell_json;
    nlohmann::json j;
    j["grid"] = {{"rows", c.grid.rows},
                 {"cols", c.grid.cols},
                 {"sensing_range", c.grid.sensing_range}};
    j["obstacles"] = nlohmann::json::array();
    for (CellCoord cell : c.obstacles) j["obstacles"].push_back(cell_json(cell));
    nlohmann::json fire;
    if (c.fire.cell) fire["cell"] = cell_json(*c.fire.cell);
    if (c.fire.point) fire["point"] = nlohmann::json::array({c.fire.point->x, c.fire.point->y});
    fire["time"] = c.fire.time;
    j["fire"] = fire;
    j["actor_start"] = cell_json(c.actor_start);
    j["planner"] = {{"mode", detail::mode_name(c.planner.mode)},
                    {"max_steps", c.planner.max_steps}};
    j["spread_speed"] = c.spread_speed;
    j["seed"] = c.seed;
    return j;
}

// Canonical scenario serialization; stable byte-for-byte for equal configs.
inline std::string emit_scenario(const ScenarioConfig& c) {
    return scenario_to_json(c).dump(2) + "\n";
}

inline ScenarioConfig scenario_from_json(const nlohmann::json& root) {
    using detail::check_keys;
    using detail::parse_cell;
    using detail::parse_double;
    using detail::parse_int;
    using detail::require;

    if (!root.is_object())
        throw ValidationError("scenario", "top level must be an object");
    check_keys(root, {"grid", "obstacles", "fire", "actor_start", "planner",
                      "spread_speed", "seed"},
               "scenario");

    ScenarioConfig c;

    const auto& grid = require(root, "grid", "scenario");
    if (!grid.is_object()) throw ValidationError("grid", "expected an object");
    check_keys(grid, {"rows", "cols", "sensing_range"}, "grid");
    c.grid.rows = parse_int(require(grid, "rows", "grid"), "grid.rows");
    c.grid.cols = parse_int(require(grid, "cols", "grid"), "grid.cols");
    c.grid.sensing_range =
        grid.contains("sensing_range") ? parse_double(grid["sensing_range"],
                                                      "grid.sensing_range")
                                       : 1.0;

    if (root.contains("obstacles")) {
        const auto& obs = root["obstacles"];
        if (!obs.is_array()) throw ValidationError("obstacles", "expected an array");
        for (std::size_t i = 0; i < obs.size(); ++i)
            c.obstacles.push_back(
                parse_cell(obs[i], "obstacles[" + std::to_string(i) + "]"));
    }

    const auto& fire = require(root, "fire", "scenario");
    if (!fire.is_object()) throw ValidationError("fire", "expected an object");
    check_keys(fire, {"cell", "point", "time"}, "fire");
    if (fire.contains("cell")) c.fire.cell = parse_cell(fire["cell"], "fire.cell");
    if (fire.contains("point")) {
        const auto& p = fire["point"];
        if (!p.is_array() || p.size() != 2)
            throw ValidationError("fire.point", "expected an [x, y] pair");
        c.fire.point = Point{parse_double(p[0], "fire.point[0]"),
                             parse_double(p[1], "fire.point[1]")};
    }
    if (fire.contains("time")) c.fire.time = parse_double(fire["time"], "fire.time");

    if (root.contains("actor_start"))
        c.actor_start = parse_cell(root["actor_start"], "actor_start");

    if (root.contains("planner")) {
        const auto& planner = root["planner"];
        if (!planner.is_object()) throw ValidationError("planner", "expected an object");
        check_keys(planner, {"mode", "max_steps"}, "planner");
        if (planner.contains("mode")) {
            const auto& m = planner["mode"];
            if (!m.is_string())
                throw ValidationError("planner.mode", "expected a string");
            const std::string name = m.get<std::string>();
            if (name == "free") c.planner.mode = PlannerMode::Free;
            else if (name == "obstacles") c.planner.mode = PlannerMode::Obstacles;
            else throw ValidationError("planner.mode",
                                       "\"" + name + "\" is not \"free\" or \"obstacles\"");
        }
        if (planner.contains("max_steps")) {
            c.planner.max_steps = parse_int(planner["max_steps"], "planner.max_steps");
            if (c.planner.max_steps < 1)
                throw ValidationError("planner.max_steps", "must be positive");
        }
    }

    if (root.contains("spread_speed")) {
        c.spread_speed = parse_double(root["spread_speed"], "spread_speed");
        if (!(c.spread_speed > 0.0))
            throw ValidationError("spread_speed", "must be positive");
    }

    if (root.contains("seed")) {
        const auto& s = root["seed"];
        if (!s.is_number_unsigned())
            throw ValidationError("seed", "expected a non-negative integer");
        c.seed = s.get<std::uint64_t>();
    }

    finalize_defaults(c);
    validate(c);
    return c;
}

// Strict parse of a scenario document; throws ValidationError with the
// offending field path on any problem.
inline ScenarioConfig parse_scenario(std::string_view text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("scenario", std::string("malformed JSON: ") + e.what());
    }
    return scenario_from_json(root);
}

// Seeded random scenario for fuzzing: fire cell uniform over the grid,
// ignition point uniform inside it, then n_obstacles cells drawn uniformly
// without replacement from everything except the actor cell and the fire
// cell. The same seed always yields the same scenario.
inline ScenarioConfig random_scenario(const GridSpec& grid, int n_obstacles,
                                      std::uint64_t seed) {
    validate_grid(grid);
    if (n_obstacles < 0) throw std::invalid_argument("obstacle count must be >= 0");
    if (n_obstacles > grid.cell_count() - 2)
        throw std::invalid_argument("obstacle count leaves no room for actor and fire");

    Rng rng(seed);
    ScenarioConfig c;
    c.grid = grid;
    c.seed = seed;
    c.actor_start = center_cell(grid);

    const CellCoord fire{rng.int_in(1, grid.rows), rng.int_in(1, grid.cols)};
    const double side = grid.cell_side();
    // Open-interval offsets keep the point strictly inside the drawn cell.
    c.fire.point = Point{(fire.row - 1 + rng.uniform_open01()) * side,
                         (fire.col - 1 + rng.uniform_open01()) * side};

    ObstacleMap taken(grid);
    int placed = 0;
    while (placed < n_obstacles) {
        const CellCoord cell{rng.int_in(1, grid.rows), rng.int_in(1, grid.cols)};
        if (cell == fire || cell == c.actor_start || taken.occupied(cell)) continue;
        taken.add(cell);
        c.obstacles.push_back(cell);
        ++placed;
    }

    finalize_defaults(c);
    validate(c);
    return c;
}

}  // namespace gridfire
