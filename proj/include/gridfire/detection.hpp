#pragma once

// The detection message pipeline: the detecting sensor broadcasts the
// fire cell, the four corner relay nodes forward it to the actor, and
// the actor keeps the first report and discards the duplicates.
//
// Transport is modeled as a deterministic event list. Delivery is
// lossless; latency is one time unit per Chebyshev hop from the origin
// sensor to the relay corner.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gridfire/coverage.hpp"
#include "gridfire/grid.hpp"

namespace gridfire {

struct DetectionMessage {
    CellCoord fire_cell;      // payload: where the fire is
    CellCoord origin_sensor;  // the sensor that raised the alarm
    CellCoord relay_corner;   // which corner node forwarded it
    double arrival_time = 0.0;

    friend constexpr bool operator==(const DetectionMessage&,
                                     const DetectionMessage&) = default;
};

// The four high-capacity relay nodes, in fixed row-major corner order.
inline std::array<CellCoord, 4> corner_nodes(const GridSpec& grid) {
    return {CellCoord{1, 1}, CellCoord{1, grid.cols},
            CellCoord{grid.rows, 1}, CellCoord{grid.rows, grid.cols}};
}

// One message per corner node, all carrying the same fire cell.
// arrival_time = ignition time + detection delay + relay latency.
inline std::vector<DetectionMessage> broadcast(const FireEvent& fire,
                                               const SensorField& field,
                                               double spread_speed) {
    const Detection det = first_detector(fire, field, spread_speed);
    std::vector<DetectionMessage> out;
    out.reserve(4);
    for (CellCoord corner : corner_nodes(field.grid)) {
        const double latency = static_cast<double>(chebyshev(det.sensor, corner));
        out.push_back({fire.cell, det.sensor, corner, fire.time + det.delay + latency});
    }
    return out;
}

// Raised when two reports disagree about where the fire is; there is a
// single fire per run, so disagreeing payloads mean the scenario is bad.
struct ConflictingReportsError : std::runtime_error {
    ConflictingReportsError(CellCoord a, CellCoord b)
        : std::runtime_error("conflicting fire reports: " + to_string(a) +
                             " vs " + to_string(b)) {}
};

struct ActorInbox {
    std::optional<DetectionMessage> accepted;
    int discarded_count = 0;
};

// First report wins; everything after it is discarded. Ties on arrival
// time break toward the lexicographically smallest corner coordinate, so
// the result does not depend on input order.
inline ActorInbox dedupe_first(std::span<const DetectionMessage> messages) {
    ActorInbox inbox;
    if (messages.empty()) return inbox;

    const DetectionMessage* best = &messages.front();
    for (const DetectionMessage& m : messages.subspan(1)) {
        if (m.fire_cell != best->fire_cell)
            throw ConflictingReportsError(best->fire_cell, m.fire_cell);
        if (m.arrival_time < best->arrival_time ||
            (m.arrival_time == best->arrival_time &&
             m.relay_corner < best->relay_corner)) {
            best = &m;
        }
    }
    inbox.accepted = *best;
    inbox.discarded_count = static_cast<int>(messages.size()) - 1;
    return inbox;
}

inline ActorInbox dedupe_first(const std::vector<DetectionMessage>& messages) {
    return dedupe_first(std::span<const DetectionMessage>(messages));
}

}  // namespace gridfire
