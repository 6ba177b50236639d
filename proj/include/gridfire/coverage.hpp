#pragma once

// Deployment geometry and coverage analytics. One sensor sits at the
// center of every cell with a sensing disc inscribed in the cell
// (radius r, cell side 2r), so coverage questions reduce to a single
// cell by symmetry.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gridfire/grid.hpp"
#include "gridfire/rng.hpp"

namespace gridfire {

// Continuous position in length units: x measures down from the grid's
// top edge, y measures right from its left edge, matching matrix order.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(Point, Point) = default;
};

inline double euclidean(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct SensorField {
    GridSpec grid;

    // Geometric center of a cell; where its sensor sits.
    Point sensor_center(CellCoord c) const {
        const double side = grid.cell_side();
        return {(c.row - 0.5) * side, (c.col - 0.5) * side};
    }

    double width() const { return grid.cols * grid.cell_side(); }
    double height() const { return grid.rows * grid.cell_side(); }

    bool contains(Point p) const {
        return p.x >= 0.0 && p.x <= height() && p.y >= 0.0 && p.y <= width();
    }
};

namespace detail {

// Cell index along one axis for continuous coordinate v. Points exactly
// on a shared edge resolve to the lower index, so a (row, col) pair built
// from the two axes is the lexicographically smallest candidate.
inline int axis_cell(double v, double side, int n_cells) {
    const double q = v / side;
    const int k = static_cast<int>(std::floor(q));
    if (static_cast<double>(k) == q) {
        if (k <= 0) return 1;
        return k > n_cells ? n_cells : k;
    }
    return k + 1;
}

}  // namespace detail

// Cell whose square contains the point.
inline CellCoord cell_of_point(Point p, const GridSpec& grid) {
    const double side = grid.cell_side();
    return {detail::axis_cell(p.x, side, grid.rows),
            detail::axis_cell(p.y, side, grid.cols)};
}

// A single static ignition: the fire appears at one point and stays there
// for the duration of a run.
struct FireEvent {
    Point ignition_point;
    CellCoord cell;   // the cell whose square contains ignition_point
    double time = 0.0;

    friend constexpr bool operator==(const FireEvent&, const FireEvent&) = default;
};

inline FireEvent fire_at_point(Point p, const GridSpec& grid, double time = 0.0) {
    SensorField field{grid};
    if (!field.contains(p))
        throw std::invalid_argument("ignition point outside the grid area");
    if (time < 0.0) throw std::invalid_argument("fire time must be non-negative");
    return {p, cell_of_point(p, grid), time};
}

inline FireEvent fire_at_cell(CellCoord c, const GridSpec& grid, double time = 0.0) {
    if (!grid.contains(c))
        throw std::invalid_argument("fire cell " + to_string(c) + " outside grid");
    if (time < 0.0) throw std::invalid_argument("fire time must be non-negative");
    return {SensorField{grid}.sensor_center(c), c, time};
}

// Area of one 2r x 2r cell not covered by its inscribed sensing disc:
// (4 - pi) r^2, about 0.86 r^2.
inline double uncovered_area_per_cell(double r) {
    if (!(r > 0.0)) throw std::invalid_argument("sensing range must be positive");
    return (4.0 - std::numbers::pi) * r * r;
}

// Covered fraction of the whole field. Per-cell by symmetry: disc area
// over cell area, pi/4 regardless of grid size or sensing range.
inline double coverage_fraction(const SensorField& field) {
    const double r = field.grid.sensing_range;
    const double disc = std::numbers::pi * r * r;
    const double cell = field.grid.cell_side() * field.grid.cell_side();
    return disc / cell;
}

struct Detection {
    CellCoord sensor;  // the detecting sensor's cell
    double delay;      // time from ignition to threshold crossing
};

// The sensor of the containing cell always detects first: the fire front
// grows at uniform speed, and for every interior point the nearest sensor
// center is the cell's own. Delay is distance over spread speed.
inline Detection first_detector(const FireEvent& fire, const SensorField& field,
                                double spread_speed) {
    if (!(spread_speed > 0.0))
        throw std::invalid_argument("spread speed must be positive");
    const double dist = euclidean(fire.ignition_point, field.sensor_center(fire.cell));
    return {fire.cell, dist / spread_speed};
}

// Monte-Carlo estimate of the per-cell uncovered area: uniform samples
// over one cell, counting points outside the inscribed disc. Provides the
// sampling cross-check reported by the coverage command.
struct CoverageSample {
    long long samples = 0;
    long long outside_disc = 0;
    double uncovered_area = 0.0;
    double uncovered_std_error = 0.0;
    double covered_fraction = 0.0;
    double covered_fraction_std_error = 0.0;
};

inline CoverageSample sample_cell_coverage(double r, long long samples,
                                           std::uint64_t seed) {
    if (!(r > 0.0)) throw std::invalid_argument("sensing range must be positive");
    if (samples < 1) throw std::invalid_argument("need at least one sample");

    Rng rng(seed);
    const double side = 2.0 * r;
    long long outside = 0;
    for (long long i = 0; i < samples; ++i) {
        const double u = rng.uniform01() * side - r;  // offsets from the center
        const double v = rng.uniform01() * side - r;
        if (u * u + v * v > r * r) ++outside;
    }

    const double n = static_cast<double>(samples);
    const double p_out = static_cast<double>(outside) / n;
    const double se_p = std::sqrt(p_out * (1.0 - p_out) / n);
    const double cell_area = side * side;

    CoverageSample out;
    out.samples = samples;
    out.outside_disc = outside;
    out.uncovered_area = p_out * cell_area;
    out.uncovered_std_error = se_p * cell_area;
    out.covered_fraction = 1.0 - p_out;
    out.covered_fraction_std_error = se_p;
    return out;
}

}  // namespace gridfire
