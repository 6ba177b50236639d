#pragma once

// ASCII and SVG views of a finished run. Rendering is a pure function of
// the run record; it never re-runs the planner. Default colors follow
// the simulation legend: green actor, yellow obstacles, red fire, cyan
// path.

#include <sstream>
#include <string>

#include "gridfire/run.hpp"

namespace gridfire {

struct RenderStyle {
    std::string actor_color = "green";
    std::string obstacle_color = "yellow";
    std::string fire_color = "red";
    std::string path_color = "cyan";
    std::string sensor_color = "#bbbbbb";
    std::string grid_color = "#dddddd";

    char actor_glyph = 'A';
    char obstacle_glyph = '#';
    char fire_glyph = 'F';
    char path_glyph = '*';
    char return_glyph = 'o';
    char sensor_glyph = '.';

    int cell_px = 24;  // SVG cell size; ASCII always uses one character per cell
};

namespace detail {

// Per-cell glyph layers, first match wins: actor, fire, obstacle,
// outbound path, return path, sensor.
inline std::vector<char> glyph_grid(const RunRecord& rec, const RenderStyle& style) {
    const GridSpec& grid = rec.scenario.grid;
    const auto idx = [&](CellCoord c) {
        return static_cast<std::size_t>(c.row - 1) * grid.cols + (c.col - 1);
    };
    std::vector<char> cells(static_cast<std::size_t>(grid.cell_count()),
                            style.sensor_glyph);

    const auto put = [&](CellCoord c, char g) {
        char& slot = cells[idx(c)];
        if (slot == style.sensor_glyph) slot = g;
    };

    put(rec.scenario.actor_start, style.actor_glyph);
    put(fire_cell(rec.scenario), style.fire_glyph);
    for (CellCoord c : rec.scenario.obstacles) put(c, style.obstacle_glyph);
    for (const Move& m : rec.outbound.moves) put(m.to, style.path_glyph);
    if (rec.return_trip)
        for (const Move& m : rec.return_trip->moves) put(m.to, style.return_glyph);
    return cells;
}

}  // namespace detail

inline std::string render_ascii(const RunRecord& rec,
                                const RenderStyle& style = {}) {
    const GridSpec& grid = rec.scenario.grid;
    const auto cells = detail::glyph_grid(rec, style);

    std::ostringstream out;
    out << grid.rows << "x" << grid.cols
        << " outcome=" << to_string(rec.outbound.outcome)
        << " path_length=" << rec.metrics.path_length << "\n";
    const std::string border = "+" + std::string(grid.cols, '-') + "+";
    out << border << "\n";
    for (int r = 1; r <= grid.rows; ++r) {
        out << "|";
        for (int c = 1; c <= grid.cols; ++c)
            out << cells[static_cast<std::size_t>(r - 1) * grid.cols + (c - 1)];
        out << "|\n";
    }
    out << border << "\n";
    out << style.actor_glyph << " actor  " << style.fire_glyph << " fire  "
        << style.obstacle_glyph << " obstacle  " << style.path_glyph << " path  "
        << style.return_glyph << " return  " << style.sensor_glyph << " sensor\n";
    return out.str();
}

inline std::string render_svg(const RunRecord& rec, const RenderStyle& style = {}) {
    const GridSpec& grid = rec.scenario.grid;
    const int px = style.cell_px;
    const int w = grid.cols * px;
    const int h = grid.rows * px;

    const auto cx = [&](CellCoord c) { return (c.col - 1) * px + px / 2; };
    const auto cy = [&](CellCoord c) { return (c.row - 1) * px + px / 2; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";

    for (CellCoord c : rec.scenario.obstacles)
        out << "  <rect x=\"" << (c.col - 1) * px << "\" y=\"" << (c.row - 1) * px
            << "\" width=\"" << px << "\" height=\"" << px << "\" fill=\""
            << style.obstacle_color << "\"/>\n";

    const CellCoord fire = fire_cell(rec.scenario);
    out << "  <rect x=\"" << (fire.col - 1) * px << "\" y=\"" << (fire.row - 1) * px
        << "\" width=\"" << px << "\" height=\"" << px << "\" fill=\""
        << style.fire_color << "\"/>\n";

    for (int r = 0; r <= grid.rows; ++r)
        out << "  <line x1=\"0\" y1=\"" << r * px << "\" x2=\"" << w << "\" y2=\""
            << r * px << "\" stroke=\"" << style.grid_color << "\"/>\n";
    for (int c = 0; c <= grid.cols; ++c)
        out << "  <line x1=\"" << c * px << "\" y1=\"0\" x2=\"" << c * px
            << "\" y2=\"" << h << "\" stroke=\"" << style.grid_color << "\"/>\n";

    for (int r = 1; r <= grid.rows; ++r)
        for (int c = 1; c <= grid.cols; ++c)
            out << "  <circle cx=\"" << cx({r, c}) << "\" cy=\"" << cy({r, c})
                << "\" r=\"" << px / 12 << "\" fill=\"" << style.sensor_color
                << "\"/>\n";

    const auto polyline = [&](const PathTrace& trace, bool dashed) {
        if (trace.moves.empty()) return;
        out << "  <polyline fill=\"none\" stroke=\"" << style.path_color
            << "\" stroke-width=\"" << px / 6 << "\"";
        if (dashed) out << " stroke-dasharray=\"" << px / 4 << " " << px / 4 << "\"";
        out << " points=\"" << cx(trace.start) << "," << cy(trace.start);
        for (const Move& m : trace.moves) out << " " << cx(m.to) << "," << cy(m.to);
        out << "\"/>\n";
    };
    polyline(rec.outbound, false);
    if (rec.return_trip) polyline(*rec.return_trip, true);

    const CellCoord actor = rec.scenario.actor_start;
    out << "  <ellipse cx=\"" << cx(actor) << "\" cy=\"" << cy(actor) << "\" rx=\""
        << px * 3 / 8 << "\" ry=\"" << px / 4 << "\" fill=\"" << style.actor_color
        << "\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace gridfire
