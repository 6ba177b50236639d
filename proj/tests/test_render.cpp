#include "doctest.h"

#include <sstream>
#include <string>

#include "gridfire/render.hpp"

using namespace gridfire;

namespace {

RunRecord diagonal_record() {
    return run_scenario(parse_scenario(R"({
        "grid": {"rows": 5, "cols": 5},
        "fire": {"cell": [1, 5]}
    })"));
}

RunRecord dodge_record() {
    return run_scenario(parse_scenario(R"({
        "grid": {"rows": 5, "cols": 5},
        "obstacles": [[3, 4]],
        "fire": {"cell": [3, 5]}
    })"));
}

}  // namespace

TEST_SUITE_BEGIN("render");

TEST_CASE("ascii render of a clean diagonal run") {
    const std::string expected =
        "5x5 outcome=reached path_length=2\n"
        "+-----+\n"
        "|....F|\n"
        "|...*.|\n"
        "|..A..|\n"
        "|.....|\n"
        "|.....|\n"
        "+-----+\n"
        "A actor  F fire  # obstacle  * path  o return  . sensor\n";
    CHECK(render_ascii(diagonal_record()) == expected);
}

TEST_CASE("ascii render shows obstacle, detour and return path") {
    const std::string expected =
        "5x5 outcome=reached path_length=2\n"
        "+-----+\n"
        "|.....|\n"
        "|...*.|\n"
        "|..A#F|\n"
        "|...o.|\n"
        "|.....|\n"
        "+-----+\n"
        "A actor  F fire  # obstacle  * path  o return  . sensor\n";
    CHECK(render_ascii(dodge_record()) == expected);
}

TEST_CASE("renders are pure functions of the record") {
    const RunRecord rec = dodge_record();
    CHECK(render_ascii(rec) == render_ascii(rec));
    CHECK(render_svg(rec) == render_svg(rec));
}

TEST_CASE("svg render carries the legend colors and shapes") {
    const RunRecord rec = dodge_record();
    const std::string svg = render_svg(rec);

    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("fill=\"yellow\"") != std::string::npos);   // obstacle
    CHECK(svg.find("fill=\"red\"") != std::string::npos);      // fire cell
    CHECK(svg.find("stroke=\"cyan\"") != std::string::npos);   // planned path
    CHECK(svg.find("fill=\"green\"") != std::string::npos);    // actor oval
    CHECK(svg.find("<ellipse") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // return trip
    // fire rect at (row 3, col 5) with the default 24px cells
    CHECK(svg.find("<rect x=\"96\" y=\"48\"") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("svg style overrides replace the default palette") {
    RenderStyle style;
    style.obstacle_color = "#112233";
    const std::string svg = render_svg(dodge_record(), style);
    CHECK(svg.find("fill=\"#112233\"") != std::string::npos);
    CHECK(svg.find("fill=\"yellow\"") == std::string::npos);
}

TEST_CASE("failed runs render without a return path") {
    const RunRecord rec = run_scenario(parse_scenario(R"({
        "grid": {"rows": 20, "cols": 20},
        "obstacles": [[8, 11], [8, 12], [8, 13], [9, 13], [10, 13], [11, 13],
                      [12, 13], [12, 12], [12, 11]],
        "fire": {"cell": [10, 16]}
    })"));
    const std::string ascii = render_ascii(rec);
    CHECK(ascii.find("outcome=livelock") != std::string::npos);
    // no return glyphs inside the grid body
    std::istringstream lines(ascii);
    for (std::string line; std::getline(lines, line);)
        if (!line.empty() && line.front() == '|')
            CHECK(line.find('o') == std::string::npos);
    const std::string svg = render_svg(rec);
    CHECK(svg.find("stroke-dasharray") == std::string::npos);
}

TEST_SUITE_END();
