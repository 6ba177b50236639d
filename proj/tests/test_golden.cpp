// Byte-level freezes of every externally visible format: scenario files,
// run records, SVG renders and CLI transcripts. A failure here means the
// serialized output changed; update the golden files only for a
// deliberate format change.

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gridfire/cli.hpp"
#include "gridfire/render.hpp"
#include "gridfire/run.hpp"

using namespace gridfire;

namespace {

const char* kDodge = R"({
        "grid": {"rows": 5, "cols": 5},
        "obstacles": [[3, 4]],
        "fire": {"cell": [3, 5]}
    })";

std::string golden(const std::string& name) {
    const std::string path = std::string(GRIDFIRE_REPO_DIR) + "/tests/golden/" + name;
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string cli_stdout(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    CHECK(code == exit_code::ok);
    CHECK(err.str().empty());
    return out.str();
}

}  // namespace

TEST_SUITE_BEGIN("golden");

TEST_CASE("run record bytes are frozen") {
    const RunRecord rec = run_scenario(parse_scenario(kDodge));
    CHECK(emit_run(rec) == golden("run_dodge.json"));
}

TEST_CASE("svg render bytes are frozen") {
    const RunRecord rec = run_scenario(parse_scenario(kDodge));
    CHECK(render_svg(rec) == golden("render_dodge.svg"));
}

TEST_CASE("canonical scenario bytes are frozen") {
    const ScenarioConfig c = parse_scenario(R"({
        "grid": {"rows": 20, "cols": 20, "sensing_range": 1.0},
        "obstacles": [[3, 5], [4, 15], [6, 10], [10, 4], [10, 15], [13, 8], [14, 14], [17, 5], [17, 17]],
        "fire": {"cell": [10, 18]}
    })");
    CHECK(emit_scenario(c) == golden("scenario_canonical.json"));
    // the golden itself parses back to the same config
    CHECK(parse_scenario(golden("scenario_canonical.json")) == c);
}

TEST_CASE("sweep transcript is frozen") {
    const auto path = std::filesystem::temp_directory_path() / "gridfire_golden_dodge.json";
    std::ofstream(path) << kDodge;
    CHECK(cli_stdout({"sweep", "--scenario", path.string()}) == golden("sweep_small.txt"));
}

TEST_CASE("coverage transcript is frozen") {
    CHECK(cli_stdout({"coverage", "--samples", "20000", "--seed", "3"}) ==
          golden("coverage.txt"));
}

TEST_CASE("fuzz transcript is frozen") {
    CHECK(cli_stdout({"fuzz", "--count", "25", "--seed", "7"}) == golden("fuzz.txt"));
}

TEST_SUITE_END();
