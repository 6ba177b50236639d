#include "doctest.h"

#include <string>

#include "gridfire/run.hpp"

using namespace gridfire;

namespace {

ScenarioConfig small_config() {
    return parse_scenario(R"({
        "grid": {"rows": 20, "cols": 20},
        "fire": {"cell": [3, 7]}
    })");
}

ScenarioConfig pocket_config() {
    return parse_scenario(R"({
        "grid": {"rows": 20, "cols": 20},
        "obstacles": [[8, 11], [8, 12], [8, 13], [9, 13], [10, 13], [11, 13],
                      [12, 13], [12, 12], [12, 11]],
        "fire": {"cell": [10, 16]}
    })");
}

}  // namespace

TEST_SUITE_BEGIN("run");

TEST_CASE("a plain run goes out and back with oracle-equal length") {
    const RunRecord rec = run_scenario(small_config());

    CHECK(rec.messages.size() == 4);
    REQUIRE(rec.inbox.accepted.has_value());
    CHECK(rec.inbox.accepted->relay_corner == CellCoord{1, 1});  // closest corner
    CHECK(rec.inbox.discarded_count == 3);

    CHECK(rec.outbound.outcome == Outcome::Reached);
    CHECK(rec.outbound.length() == 7);
    REQUIRE(rec.return_trip.has_value());
    CHECK(rec.return_trip->length() == 7);

    CHECK(rec.metrics.path_length == 7);
    CHECK(rec.metrics.oracle_reachable);
    CHECK(rec.metrics.oracle_length == 7);
    CHECK(rec.metrics.detour_excess == 0);
    CHECK(rec.metrics.outcome == Outcome::Reached);

    CHECK_NOTHROW(check_record(rec));
}

TEST_CASE("fire at the actor's cell produces an empty, reached record") {
    ScenarioConfig c = small_config();
    c.fire = FireSpec{CellCoord{10, 10}, std::nullopt, 0.0};
    validate(c);
    const RunRecord rec = run_scenario(c);
    CHECK(rec.metrics.path_length == 0);
    CHECK(rec.metrics.detour_excess == 0);
    CHECK(rec.outbound.moves.empty());
    REQUIRE(rec.return_trip.has_value());
    CHECK(rec.return_trip->moves.empty());
    CHECK_NOTHROW(check_record(rec));
}

TEST_CASE("livelocked run carries no return trip and no detour metric") {
    const RunRecord rec = run_scenario(pocket_config());
    CHECK(rec.outbound.outcome == Outcome::Livelock);
    CHECK_FALSE(rec.return_trip.has_value());
    CHECK(rec.metrics.outcome == Outcome::Livelock);
    CHECK(rec.metrics.oracle_reachable);
    CHECK(rec.metrics.oracle_length == 8);
    CHECK_FALSE(rec.metrics.detour_excess.has_value());
    CHECK_NOTHROW(check_record(rec));
}

TEST_CASE("identical scenarios emit byte-identical records") {
    const std::string a = emit_run(run_scenario(small_config()));
    const std::string b = emit_run(run_scenario(small_config()));
    CHECK(a == b);
    CHECK(!a.empty());
    CHECK(a.back() == '\n');
}

TEST_CASE("run record JSON exposes the documented sections") {
    const nlohmann::json j = run_to_json(run_scenario(small_config()));
    CHECK(j.contains("scenario"));
    CHECK(j.contains("messages"));
    CHECK(j.contains("inbox"));
    CHECK(j.contains("outbound"));
    CHECK(j.contains("return_trip"));
    CHECK(j.contains("metrics"));
    CHECK(j["messages"].size() == 4);
    CHECK(j["metrics"]["outcome"] == "reached");
    CHECK(j["outbound"]["moves"].size() == 7);
    // moves serialize as [code, row, col]
    CHECK(j["outbound"]["moves"][0].size() == 3);
}

TEST_CASE("check_record rejects tampered records") {
    SUBCASE("move direction changed") {
        RunRecord rec = run_scenario(small_config());
        rec.outbound.moves[2].dir = Direction::Down;
        CHECK_THROWS_AS(check_record(rec), ValidationError);
    }
    SUBCASE("trace truncated but still claiming reached") {
        RunRecord rec = run_scenario(small_config());
        rec.outbound.moves.pop_back();
        CHECK_THROWS_AS(check_record(rec), ValidationError);
    }
    SUBCASE("metrics out of sync") {
        RunRecord rec = run_scenario(small_config());
        rec.metrics.path_length = 99;
        CHECK_THROWS_AS(check_record(rec), ValidationError);
    }
    SUBCASE("return trip dropped") {
        RunRecord rec = run_scenario(small_config());
        rec.return_trip.reset();
        CHECK_THROWS_AS(check_record(rec), ValidationError);
    }
    SUBCASE("an obstacle moved under the trace") {
        RunRecord rec = run_scenario(small_config());
        rec.scenario.obstacles.push_back(rec.outbound.moves[1].to);
        CHECK_THROWS_AS(check_record(rec), ValidationError);
    }
    SUBCASE("messages edited") {
        RunRecord rec = run_scenario(small_config());
        rec.messages[1].arrival_time += 0.25;
        CHECK_THROWS_AS(check_record(rec), ValidationError);
    }
}

TEST_SUITE_END();
