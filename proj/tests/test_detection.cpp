#include "doctest.h"

#include <algorithm>
#include <vector>

#include "gridfire/detection.hpp"
#include "gridfire/rng.hpp"

using namespace gridfire;

TEST_SUITE_BEGIN("detection");

TEST_CASE("corner nodes sit at the four grid corners") {
    const auto corners = corner_nodes(GridSpec{20, 20, 1.0});
    CHECK(corners == std::array<CellCoord, 4>{CellCoord{1, 1}, CellCoord{1, 20},
                                              CellCoord{20, 1}, CellCoord{20, 20}});
}

TEST_CASE("broadcast produces one message per corner, all with the fire cell") {
    const GridSpec g{20, 20, 1.0};
    const SensorField field{g};
    const FireEvent fire = fire_at_cell({3, 7}, g);

    const auto msgs = broadcast(fire, field, g.cell_side());
    REQUIRE(msgs.size() == 4);
    for (const auto& m : msgs) {
        CHECK(m.fire_cell == CellCoord{3, 7});
        CHECK(m.origin_sensor == CellCoord{3, 7});
    }
    // relay latency: one time unit per Chebyshev hop to each corner
    CHECK(msgs[0].arrival_time == doctest::Approx(6.0));   // (1,1)
    CHECK(msgs[1].arrival_time == doctest::Approx(13.0));  // (1,20)
    CHECK(msgs[2].arrival_time == doctest::Approx(17.0));  // (20,1)
    CHECK(msgs[3].arrival_time == doctest::Approx(17.0));  // (20,20)
}

TEST_CASE("broadcast offsets arrival times by ignition time and detection delay") {
    const GridSpec g{20, 20, 1.0};
    const SensorField field{g};
    const FireEvent fire = fire_at_point({4.3, 12.2}, g, 2.0);
    const double delay = first_detector(fire, field, 2.0).delay;

    const auto msgs = broadcast(fire, field, 2.0);
    CHECK(msgs[0].arrival_time ==
          doctest::Approx(2.0 + delay + chebyshev({3, 7}, {1, 1})));
}

TEST_CASE("fire at the actor's own cell is relayed like any other") {
    const GridSpec g{20, 20, 1.0};
    const auto msgs = broadcast(fire_at_cell(center_cell(g), g), SensorField{g},
                                g.cell_side());
    REQUIRE(msgs.size() == 4);
    for (const auto& m : msgs) CHECK(m.fire_cell == CellCoord{10, 10});
    // distinct latencies, same payload
    CHECK(msgs[0].arrival_time == doctest::Approx(9.0));
    CHECK(msgs[1].arrival_time == doctest::Approx(10.0));
}

TEST_CASE("dedupe keeps the earliest message and discards the rest") {
    const CellCoord fire{3, 7};
    const std::vector<DetectionMessage> msgs = {
        {fire, fire, {1, 1}, 5.0},
        {fire, fire, {1, 20}, 3.0},
        {fire, fire, {20, 1}, 6.0},
        {fire, fire, {20, 20}, 9.0},
    };
    const ActorInbox inbox = dedupe_first(msgs);
    REQUIRE(inbox.accepted.has_value());
    CHECK(inbox.accepted->arrival_time == 3.0);
    CHECK(inbox.accepted->relay_corner == CellCoord{1, 20});
    CHECK(inbox.discarded_count == 3);
}

TEST_CASE("dedupe of a single message accepts it with nothing discarded") {
    const std::vector<DetectionMessage> one = {{{3, 7}, {3, 7}, {1, 1}, 4.0}};
    const ActorInbox inbox = dedupe_first(one);
    REQUIRE(inbox.accepted.has_value());
    CHECK(inbox.discarded_count == 0);
}

TEST_CASE("dedupe of an empty list accepts nothing") {
    const ActorInbox inbox = dedupe_first(std::vector<DetectionMessage>{});
    CHECK_FALSE(inbox.accepted.has_value());
    CHECK(inbox.discarded_count == 0);
}

TEST_CASE("conflicting fire payloads are rejected") {
    const std::vector<DetectionMessage> msgs = {
        {{3, 7}, {3, 7}, {1, 1}, 1.0},
        {{4, 7}, {4, 7}, {1, 20}, 2.0},
    };
    CHECK_THROWS_AS(dedupe_first(msgs), ConflictingReportsError);
}

TEST_CASE("arrival ties break toward the smallest corner coordinate") {
    const CellCoord fire{10, 10};
    const std::vector<DetectionMessage> msgs = {
        {fire, fire, {20, 20}, 2.0},
        {fire, fire, {1, 20}, 2.0},
        {fire, fire, {20, 1}, 2.0},
        {fire, fire, {1, 1}, 5.0},
    };
    const ActorInbox inbox = dedupe_first(msgs);
    CHECK(inbox.accepted->relay_corner == CellCoord{1, 20});
}

TEST_CASE("dedupe is permutation-invariant") {
    std::vector<DetectionMessage> msgs = {
        {{5, 9}, {5, 9}, {1, 1}, 8.0},
        {{5, 9}, {5, 9}, {1, 20}, 4.5},
        {{5, 9}, {5, 9}, {20, 1}, 4.5},
        {{5, 9}, {5, 9}, {20, 20}, 12.0},
    };
    std::sort(msgs.begin(), msgs.end(),
              [](const auto& a, const auto& b) { return a.relay_corner < b.relay_corner; });
    const ActorInbox reference = dedupe_first(msgs);
    do {
        const ActorInbox inbox = dedupe_first(msgs);
        CHECK(inbox.accepted == reference.accepted);
        CHECK(inbox.discarded_count == 3);
    } while (std::next_permutation(msgs.begin(), msgs.end(),
                                   [](const auto& a, const auto& b) {
                                       return a.relay_corner < b.relay_corner;
                                   }));
}

TEST_CASE("pipeline preserves the ignition cell end to end") {
    const GridSpec g{20, 20, 1.0};
    const SensorField field{g};
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        const Point p{rng.uniform_open01() * field.height(),
                      rng.uniform_open01() * field.width()};
        const FireEvent fire = fire_at_point(p, g);
        const ActorInbox inbox = dedupe_first(broadcast(fire, field, g.cell_side()));
        REQUIRE(inbox.accepted.has_value());
        CHECK(inbox.accepted->fire_cell == fire.cell);
        CHECK(inbox.discarded_count == 3);
    }
}

TEST_SUITE_END();
