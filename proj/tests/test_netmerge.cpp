#include <stdexcept>
#include <vector>

#include "dgl/events.hpp"
#include "dgl/netmerge.hpp"
#include "doctest.h"

using namespace dgl;

namespace {

constexpr Timestamp kDay = kSecondsPerDay;

// Small tagged log: A users 1-3 and B users 11-13 exist pre-merge (day 0-4),
// the merge is day 5, user 100 joins after.
EventLog tagged_log() {
    std::vector<Event> events;
    std::int16_t net_a = 0, net_b = 1;
    for (NodeId u = 1; u <= 3; u++) events.push_back({0, EventKind::NodeCreate, u, -1, net_a});
    for (NodeId u = 11; u <= 13; u++) events.push_back({0, EventKind::NodeCreate, u, -1, net_b});
    // pre-merge internal traffic
    events.push_back({1 * kDay, EventKind::EdgeCreate, 1, 2, net_a});
    events.push_back({2 * kDay, EventKind::EdgeCreate, 11, 12, net_b});
    // post-merge, day 5: one of each class
    events.push_back({5 * kDay + 10, EventKind::EdgeCreate, 2, 3, -1});    // internal A
    events.push_back({5 * kDay + 20, EventKind::EdgeCreate, 12, 13, -1});  // internal B
    events.push_back({5 * kDay + 30, EventKind::EdgeCreate, 1, 11, -1});   // external
    events.push_back({5 * kDay + 40, EventKind::NodeCreate, 100, -1, -1});
    events.push_back({5 * kDay + 50, EventKind::EdgeCreate, 100, 1, -1});  // to-new
    // day 7: external only
    events.push_back({7 * kDay, EventKind::EdgeCreate, 2, 12, -1});
    return finalize_log(std::move(events), IngestMode::Lenient, {"A", "B"});
}

}  // namespace

TEST_CASE("scenario_from_tags assigns origins and leaves late joiners New") {
    auto log = tagged_log();
    auto scenario = scenario_from_tags(log, 5, "A", "B", 2);
    CHECK(scenario.origin_of(1) == Origin::A);
    CHECK(scenario.origin_of(13) == Origin::B);
    CHECK(scenario.origin_of(100) == Origin::New);
    CHECK(scenario.merge_day == 5);
}

TEST_CASE("classify_edge covers the class matrix with ToNew precedence") {
    auto log = tagged_log();
    auto scenario = scenario_from_tags(log, 5, "A", "B", 2);
    CHECK(classify_edge(scenario, 1, 2) == EdgeClass::InternalA);
    CHECK(classify_edge(scenario, 11, 13) == EdgeClass::InternalB);
    CHECK(classify_edge(scenario, 1, 11) == EdgeClass::External);
    CHECK(classify_edge(scenario, 100, 1) == EdgeClass::ToNew);
    CHECK(classify_edge(scenario, 100, 11) == EdgeClass::ToNew);  // New beats B
}

TEST_CASE("classify_edges counts post-merge days only") {
    auto log = tagged_log();
    auto scenario = scenario_from_tags(log, 5, "A", "B", 2);
    auto daily = classify_edges(log, scenario);
    // dense day axis 0..2 (the log ends on merge day + 2)
    REQUIRE(daily.days.size() == 3);
    CHECK(daily.days[0] == 0);
    CHECK(daily.counts[0][static_cast<int>(EdgeClass::InternalA)] == 1);
    CHECK(daily.counts[0][static_cast<int>(EdgeClass::InternalB)] == 1);
    CHECK(daily.counts[0][static_cast<int>(EdgeClass::External)] == 1);
    CHECK(daily.counts[0][static_cast<int>(EdgeClass::ToNew)] == 1);
    CHECK(daily.counts[1] == std::array<std::int64_t, 4>{0, 0, 0, 0});
    CHECK(daily.days[2] == 2);
    CHECK(daily.counts[2][static_cast<int>(EdgeClass::External)] == 1);
    CHECK(daily.counts[2][static_cast<int>(EdgeClass::InternalA)] == 0);
}

TEST_CASE("forward-looking activity window") {
    // tagged_log plus one more external edge at day 8 so two windows fit
    std::vector<Event> events;
    std::int16_t net_a = 0, net_b = 1;
    for (NodeId u = 1; u <= 3; u++) events.push_back({0, EventKind::NodeCreate, u, -1, net_a});
    for (NodeId u = 11; u <= 13; u++) events.push_back({0, EventKind::NodeCreate, u, -1, net_b});
    events.push_back({5 * kDay + 10, EventKind::EdgeCreate, 2, 3, -1});
    events.push_back({5 * kDay + 20, EventKind::EdgeCreate, 12, 13, -1});
    events.push_back({5 * kDay + 30, EventKind::EdgeCreate, 1, 11, -1});
    events.push_back({7 * kDay, EventKind::EdgeCreate, 2, 12, -1});
    events.push_back({8 * kDay, EventKind::EdgeCreate, 3, 13, -1});
    auto log = finalize_log(std::move(events), IngestMode::Lenient, {"A", "B"});
    auto scenario = scenario_from_tags(log, 5, "A", "B", 2);
    auto act = activity_series(log, scenario);
    // data runs to day 8 with threshold 2: emitted days are 0 and 1, the rest
    // lack a full forward window
    REQUIRE(act.days.size() == 2);
    CHECK(act.days.front() == 0);
    // day 0 window [0,2): every pre-merge user shows up on merge day
    CHECK(act.active_a.front() == 3);
    CHECK(act.active_b.front() == 3);
    // day 1 window [1,3): only the day-2 edge (users 2 and 12) lands inside
    CHECK(act.active_a[1] == 1);
    CHECK(act.active_b[1] == 1);
}

TEST_CASE("duplicate estimate counts day-0 silent users") {
    std::vector<Event> events;
    std::int16_t net_a = 0, net_b = 1;
    for (NodeId u = 1; u <= 4; u++) events.push_back({0, EventKind::NodeCreate, u, -1, net_a});
    for (NodeId u = 11; u <= 14; u++) events.push_back({0, EventKind::NodeCreate, u, -1, net_b});
    events.push_back({1 * kDay, EventKind::EdgeCreate, 1, 2, net_a});
    events.push_back({1 * kDay, EventKind::EdgeCreate, 11, 12, net_b});
    // post merge (day 2): users 1,2,3 of A active; only 11 of B (repeated
    // pairs would be dropped as duplicates, so every edge is a fresh pair)
    events.push_back({2 * kDay + 1, EventKind::EdgeCreate, 2, 3, -1});
    events.push_back({2 * kDay + 2, EventKind::EdgeCreate, 1, 3, -1});
    events.push_back({2 * kDay + 3, EventKind::EdgeCreate, 11, 3, -1});
    // stretch the data span past the threshold window; day 38 lies outside
    // every emitted activity window, so 13 and 14 stay inactive
    events.push_back({40 * kDay, EventKind::EdgeCreate, 13, 14, -1});
    auto log = finalize_log(std::move(events), IngestMode::Lenient, {"A", "B"});
    auto scenario = scenario_from_tags(log, 2, "A", "B", 10);
    auto dup = duplicate_estimate(log, scenario);
    // day-0 window: A active = 1,2,3 (silent: 4); B active = 11 only (the
    // pre-merge edge of 12 does not count)
    CHECK(dup.inactive_fraction_a == doctest::Approx(1.0 / 4.0));
    CHECK(dup.inactive_fraction_b == doctest::Approx(3.0 / 4.0));
    CHECK(dup.combined_lower_bound == doctest::Approx(4.0 / 8.0));
}

TEST_CASE("edge ratio series flags zero-denominator gaps") {
    auto log = tagged_log();
    auto scenario = scenario_from_tags(log, 5, "A", "B", 2);
    auto ratios = edge_ratio_series(log, scenario);
    REQUIRE(ratios.internal_to_external.size() == 3);
    CHECK(ratios.internal_to_external[0].value == doctest::Approx(2.0));
    CHECK_FALSE(ratios.internal_to_external[0].gap);
    CHECK(ratios.new_to_external[0].value == doctest::Approx(1.0));
    CHECK(ratios.internal_to_external[1].gap);  // empty day
    // day 2 has external traffic only
    CHECK(ratios.internal_to_external[2].value == doctest::Approx(0.0));
    CHECK(ratios.new_to_external[2].value == doctest::Approx(0.0));
}

TEST_CASE("gap flag fires when external count is zero") {
    std::vector<Event> events;
    std::int16_t net_a = 0, net_b = 1;
    events.push_back({0, EventKind::NodeCreate, 1, -1, net_a});
    events.push_back({0, EventKind::NodeCreate, 2, -1, net_a});
    events.push_back({0, EventKind::NodeCreate, 11, -1, net_b});
    events.push_back({2 * kDay, EventKind::EdgeCreate, 1, 2, -1});  // internal A, post merge
    auto log = finalize_log(std::move(events), IngestMode::Lenient, {"A", "B"});
    auto scenario = scenario_from_tags(log, 1, "A", "B", 1);
    auto ratios = edge_ratio_series(log, scenario);
    // merge day 1, data ends day 2: two post-merge days, neither with
    // external traffic
    REQUIRE(ratios.internal_to_external.size() == 2);
    CHECK(ratios.internal_to_external[0].gap);
    CHECK(ratios.internal_to_external[1].gap);
}

TEST_CASE("cross-network distance matches a hand-built path") {
    // chain: a1 - a2 - b1 - b2 plus a far A node connected to b2 directly
    std::vector<Event> events;
    std::int16_t net_a = 0, net_b = 1;
    for (NodeId u : {1, 2, 3}) events.push_back({0, EventKind::NodeCreate, u, -1, net_a});
    for (NodeId u : {11, 12}) events.push_back({0, EventKind::NodeCreate, u, -1, net_b});
    events.push_back({1 * kDay, EventKind::EdgeCreate, 1, 2, -1});
    events.push_back({1 * kDay, EventKind::EdgeCreate, 11, 12, -1});
    // merge at day 2; day 2 cross edges
    events.push_back({2 * kDay + 1, EventKind::EdgeCreate, 2, 11, -1});
    events.push_back({2 * kDay + 2, EventKind::EdgeCreate, 3, 12, -1});
    auto log = finalize_log(std::move(events), IngestMode::Lenient, {"A", "B"});
    auto scenario = scenario_from_tags(log, 2, "A", "B", 1);
    auto dist = cross_network_distance(log, scenario, 0, 100, 9);
    REQUIRE(dist.defined_a);
    REQUIRE(dist.defined_b);
    // distances to the nearest B node: node 1 -> 2, node 2 -> 1, node 3 -> 1
    CHECK(dist.mean_a_to_b == doctest::Approx(4.0 / 3.0));
    // B nodes: 11 -> 1, 12 -> 1
    CHECK(dist.mean_b_to_a == doctest::Approx(1.0));
    CHECK(dist.unreachable_a == 0);
    CHECK(dist.unreachable_b == 0);
}

TEST_CASE("distance is undefined before any cross edge exists") {
    std::vector<Event> events;
    std::int16_t net_a = 0, net_b = 1;
    events.push_back({0, EventKind::NodeCreate, 1, -1, net_a});
    events.push_back({0, EventKind::NodeCreate, 11, -1, net_b});
    events.push_back({3 * kDay, EventKind::EdgeCreate, 1, 11, -1});  // later
    auto log = finalize_log(std::move(events), IngestMode::Lenient, {"A", "B"});
    auto scenario = scenario_from_tags(log, 1, "A", "B", 1);
    auto dist = cross_network_distance(log, scenario, 0, 10, 1);
    // at day 0 the snapshot holds no cross edge: everyone unreachable
    CHECK(dist.unreachable_a == 1);
    CHECK(dist.unreachable_b == 1);
}

TEST_CASE("scenario_from_id_split splits on the id threshold") {
    std::vector<Event> events;
    events.push_back({0, EventKind::NodeCreate, 5, -1, -1});
    events.push_back({0, EventKind::NodeCreate, 500, -1, -1});
    events.push_back({2 * kDay, EventKind::EdgeCreate, 5, 500, -1});
    events.push_back({2 * kDay, EventKind::NodeCreate, 7, -1, -1});  // joins post merge
    events.push_back({2 * kDay, EventKind::EdgeCreate, 7, 5, -1});
    auto log = finalize_log(std::move(events), IngestMode::Lenient, {});
    auto scenario = scenario_from_id_split(log, 1, 100, 1);
    CHECK(scenario.origin_of(5) == Origin::A);
    CHECK(scenario.origin_of(500) == Origin::B);
    CHECK(scenario.origin_of(7) == Origin::New);
}
