#include <stdexcept>
#include <algorithm>
#include <set>
#include <vector>

#include "dgl/events.hpp"
#include "dgl/snapshot.hpp"
#include "dgl/tracker.hpp"
#include "doctest.h"

using namespace dgl;

namespace {

Snapshot graph_of(const std::vector<std::pair<NodeId, NodeId>>& edges) {
    std::vector<Event> events;
    Timestamp t = 0;
    for (auto [u, v] : edges) events.push_back({++t, EventKind::EdgeCreate, u, v, -1});
    auto log = finalize_log(std::move(events), IngestMode::Lenient, {});
    return snapshot_at(log, t + 1);
}

void clique(std::vector<std::pair<NodeId, NodeId>>& edges, NodeId lo, NodeId hi) {
    for (NodeId u = lo; u < hi; u++)
        for (NodeId v = u + 1; v < hi; v++) edges.push_back({u, v});
}

void cross(std::vector<std::pair<NodeId, NodeId>>& edges, NodeId lo_a, NodeId hi_a, NodeId lo_b,
           NodeId hi_b, int step = 1) {
    int i = 0;
    for (NodeId u = lo_a; u < hi_a; u++)
        for (NodeId v = lo_b; v < hi_b; v++)
            if (i++ % step == 0) edges.push_back({u, v});
}

// two far-apart 12-cliques joined by one bridge
Snapshot stable_two(int bridge_edges = 1) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    clique(edges, 0, 12);
    clique(edges, 100, 112);
    for (int b = 0; b < bridge_edges; b++) edges.push_back({b, 100 + b});
    return graph_of(edges);
}

const CommunityTimeline* lineage_containing(const TrackerResult& tr, NodeId node,
                                            std::size_t snapshot) {
    for (const auto& tl : tr.timelines) {
        if (!tl.alive_at(snapshot)) continue;
        const auto& m = tl.members_at(snapshot);
        if (std::find(m.begin(), m.end(), node) != m.end()) return &tl;
    }
    return nullptr;
}

bool has_event(const CommunityTimeline& tl, CommunityEventKind kind) {
    for (const auto& e : tl.events)
        if (e.kind == kind) return true;
    return false;
}

}  // namespace

TEST_CASE("stable communities continue as single lineages") {
    std::vector<Snapshot> snaps{stable_two(), stable_two(), stable_two()};
    TrackerOptions opts;
    opts.seed = 5;
    auto tr = track(snaps, opts);
    REQUIRE(tr.partitions.size() == 3);
    // two reported lineages, both born at 0 and alive to the end
    std::size_t full_span = 0;
    for (const auto& tl : tr.timelines) {
        if (tl.birth_snapshot == 0 && tl.last_snapshot() == 2) full_span++;
        CHECK_FALSE(has_event(tl, CommunityEventKind::Merge));
        CHECK_FALSE(has_event(tl, CommunityEventKind::Split));
    }
    CHECK(full_span == 2);
    // end-of-data deaths are labeled as such, not as real deaths
    for (const auto& tl : tr.timelines)
        if (tl.last_snapshot() == 2) CHECK(has_event(tl, CommunityEventKind::DeathEndOfData));
}

TEST_CASE("a merge closes one lineage with a Merge event into the survivor") {
    std::vector<std::pair<NodeId, NodeId>> merged;
    clique(merged, 0, 12);
    clique(merged, 100, 112);
    cross(merged, 0, 12, 100, 112, 1);  // full bipartite join
    std::vector<Snapshot> snaps{stable_two(), stable_two(), graph_of(merged)};
    TrackerOptions opts;
    opts.seed = 9;
    auto tr = track(snaps, opts);

    // at snapshot 2 every node sits in one community
    auto* joint = lineage_containing(tr, 0, 2);
    REQUIRE(joint != nullptr);
    CHECK(joint == lineage_containing(tr, 100, 2));
    CHECK(joint->members_at(2).size() == 24);

    // exactly one of the two original lineages died at the merge and points
    // at the surviving lineage
    int merge_deaths = 0;
    for (const auto& tl : tr.timelines) {
        if (!has_event(tl, CommunityEventKind::Merge)) continue;
        merge_deaths++;
        CHECK(tl.death_snapshot.has_value());
        CHECK(*tl.death_snapshot == 2);
        for (const auto& e : tl.events)
            if (e.kind == CommunityEventKind::Merge) CHECK(e.other_lineage == joint->lineage_id);
    }
    CHECK(merge_deaths == 1);
}

TEST_CASE("a split keeps the best half and births the rest with lineage") {
    std::vector<std::pair<NodeId, NodeId>> joined;
    clique(joined, 0, 12);
    clique(joined, 100, 112);
    cross(joined, 0, 12, 100, 112, 1);
    std::vector<Snapshot> snaps{graph_of(joined), graph_of(joined), stable_two()};
    TrackerOptions opts;
    opts.seed = 11;
    auto tr = track(snaps, opts);

    auto* left = lineage_containing(tr, 0, 2);
    auto* right = lineage_containing(tr, 100, 2);
    REQUIRE(left != nullptr);
    REQUIRE(right != nullptr);
    CHECK(left != right);
    // one side continues the parent, the other is a split birth at 2
    const CommunityTimeline* parent = left->birth_snapshot == 0 ? left : right;
    const CommunityTimeline* child = parent == left ? right : left;
    CHECK(parent->birth_snapshot == 0);
    CHECK(child->birth_snapshot == 2);
    CHECK(has_event(*child, CommunityEventKind::Split));
    for (const auto& e : child->events)
        if (e.kind == CommunityEventKind::Split) CHECK(e.other_lineage == parent->lineage_id);
}

TEST_CASE("vanished community gets an unmatched death") {
    std::vector<std::pair<NodeId, NodeId>> solo;
    clique(solo, 0, 12);
    std::vector<Snapshot> snaps{stable_two(), graph_of(solo)};
    TrackerOptions opts;
    opts.seed = 3;
    auto tr = track(snaps, opts);
    int unmatched = 0;
    for (const auto& tl : tr.timelines)
        if (has_event(tl, CommunityEventKind::DeathUnmatched)) unmatched++;
    CHECK(unmatched == 1);
}

TEST_CASE("min_size filters reporting but not the partitions") {
    // a 12-clique plus a triangle: the triangle is a real community in the
    // partition but too small to earn a timeline
    std::vector<std::pair<NodeId, NodeId>> edges;
    clique(edges, 0, 12);
    clique(edges, 50, 53);
    edges.push_back({0, 50});
    auto s = graph_of(edges);
    std::vector<Snapshot> snaps{s, s};
    TrackerOptions opts;
    opts.seed = 21;
    auto tr = track(snaps, opts);
    CHECK(tr.timelines.size() == 1);
    CHECK(tr.timelines[0].members_at(0).size() == 12);
    CHECK(tr.partitions[0].assignment.size() == 15);
}

TEST_CASE("tracking is deterministic") {
    std::vector<std::pair<NodeId, NodeId>> merged;
    clique(merged, 0, 12);
    clique(merged, 100, 112);
    cross(merged, 0, 12, 100, 112, 3);
    std::vector<Snapshot> snaps{stable_two(), graph_of(merged)};
    TrackerOptions opts;
    opts.seed = 31;
    auto a = track(snaps, opts);
    auto b = track(snaps, opts);
    REQUIRE(a.timelines.size() == b.timelines.size());
    for (std::size_t i = 0; i < a.timelines.size(); i++) {
        CHECK(a.timelines[i].birth_snapshot == b.timelines[i].birth_snapshot);
        CHECK(a.timelines[i].members == b.timelines[i].members);
    }
}

TEST_CASE("delta sweep reports one entry per threshold with sane values") {
    std::vector<Snapshot> snaps{stable_two(), stable_two(2), stable_two(3)};
    auto sweep = delta_sweep(snaps, {1e-4, 0.05, 0.2}, 13);
    REQUIRE(sweep.size() == 3);
    for (const auto& entry : sweep) {
        REQUIRE(entry.modularity.size() == 3);
        for (double q : entry.modularity) {
            CHECK(q > 0.0);
            CHECK(q <= 1.0);
        }
        REQUIRE(entry.mean_similarity.size() == 2);
        for (double sim : entry.mean_similarity) CHECK(sim > 0.8);
        CHECK_FALSE(entry.size_histogram.empty());
    }
}

TEST_CASE("community stats cover the obvious invariants") {
    std::vector<Snapshot> snaps{stable_two(), stable_two(), stable_two()};
    TrackerOptions opts;
    opts.seed = 5;
    auto tr = track(snaps, opts);
    auto stats = community_stats(tr, snaps);
    REQUIRE(stats.top5_coverage.size() == 3);
    for (double c : stats.top5_coverage) CHECK(c == doctest::Approx(1.0));
    REQUIRE(stats.lifetimes.size() == tr.timelines.size());
    for (auto l : stats.lifetimes) CHECK(l == 2);
    for (const auto& hist : stats.size_histograms) {
        std::size_t total = 0;
        for (auto [size, count] : hist) total += size * count;
        CHECK(total == 24);
    }
}

TEST_CASE("size ratio analysis reports the merge pair ratio") {
    std::vector<std::pair<NodeId, NodeId>> big_small;
    clique(big_small, 0, 20);
    clique(big_small, 100, 110);
    big_small.push_back({0, 100});
    std::vector<std::pair<NodeId, NodeId>> merged;
    clique(merged, 0, 20);
    clique(merged, 100, 110);
    cross(merged, 0, 20, 100, 110, 1);
    auto before = graph_of(big_small);
    std::vector<Snapshot> snaps{before, before, graph_of(merged)};
    TrackerOptions opts;
    opts.seed = 17;
    auto tr = track(snaps, opts);
    auto cdf = size_ratio_analysis(tr);
    REQUIRE(cdf.merge_ratios.size() == 1);
    CHECK(cdf.merge_ratios[0] == doctest::Approx(10.0 / 20.0));
    CHECK(cdf.split_ratios.empty());
}
