#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "dgl/edge_dynamics.hpp"
#include "dgl/events.hpp"
#include "dgl/rng.hpp"
#include "dgl/synth.hpp"
#include "doctest.h"

using namespace dgl;

namespace {

EventLog log_of(std::vector<Event> events) {
    return finalize_log(std::move(events), IngestMode::Lenient, {});
}

Event edge(Timestamp t, NodeId u, NodeId v) { return {t, EventKind::EdgeCreate, u, v, -1}; }

// Brute-force edge-probability oracle: replays the full prefix, recomputes
// every node's degree from scratch before each window edge, and tallies the
// per-step degree-class sizes directly. Shares nothing with the estimator
// but the destination policy.
DegreeProbabilityProfile brute_profile(const EventLog& log, std::size_t at_edge_count,
                                       DestinationPolicy policy, std::size_t window,
                                       std::uint64_t seed) {
    // stream positions of the window's edges
    std::vector<std::size_t> edge_pos;
    for (std::size_t p = 0; p < log.events.size(); p++)
        if (log.events[p].kind == EventKind::EdgeCreate) edge_pos.push_back(p);
    REQUIRE(at_edge_count <= edge_pos.size());
    std::size_t begin = at_edge_count - window;

    DegreeProbabilityProfile out;
    out.at_edge_count = at_edge_count;
    out.policy = policy;
    Rng rng(split_seed(seed, "edge_probability_profile"));
    for (std::size_t i = begin; i < at_edge_count; i++) {
        // degrees over the strict stream prefix, recomputed from zero
        std::map<NodeId, std::int64_t> degree;
        for (std::size_t p = 0; p < edge_pos[i]; p++) {
            const Event& ev = log.events[p];
            if (ev.kind == EventKind::NodeCreate) {
                degree.emplace(ev.u, 0);
            } else {
                degree[ev.u]++;
                degree[ev.v]++;
            }
        }
        for (const auto& [node, d] : degree) out.denominator[d]++;
        const Event& e = log.events[edge_pos[i]];
        std::int64_t du = degree[e.u], dv = degree[e.v];
        std::int64_t dest_degree;
        if (policy == DestinationPolicy::RandomEndpoint)
            dest_degree = (rng() & 1) ? du : dv;
        else
            dest_degree = std::max(du, dv);  // tie picks either, same degree
        out.numerator[dest_degree]++;
    }
    for (const auto& [d, den] : out.denominator) {
        auto it = out.numerator.find(d);
        out.pe[d] = static_cast<double>(it == out.numerator.end() ? 0 : it->second) /
                    static_cast<double>(den);
    }
    return out;
}

}  // namespace

TEST_CASE("edge probability on the worked three-edge example") {
    // nodes a=1,b=2,c=3; edges (a,b) then (c,a). When the second edge lands,
    // a and b have degree 1 and c has degree 0; HigherDegree sends it to a.
    auto log = log_of({edge(1000, 1, 2), edge(2000, 3, 1)});
    auto prof = edge_probability_profile(log, 2, DestinationPolicy::HigherDegree, 1, 5);
    // window covers only the second edge: one degree-1 destination hit out of
    // two degree-1 node-steps (a and b)
    CHECK(prof.numerator.at(1) == 1);
    CHECK(prof.denominator.at(1) == 2);
    CHECK(prof.pe.at(1) == doctest::Approx(0.5));
    // the degree-0 class held c only, never chosen
    CHECK(prof.denominator.at(0) == 1);
    CHECK(prof.numerator.count(0) == 0);
}

TEST_CASE("estimator matches the brute-force oracle on random logs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 4; trial++) {
        std::vector<Event> events;
        int n = 18;
        std::set<std::pair<NodeId, NodeId>> seen;
        Timestamp t = 0;
        while (events.size() < 120) {
            NodeId u = static_cast<NodeId>(rng() % n), v = static_cast<NodeId>(rng() % n);
            if (u == v) continue;
            auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second) continue;
            t += 1 + static_cast<Timestamp>(rng() % 5000);
            events.push_back(edge(t, u, v));
        }
        auto log = log_of(std::move(events));
        for (auto policy : {DestinationPolicy::HigherDegree, DestinationPolicy::RandomEndpoint}) {
            for (std::size_t cut : {40ul, 80ul, 120ul}) {
                auto fast = edge_probability_profile(log, cut, policy, 30, 17 + trial);
                auto slow = brute_profile(log, cut, policy, 30, 17 + trial);
                CHECK(fast.numerator == slow.numerator);
                CHECK(fast.denominator == slow.denominator);
                REQUIRE(fast.pe.size() == slow.pe.size());
                for (const auto& [d, p] : slow.pe)
                    CHECK(fast.pe.at(d) == doctest::Approx(p).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("fit_alpha recovers a planted exponent from a synthetic profile") {
    // profile p_e(d) = 0.01 * d^0.85 laid in directly; the fit sees only the
    // numerator/denominator view of it
    DegreeProbabilityProfile prof;
    prof.at_edge_count = 5000;
    for (std::int64_t d = 1; d <= 40; d++) {
        double p = 0.01 * std::pow(static_cast<double>(d), 0.85);
        prof.denominator[d] = 1000000;
        prof.numerator[d] = static_cast<std::int64_t>(std::llround(p * 1000000));
        prof.pe[d] = static_cast<double>(prof.numerator[d]) / 1000000.0;
    }
    auto fit = fit_alpha(prof);
    CHECK(fit.alpha == doctest::Approx(0.85).epsilon(0.01));
    CHECK(fit.mse < 1e-9);
}

TEST_CASE("fit_alpha needs five populated degrees") {
    DegreeProbabilityProfile prof;
    for (std::int64_t d = 1; d <= 4; d++) {
        prof.denominator[d] = 100;
        prof.numerator[d] = 10;
        prof.pe[d] = 0.1;
    }
    CHECK_THROWS_AS(fit_alpha(prof), std::runtime_error);
}

TEST_CASE("alpha_series windows agree with independent per-window profiles") {
    GrowthConfig cfg;
    cfg.days = 60;
    cfg.initial_nodes = 30;
    cfg.growth_factor = 1.06;
    cfg.edges_per_new_node = 3;
    cfg.seed = 404;
    auto gen = generate_growth(cfg);
    auto series = alpha_series(gen.log, 400, 400, 21);
    REQUIRE(series.higher_degree.size() >= 3);
    REQUIRE(series.higher_degree.size() == series.random_endpoint.size());
    for (const auto& fit : series.higher_degree) {
        auto prof = edge_probability_profile(gen.log, fit.at_edge_count,
                                             DestinationPolicy::HigherDegree, 400, 21);
        auto again = fit_alpha(prof);
        CHECK(fit.alpha == doctest::Approx(again.alpha).epsilon(1e-12));
        CHECK(fit.mse == doctest::Approx(again.mse).epsilon(1e-12));
    }
}

TEST_CASE("inter-arrival gaps follow the either-endpoint bucket rule") {
    // node 1 joins at t=0, node 2 at t=0; partners 3..6 join late so their
    // own buckets never fire for these gaps. Gaps for node 1: 100k, 200k.
    Timestamp day = kSecondsPerDay;
    std::vector<Event> events;
    events.push_back({0, EventKind::NodeCreate, 1, -1, -1});
    events.push_back({0, EventKind::NodeCreate, 2, -1, -1});
    for (NodeId p = 3; p <= 6; p++) events.push_back({0, EventKind::NodeCreate, p, -1, -1});
    events.push_back(edge(10 * day, 1, 3));
    events.push_back(edge(12 * day, 1, 4));  // gap 2 days, node 1 age 12d
    events.push_back(edge(17 * day, 1, 5));  // gap 5 days, node 1 age 17d
    events.push_back(edge(40 * day, 2, 6));
    events.push_back(edge(41 * day, 2, 5));  // gap 1 day, node 2 age 41d; node 5 gap 24d
    auto log = log_of(std::move(events));
    auto hists = inter_arrival_histogram(log, 30 * day);
    REQUIRE(hists.size() >= 2);
    // bucket 0 (< 30 days): node 1's gaps, plus partners 3,4,5 aging inside it
    std::multiset<std::int64_t> b0(hists[0].gaps.begin(), hists[0].gaps.end());
    CHECK(b0.count(2 * day) == 1);
    CHECK(b0.count(5 * day) >= 1);
    // bucket 1 (30..60 days): node 2's gap of one day
    std::multiset<std::int64_t> b1(hists[1].gaps.begin(), hists[1].gaps.end());
    CHECK(b1.count(1 * day) == 1);
}

TEST_CASE("lifetime profile normalizes and peaks where the edges sit") {
    // one qualifying node with half its edges at the very start and half at
    // the very end of its span
    std::vector<Event> events;
    Timestamp day = kSecondsPerDay;
    events.push_back({0, EventKind::NodeCreate, 1, -1, -1});
    NodeId partner = 100;
    for (int i = 0; i < 12; i++) events.push_back(edge(1 * day + i, 1, partner++));
    for (int i = 0; i < 12; i++) events.push_back(edge(100 * day + i, 1, partner++));
    auto log = log_of(std::move(events));
    auto profile = lifetime_activity_profile(log, 30 * day, 20, 10);
    REQUIRE(profile.size() == 10);
    double total = 0;
    for (double m : profile) total += m;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(profile.front() > 0.3);
    CHECK(profile.back() > 0.3);
    for (std::size_t i = 2; i < 8; i++) CHECK(profile[i] == doctest::Approx(0.0));
}

TEST_CASE("lifetime profile throws when nothing qualifies") {
    auto log = log_of({edge(0, 1, 2)});
    CHECK_THROWS_AS(lifetime_activity_profile(log, kSecondsPerDay, 20, 10), std::runtime_error);
}

TEST_CASE("minimal age attribution splits days by the younger endpoint") {
    Timestamp day = kSecondsPerDay;
    std::vector<Event> events;
    events.push_back({0, EventKind::NodeCreate, 1, -1, -1});
    events.push_back({0, EventKind::NodeCreate, 2, -1, -1});
    events.push_back({20 * day, EventKind::NodeCreate, 3, -1, -1});
    // day 20: edge between old node 1 and brand-new node 3 -> younger age 0
    events.push_back(edge(20 * day + 100, 1, 3));
    // day 20: edge between the two old nodes -> younger age 20 days
    events.push_back(edge(20 * day + 200, 1, 2));
    auto log = log_of(std::move(events));
    auto series = minimal_age_attribution(log, {1 * day, 10 * day, 30 * day});
    REQUIRE(series.fractions.size() == 3);
    REQUIRE(series.fractions[0].size() >= 21);
    CHECK(series.edges_per_day[20] == 2);
    CHECK(series.fractions[0][20] == doctest::Approx(0.5));  // <= 1 day: only the new-node edge
    CHECK(series.fractions[1][20] == doctest::Approx(0.5));  // <= 10 days: same
    CHECK(series.fractions[2][20] == doctest::Approx(1.0));  // <= 30 days: both
}
