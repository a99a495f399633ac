#include "dgl/netmerge.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "dgl/rng.hpp"

namespace dgl {

const char* origin_name(Origin o) {
    switch (o) {
        case Origin::A: return "A";
        case Origin::B: return "B";
        case Origin::New: return "new";
    }
    return "?";
}

const char* edge_class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::InternalA: return "internal_a";
        case EdgeClass::InternalB: return "internal_b";
        case EdgeClass::External: return "external";
        case EdgeClass::ToNew: return "to_new";
    }
    return "?";
}

MergeScenario scenario_from_tags(const EventLog& log, std::int64_t merge_day,
                                 const std::string& tag_a, const std::string& tag_b,
                                 std::int64_t activity_threshold_days) {
    MergeScenario sc;
    sc.merge_day = merge_day;
    sc.activity_threshold_days = activity_threshold_days;
    for (const Event& ev : log.events) {
        if (ev.kind != EventKind::NodeCreate) continue;
        if (log.day_of(ev.timestamp) >= merge_day) {
            sc.origin[ev.u] = Origin::New;
            continue;
        }
        const std::string* tag = log.network_name(ev.network);
        if (!tag) throw std::runtime_error("untagged pre-merge node " + std::to_string(ev.u));
        if (*tag == tag_a)
            sc.origin[ev.u] = Origin::A;
        else if (*tag == tag_b)
            sc.origin[ev.u] = Origin::B;
        else
            throw std::runtime_error("unknown network tag '" + *tag + "'");
    }
    return sc;
}

MergeScenario scenario_from_id_split(const EventLog& log, std::int64_t merge_day, NodeId id_split,
                                     std::int64_t activity_threshold_days) {
    MergeScenario sc;
    sc.merge_day = merge_day;
    sc.activity_threshold_days = activity_threshold_days;
    for (const Event& ev : log.events) {
        if (ev.kind != EventKind::NodeCreate) continue;
        if (log.day_of(ev.timestamp) >= merge_day)
            sc.origin[ev.u] = Origin::New;
        else
            sc.origin[ev.u] = ev.u < id_split ? Origin::A : Origin::B;
    }
    return sc;
}

EdgeClass classify_edge(const MergeScenario& scenario, NodeId u, NodeId v) {
    Origin ou = scenario.origin_of(u);
    Origin ov = scenario.origin_of(v);
    // ToNew takes precedence over every other class
    if (ou == Origin::New || ov == Origin::New) return EdgeClass::ToNew;
    if (ou != ov) return EdgeClass::External;
    return ou == Origin::A ? EdgeClass::InternalA : EdgeClass::InternalB;
}

DailyEdgeClassCounts classify_edges(const EventLog& log, const MergeScenario& scenario) {
    if (scenario.merge_day < 0 || scenario.merge_day > log.day_of(log.last_time()))
        throw std::runtime_error("merge_day outside log span");
    std::int64_t span = log.day_of(log.last_time()) - scenario.merge_day + 1;
    DailyEdgeClassCounts out;
    out.days.resize(span);
    out.counts.assign(span, {0, 0, 0, 0});
    for (std::int64_t d = 0; d < span; d++) out.days[d] = d;
    for (const Event& ev : log.events) {
        if (ev.kind != EventKind::EdgeCreate) continue;
        std::int64_t d = log.day_of(ev.timestamp) - scenario.merge_day;
        if (d < 0) continue;
        out.counts[d][static_cast<std::size_t>(classify_edge(scenario, ev.u, ev.v))]++;
    }
    return out;
}

ActivitySeries activity_series(const EventLog& log, const MergeScenario& scenario,
                               std::optional<EdgeClass> edge_class_filter,
                               bool backward_looking) {
    std::int64_t t = scenario.activity_threshold_days;
    std::int64_t last_day = log.day_of(log.last_time());
    std::int64_t first_emit = 0;  // relative to merge_day
    std::int64_t last_emit = backward_looking ? last_day - scenario.merge_day
                                              : last_day - scenario.merge_day - t;
    ActivitySeries out;
    if (last_emit < first_emit) return out;

    // per-user sorted edge days (post-merge, filtered)
    std::unordered_map<NodeId, std::vector<std::int64_t>> edge_days;
    for (const Event& ev : log.events) {
        if (ev.kind != EventKind::EdgeCreate) continue;
        std::int64_t d = log.day_of(ev.timestamp) - scenario.merge_day;
        if (d < 0) continue;
        if (edge_class_filter && classify_edge(scenario, ev.u, ev.v) != *edge_class_filter)
            continue;
        edge_days[ev.u].push_back(d);
        edge_days[ev.v].push_back(d);
    }

    // active at d iff an edge lands in [d, d+t) (forward) or (d-t, d] (backward);
    // each user's edge days expand to intervals, accumulated per origin via
    // a difference array
    std::int64_t span = last_emit - first_emit + 1;
    std::vector<std::int64_t> diff_a(span + 1, 0), diff_b(span + 1, 0);
    for (auto& [node, origin] : scenario.origin) {
        if (origin == Origin::New) continue;
        auto it = edge_days.find(node);
        if (it == edge_days.end()) continue;
        auto& days = it->second;
        std::sort(days.begin(), days.end());
        days.erase(std::unique(days.begin(), days.end()), days.end());
        auto& diff = origin == Origin::A ? diff_a : diff_b;
        // merge the per-edge activity intervals into disjoint runs first
        std::int64_t run_lo = 0, run_hi = -2;
        bool open = false;
        auto flush = [&](std::int64_t lo, std::int64_t hi) {
            lo = std::max(lo, first_emit);
            hi = std::min(hi, last_emit);
            if (lo > hi) return;
            diff[lo - first_emit]++;
            diff[hi - first_emit + 1]--;
        };
        for (std::int64_t ed : days) {
            std::int64_t lo = backward_looking ? ed : ed - t + 1;
            std::int64_t hi = backward_looking ? ed + t - 1 : ed;
            if (open && lo <= run_hi + 1) {
                run_hi = std::max(run_hi, hi);
            } else {
                if (open) flush(run_lo, run_hi);
                run_lo = lo;
                run_hi = hi;
                open = true;
            }
        }
        if (open) flush(run_lo, run_hi);
    }
    std::int64_t acc_a = 0, acc_b = 0;
    out.days.resize(span);
    out.active_a.resize(span);
    out.active_b.resize(span);
    for (std::int64_t d = 0; d < span; d++) {
        acc_a += diff_a[d];
        acc_b += diff_b[d];
        out.days[d] = first_emit + d;
        out.active_a[d] = acc_a;
        out.active_b[d] = acc_b;
    }
    return out;
}

DuplicateEstimate duplicate_estimate(const EventLog& log, const MergeScenario& scenario) {
    auto series = activity_series(log, scenario);
    if (series.days.empty() || series.days[0] != 0)
        throw std::runtime_error("activity window does not cover day 0");
    std::size_t total_a = 0, total_b = 0;
    for (auto& [node, origin] : scenario.origin) {
        if (origin == Origin::A) total_a++;
        if (origin == Origin::B) total_b++;
    }
    DuplicateEstimate est;
    if (total_a > 0)
        est.inactive_fraction_a =
            1.0 - static_cast<double>(series.active_a[0]) / static_cast<double>(total_a);
    if (total_b > 0)
        est.inactive_fraction_b =
            1.0 - static_cast<double>(series.active_b[0]) / static_cast<double>(total_b);
    std::size_t total = total_a + total_b;
    if (total > 0)
        est.combined_lower_bound =
            1.0 -
            static_cast<double>(series.active_a[0] + series.active_b[0]) / static_cast<double>(total);
    return est;
}

EdgeRatioSeries edge_ratio_series(const EventLog& log, const MergeScenario& scenario) {
    auto daily = classify_edges(log, scenario);
    EdgeRatioSeries out;
    for (std::size_t i = 0; i < daily.days.size(); i++) {
        auto& c = daily.counts[i];
        std::int64_t day = daily.days[i];
        double ext = static_cast<double>(c[static_cast<std::size_t>(EdgeClass::External)]);
        double ia = static_cast<double>(c[static_cast<std::size_t>(EdgeClass::InternalA)]);
        double ib = static_cast<double>(c[static_cast<std::size_t>(EdgeClass::InternalB)]);
        double tn = static_cast<double>(c[static_cast<std::size_t>(EdgeClass::ToNew)]);
        auto point = [&](double num) {
            return ext > 0 ? RatioPoint{day, num / ext, false} : RatioPoint{day, 0, true};
        };
        out.internal_to_external.push_back(point(ia + ib));
        out.new_to_external.push_back(point(tn));
        out.internal_a_to_external.push_back(point(ia));
        out.internal_b_to_external.push_back(point(ib));
    }
    return out;
}

CrossDistance cross_network_distance(const EventLog& log, const MergeScenario& scenario,
                                     std::int64_t day, std::size_t sample_size,
                                     std::uint64_t seed) {
    Timestamp cut = log.first_time() + (scenario.merge_day + day + 1) * kSecondsPerDay - 1;
    cut = std::min(cut, log.last_time());
    auto snap = snapshot_at(log, cut);

    // restricted graph: pre-merge nodes, Internal/External edges only
    std::size_t n = snap.node_count();
    std::vector<std::uint8_t> keep(n, 0);
    std::vector<Origin> orig(n, Origin::New);
    std::size_t kept = 0;
    for (Snapshot::Index u = 0; u < n; u++) {
        Origin o = scenario.origin_of(snap.external_id(u));
        orig[u] = o;
        if (o != Origin::New) {
            keep[u] = 1;
            kept++;
        }
    }
    if (kept == 0) throw std::runtime_error("empty restricted graph");

    auto solve = [&](Origin src_origin, Origin dst_origin, std::size_t& unreachable,
                     bool& defined) -> double {
        // multi-source BFS from every dst-origin node gives each node its
        // distance to the nearest opposite-network user
        std::vector<std::int32_t> dist(n, -1);
        std::vector<Snapshot::Index> queue;
        for (Snapshot::Index u = 0; u < n; u++)
            if (keep[u] && orig[u] == dst_origin) {
                dist[u] = 0;
                queue.push_back(u);
            }
        std::size_t head = 0;
        while (head < queue.size()) {
            auto u = queue[head++];
            for (auto v : snap.neighbors(u)) {
                if (!keep[v] || dist[v] >= 0) continue;
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
        std::vector<Snapshot::Index> sources;
        for (Snapshot::Index u = 0; u < n; u++)
            if (keep[u] && orig[u] == src_origin) sources.push_back(u);
        if (sources.empty()) throw std::runtime_error("empty restricted graph");
        Rng rng(split_seed(seed, src_origin == Origin::A ? "dist/a" : "dist/b"));
        std::size_t take = std::min(sample_size, sources.size());
        for (std::size_t i = 0; i < take; i++) {
            std::uniform_int_distribution<std::size_t> pick(i, sources.size() - 1);
            std::swap(sources[i], sources[pick(rng)]);
        }
        double sum = 0;
        std::size_t reached = 0;
        unreachable = 0;
        for (std::size_t i = 0; i < take; i++) {
            if (dist[sources[i]] < 0) {
                unreachable++;
            } else {
                sum += dist[sources[i]];
                reached++;
            }
        }
        defined = reached > 0;
        return reached > 0 ? sum / static_cast<double>(reached) : 0.0;
    };

    CrossDistance out;
    out.mean_a_to_b = solve(Origin::A, Origin::B, out.unreachable_a, out.defined_a);
    out.mean_b_to_a = solve(Origin::B, Origin::A, out.unreachable_b, out.defined_b);
    return out;
}

}  // namespace dgl
