#include "dgl/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "dgl/io.hpp"
#include "dgl/rng.hpp"

namespace dgl {

namespace {

struct Community {
    std::int32_t id;
    std::vector<NodeId> members;  // sorted
};

// Communities of at least min_size, members sorted, ids ascending.
std::vector<Community> sized_communities(const CommunityPartition& part, std::size_t min_size) {
    auto groups = part.members();
    std::vector<Community> out;
    for (auto& [id, members] : groups) {
        if (members.size() < min_size) continue;
        std::sort(members.begin(), members.end());
        out.push_back({id, std::move(members)});
    }
    std::sort(out.begin(), out.end(), [](const Community& a, const Community& b) { return a.id < b.id; });
    return out;
}

struct MatchEdge {
    std::size_t from, to;  // indices into prev/next community vectors
    double jaccard;
};

std::vector<MatchEdge> overlap_matches(const std::vector<Community>& prev,
                                       const std::vector<Community>& next) {
    std::unordered_map<NodeId, std::size_t> where;
    for (std::size_t j = 0; j < prev.size(); j++)
        for (auto n : prev[j].members) where[n] = j;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> overlap;
    for (std::size_t k = 0; k < next.size(); k++)
        for (auto n : next[k].members) {
            auto it = where.find(n);
            if (it != where.end()) overlap[{it->second, k}]++;
        }
    std::vector<MatchEdge> out;
    for (auto& [jk, ov] : overlap) {
        auto [j, k] = jk;
        double uni = static_cast<double>(prev[j].members.size() + next[k].members.size() - ov);
        out.push_back({j, k, static_cast<double>(ov) / uni});
    }
    return out;
}

// argmax with the documented tie-break: higher Jaccard, then larger
// community, then lower index (stable stand-in for the seeded draw).
bool better(const MatchEdge& a, const MatchEdge& b, std::size_t size_a, std::size_t size_b) {
    if (a.jaccard != b.jaccard) return a.jaccard > b.jaccard;
    if (size_a != size_b) return size_a > size_b;
    return false;
}

}  // namespace

TrackerResult track(const std::vector<Snapshot>& snapshots, const TrackerOptions& opts) {
    if (snapshots.size() < 2) throw std::runtime_error("track needs >= 2 snapshots");

    TrackerResult result;
    result.partitions.reserve(snapshots.size());
    for (std::size_t i = 0; i < snapshots.size(); i++) {
        const CommunityPartition* init = i == 0 ? nullptr : &result.partitions.back();
        auto part = louvain(snapshots[i], opts.delta,
                            split_seed(opts.seed, "louvain/" + std::to_string(i)), init);
        part.snapshot_index = i;
        result.partitions.push_back(std::move(part));
    }

    auto prev = sized_communities(result.partitions[0], opts.min_size);
    // lineage index currently holding each prev community
    std::vector<std::int64_t> lineage_of(prev.size());
    for (std::size_t j = 0; j < prev.size(); j++) {
        CommunityTimeline tl;
        tl.lineage_id = static_cast<std::int64_t>(result.timelines.size());
        tl.birth_snapshot = 0;
        tl.members.push_back(prev[j].members);
        tl.events.push_back({CommunityEventKind::Birth, 0, -1});
        lineage_of[j] = tl.lineage_id;
        result.timelines.push_back(std::move(tl));
    }

    for (std::size_t i = 1; i < snapshots.size(); i++) {
        auto next = sized_communities(result.partitions[i], opts.min_size);
        auto matches = overlap_matches(prev, next);

        constexpr std::size_t none = static_cast<std::size_t>(-1);
        std::vector<std::size_t> best_succ(prev.size(), none);
        std::vector<std::size_t> best_pred(next.size(), none);
        std::map<std::pair<std::size_t, std::size_t>, double> jac;
        for (const auto& m : matches) {
            if (m.jaccard < opts.similarity_floor) continue;
            jac[{m.from, m.to}] = m.jaccard;
            auto& bs = best_succ[m.from];
            if (bs == none ||
                better(m, {m.from, bs, jac[{m.from, bs}]}, next[m.to].members.size(),
                       next[bs].members.size()))
                bs = m.to;
            auto& bp = best_pred[m.to];
            if (bp == none ||
                better(m, {bp, m.to, jac[{bp, m.to}]}, prev[m.from].members.size(),
                       prev[bp].members.size()))
                bp = m.from;
        }

        std::vector<std::int64_t> next_lineage(next.size(), -1);

        // continuations: mutual best pairs
        for (std::size_t j = 0; j < prev.size(); j++) {
            auto k = best_succ[j];
            if (k != none && best_pred[k] == j) {
                next_lineage[k] = lineage_of[j];
                result.timelines[lineage_of[j]].members.push_back(next[k].members);
            }
        }

        // births, split births
        std::vector<std::size_t> split_count(prev.size(), 0);
        for (std::size_t k = 0; k < next.size(); k++)
            if (best_pred[k] != none) split_count[best_pred[k]]++;
        for (std::size_t k = 0; k < next.size(); k++) {
            if (next_lineage[k] != -1) continue;
            CommunityTimeline tl;
            tl.lineage_id = static_cast<std::int64_t>(result.timelines.size());
            tl.birth_snapshot = i;
            tl.members.push_back(next[k].members);
            if (best_pred[k] != none && split_count[best_pred[k]] >= 2)
                tl.events.push_back(
                    {CommunityEventKind::Split, i, lineage_of[best_pred[k]]});
            else
                tl.events.push_back({CommunityEventKind::Birth, i, -1});
            next_lineage[k] = tl.lineage_id;
            result.timelines.push_back(std::move(tl));
        }

        // deaths: merged away or unmatched
        for (std::size_t j = 0; j < prev.size(); j++) {
            auto k = best_succ[j];
            if (k != none && best_pred[k] == j) continue;  // continued
            auto& tl = result.timelines[lineage_of[j]];
            tl.death_snapshot = i;
            if (k == none)
                tl.events.push_back({CommunityEventKind::DeathUnmatched, i, -1});
            else
                tl.events.push_back({CommunityEventKind::Merge, i, next_lineage[k]});
        }

        prev = std::move(next);
        lineage_of.resize(prev.size());
        for (std::size_t k = 0; k < prev.size(); k++) lineage_of[k] = next_lineage[k];
    }

    for (auto& tl : result.timelines)
        if (!tl.death_snapshot)
            tl.events.push_back({CommunityEventKind::DeathEndOfData, snapshots.size() - 1, -1});
    return result;
}

std::vector<DeltaSweepEntry> delta_sweep(const std::vector<Snapshot>& snapshots,
                                         const std::vector<double>& deltas, std::uint64_t seed,
                                         std::size_t min_size) {
    if (deltas.empty()) throw std::runtime_error("deltas must be non-empty");
    std::vector<DeltaSweepEntry> out;
    for (double d : deltas) {
        DeltaSweepEntry entry;
        entry.delta = d;
        if (snapshots.size() < 2) {
            // single snapshot: Q only, no similarity series
            auto part = louvain(snapshots.at(0), d, split_seed(seed, "sweep/0"));
            entry.modularity.push_back(part.modularity);
            out.push_back(std::move(entry));
            continue;
        }
        TrackerOptions opts;
        opts.delta = d;
        opts.seed = split_seed(seed, "sweep");
        opts.min_size = min_size;
        auto tracker = track(snapshots, opts);
        for (const auto& part : tracker.partitions) entry.modularity.push_back(part.modularity);
        entry.mean_similarity.assign(snapshots.size() - 1, 0.0);
        std::vector<std::size_t> counts(snapshots.size() - 1, 0);
        for (const auto& tl : tracker.timelines) {
            for (std::size_t k = 0; k + 1 < tl.members.size(); k++) {
                std::size_t pair_idx = tl.birth_snapshot + k;
                entry.mean_similarity[pair_idx] += jaccard(tl.members[k], tl.members[k + 1]);
                counts[pair_idx]++;
            }
        }
        for (std::size_t p = 0; p < counts.size(); p++)
            if (counts[p] > 0) entry.mean_similarity[p] /= static_cast<double>(counts[p]);
        for (auto& [id, members] :
             sized_communities(tracker.partitions.back(), min_size))
            entry.size_histogram[members.size()]++;
        out.push_back(std::move(entry));
    }
    return out;
}

CommunityStats community_stats(const TrackerResult& tracker,
                               const std::vector<Snapshot>& snapshots) {
    CommunityStats stats;
    for (std::size_t i = 0; i < snapshots.size(); i++) {
        auto groups = tracker.partitions[i].members();
        std::vector<std::size_t> sizes;
        for (auto& [id, members] : groups) sizes.push_back(members.size());
        std::sort(sizes.rbegin(), sizes.rend());
        std::map<std::size_t, std::size_t> hist;
        for (auto s : sizes) hist[s]++;
        stats.size_histograms.push_back(std::move(hist));
        std::size_t top5 = 0;
        for (std::size_t t = 0; t < std::min<std::size_t>(5, sizes.size()); t++) top5 += sizes[t];
        stats.top5_coverage.push_back(static_cast<double>(top5) /
                                      static_cast<double>(snapshots[i].node_count()));
    }
    for (const auto& tl : tracker.timelines)
        stats.lifetimes.push_back(tl.last_snapshot() - tl.birth_snapshot);
    return stats;
}

SizeRatioCdf size_ratio_analysis(const TrackerResult& tracker) {
    SizeRatioCdf out;
    // merges: group dying predecessors with the surviving lineage per
    // (snapshot, target); sizes taken at the snapshot before the merge
    std::map<std::pair<std::size_t, std::int64_t>, std::vector<std::size_t>> merge_groups;
    for (const auto& tl : tracker.timelines) {
        for (const auto& ev : tl.events) {
            if (ev.kind != CommunityEventKind::Merge) continue;
            auto& group = merge_groups[{ev.snapshot_index, ev.other_lineage}];
            group.push_back(tl.members_at(ev.snapshot_index - 1).size());
            if (group.size() == 1) {
                const auto& target = tracker.timelines[ev.other_lineage];
                if (target.alive_at(ev.snapshot_index - 1))
                    group.push_back(target.members_at(ev.snapshot_index - 1).size());
            }
        }
    }
    for (auto& [key, sizes] : merge_groups) {
        if (sizes.size() < 2) continue;
        std::sort(sizes.rbegin(), sizes.rend());
        out.merge_ratios.push_back(static_cast<double>(sizes[1]) / static_cast<double>(sizes[0]));
    }

    // splits: successors are the born communities plus the parent's own
    // continuation at the split snapshot
    std::map<std::pair<std::size_t, std::int64_t>, std::vector<std::size_t>> split_groups;
    for (const auto& tl : tracker.timelines) {
        for (const auto& ev : tl.events) {
            if (ev.kind != CommunityEventKind::Split) continue;
            auto& group = split_groups[{ev.snapshot_index, ev.other_lineage}];
            group.push_back(tl.members_at(ev.snapshot_index).size());
            if (group.size() == 1) {
                const auto& parent = tracker.timelines[ev.other_lineage];
                if (parent.alive_at(ev.snapshot_index))
                    group.push_back(parent.members_at(ev.snapshot_index).size());
            }
        }
    }
    for (auto& [key, sizes] : split_groups) {
        if (sizes.size() < 2) continue;
        std::sort(sizes.rbegin(), sizes.rend());
        out.split_ratios.push_back(static_cast<double>(sizes[1]) / static_cast<double>(sizes[0]));
    }
    std::sort(out.merge_ratios.begin(), out.merge_ratios.end());
    std::sort(out.split_ratios.begin(), out.split_ratios.end());
    return out;
}

CommunityImpact community_impact(const TrackerResult& tracker,
                                 const std::vector<Snapshot>& snapshots, const EventLog& log,
                                 const std::vector<std::size_t>& size_band_edges,
                                 std::size_t min_size) {
    CommunityImpact impact;

    // per-snapshot membership: node -> size of its >=min_size community (0 if none)
    std::vector<std::unordered_map<NodeId, std::size_t>> comm_size(snapshots.size());
    for (std::size_t i = 0; i < snapshots.size(); i++) {
        auto groups = tracker.partitions[i].members();
        for (auto& [id, members] : groups) {
            if (members.size() < min_size) continue;
            for (auto n : members) comm_size[i][n] = members.size();
        }
    }
    auto snapshot_of = [&](Timestamp t) -> std::int64_t {
        std::int64_t lo = -1;
        for (std::size_t i = 0; i < snapshots.size(); i++)
            if (snapshots[i].cut_time() <= t) lo = static_cast<std::int64_t>(i);
        return lo;
    };
    auto in_community = [&](NodeId n, Timestamp t) -> std::size_t {
        auto s = snapshot_of(t);
        if (s < 0) return 0;
        auto it = comm_size[s].find(n);
        return it == comm_size[s].end() ? 0 : it->second;
    };

    std::unordered_map<NodeId, Timestamp> join, last_edge;
    for (const Event& ev : log.events) {
        if (ev.kind == EventKind::NodeCreate) {
            join[ev.u] = ev.timestamp;
            continue;
        }
        for (NodeId n : {ev.u, ev.v}) {
            auto it = last_edge.find(n);
            if (it != last_edge.end()) {
                std::int64_t gap = ev.timestamp - it->second;
                if (in_community(n, ev.timestamp) > 0)
                    impact.community_gaps.push_back(gap);
                else
                    impact.non_community_gaps.push_back(gap);
            }
            last_edge[n] = ev.timestamp;
        }
    }

    auto band_of = [&](std::size_t size) -> int {
        if (size == 0) return -1;
        int b = 0;
        for (auto edge : size_band_edges) {
            if (size <= edge) return b;
            b++;
        }
        return b;
    };
    for (auto& [n, t_join] : join) {
        auto it = last_edge.find(n);
        if (it == last_edge.end()) continue;
        impact.lifetime_by_size_band[band_of(in_community(n, it->second))].push_back(
            it->second - t_join);
    }

    // in-degree ratio at the final snapshot
    const Snapshot& last = snapshots.back();
    const auto& assign = tracker.partitions.back().assignment;
    const auto& sizes = comm_size.back();
    for (Snapshot::Index u = 0; u < last.node_count(); u++) {
        NodeId id = last.external_id(u);
        if (!sizes.count(id) || last.degree(u) == 0) continue;
        std::int32_t cu = assign.at(id);
        std::size_t inside = 0;
        for (auto v : last.neighbors(u))
            if (assign.at(last.external_id(v)) == cu) inside++;
        impact.in_degree_ratios.push_back(static_cast<double>(inside) /
                                          static_cast<double>(last.degree(u)));
    }
    return impact;
}

void write_timelines_jsonl(const std::string& path, const TrackerResult& tracker) {
    std::ostringstream os;
    for (const auto& tl : tracker.timelines) {
        os << "{\"lineage_id\":" << tl.lineage_id << ",\"birth\":" << tl.birth_snapshot;
        if (tl.death_snapshot)
            os << ",\"death\":" << *tl.death_snapshot;
        else
            os << ",\"death\":null";
        os << ",\"events\":[";
        for (std::size_t e = 0; e < tl.events.size(); e++) {
            const auto& ev = tl.events[e];
            const char* kind = "?";
            switch (ev.kind) {
                case CommunityEventKind::Birth: kind = "birth"; break;
                case CommunityEventKind::Death: kind = "death"; break;
                case CommunityEventKind::Merge: kind = "merge"; break;
                case CommunityEventKind::Split: kind = "split"; break;
                case CommunityEventKind::DeathEndOfData: kind = "death_end_of_data"; break;
                case CommunityEventKind::DeathUnmatched: kind = "death_unmatched"; break;
            }
            os << (e ? "," : "") << "{\"kind\":\"" << kind << "\",\"snapshot\":" << ev.snapshot_index
               << ",\"other\":" << ev.other_lineage << "}";
        }
        os << "],\"sizes\":[";
        for (std::size_t k = 0; k < tl.members.size(); k++)
            os << (k ? "," : "") << tl.members[k].size();
        os << "]}\n";
    }
    write_file_atomic(path, os.str());
}

}  // namespace dgl
