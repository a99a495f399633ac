#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgl/events.hpp"
#include "dgl/louvain.hpp"
#include "dgl/snapshot.hpp"

namespace dgl {

enum class CommunityEventKind { Birth, Death, Merge, Split, DeathEndOfData, DeathUnmatched };

struct CommunityEvent {
    CommunityEventKind kind;
    std::size_t snapshot_index = 0;
    std::int64_t other_lineage = -1;  // merge target / split parent
};

// One community identity traced across snapshots.
struct CommunityTimeline {
    std::int64_t lineage_id = 0;
    std::size_t birth_snapshot = 0;
    std::optional<std::size_t> death_snapshot;
    // member sets per live snapshot, members[k] is at birth_snapshot + k
    std::vector<std::vector<NodeId>> members;
    std::vector<CommunityEvent> events;

    std::size_t last_snapshot() const { return birth_snapshot + members.size() - 1; }
    const std::vector<NodeId>& members_at(std::size_t snapshot_index) const {
        return members.at(snapshot_index - birth_snapshot);
    }
    bool alive_at(std::size_t snapshot_index) const {
        return snapshot_index >= birth_snapshot && snapshot_index <= last_snapshot();
    }
};

struct TrackerResult {
    std::vector<CommunityTimeline> timelines;
    std::vector<CommunityPartition> partitions;  // one per snapshot
};

struct TrackerOptions {
    double delta = 0.04;
    std::uint64_t seed = 1;
    std::size_t min_size = 10;
    double similarity_floor = 0.1;
};

// Runs Louvain incrementally over the snapshots (previous partition seeds
// the next), links communities by highest Jaccard, and derives
// Birth/Death/Merge/Split events. min_size filters reporting only; the
// partitions keep every node.
TrackerResult track(const std::vector<Snapshot>& snapshots, const TrackerOptions& opts);

struct DeltaSweepEntry {
    double delta = 0.0;
    std::vector<double> modularity;       // per snapshot
    std::vector<double> mean_similarity;  // per consecutive pair, matched pairs only
    std::map<std::size_t, std::size_t> size_histogram;  // at the final snapshot
};

std::vector<DeltaSweepEntry> delta_sweep(const std::vector<Snapshot>& snapshots,
                                         const std::vector<double>& deltas, std::uint64_t seed,
                                         std::size_t min_size = 10);

struct CommunityStats {
    std::vector<std::map<std::size_t, std::size_t>> size_histograms;  // per snapshot
    std::vector<double> top5_coverage;                                // per snapshot
    std::vector<std::size_t> lifetimes;  // snapshots alive, closed lineages and end-of-data alike
};

CommunityStats community_stats(const TrackerResult& tracker,
                               const std::vector<Snapshot>& snapshots);

struct SizeRatioCdf {
    std::vector<double> merge_ratios;  // second-largest/largest merging predecessors
    std::vector<double> split_ratios;  // over the two largest successors
};

SizeRatioCdf size_ratio_analysis(const TrackerResult& tracker);

struct CommunityImpact {
    std::vector<std::int64_t> community_gaps;      // edge inter-arrival, user in a community
    std::vector<std::int64_t> non_community_gaps;  //   "          ", user not in one
    // user lifetime (join -> last edge) bucketed by the size band of the
    // community the user sat in; band -1 collects non-community users
    std::map<int, std::vector<Timestamp>> lifetime_by_size_band;
    std::vector<double> in_degree_ratios;  // per community user at the final snapshot
};

CommunityImpact community_impact(const TrackerResult& tracker,
                                 const std::vector<Snapshot>& snapshots, const EventLog& log,
                                 const std::vector<std::size_t>& size_band_edges,
                                 std::size_t min_size = 10);

// JSON-lines lineage dump, one lineage per line.
void write_timelines_jsonl(const std::string& path, const TrackerResult& tracker);

}  // namespace dgl
