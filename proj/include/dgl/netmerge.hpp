#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgl/events.hpp"
#include "dgl/snapshot.hpp"

namespace dgl {

enum class Origin : std::uint8_t { A, B, New };
enum class EdgeClass : std::uint8_t { InternalA, InternalB, External, ToNew };

const char* origin_name(Origin o);
const char* edge_class_name(EdgeClass c);

struct MergeScenario {
    std::int64_t merge_day = 0;  // day index relative to the log's t0
    std::unordered_map<NodeId, Origin> origin;
    std::int64_t activity_threshold_days = 94;

    Origin origin_of(NodeId n) const {
        auto it = origin.find(n);
        return it == origin.end() ? Origin::New : it->second;
    }
};

// Builds origins from the event stream's network tags: nodes created before
// merge_day carry their tag's origin (tag_a / tag_b), later joiners are New.
MergeScenario scenario_from_tags(const EventLog& log, std::int64_t merge_day,
                                 const std::string& tag_a, const std::string& tag_b,
                                 std::int64_t activity_threshold_days = 94);

// Untagged fallback: origin by join time relative to merge_day plus an
// explicit id threshold (ids < id_split are A, the rest B).
MergeScenario scenario_from_id_split(const EventLog& log, std::int64_t merge_day, NodeId id_split,
                                     std::int64_t activity_threshold_days = 94);

EdgeClass classify_edge(const MergeScenario& scenario, NodeId u, NodeId v);

struct DailyEdgeClassCounts {
    std::vector<std::int64_t> days;  // day index relative to merge_day, >= 0
    std::vector<std::array<std::int64_t, 4>> counts;  // indexed by EdgeClass
};

// Per-day class counts of every post-merge edge.
DailyEdgeClassCounts classify_edges(const EventLog& log, const MergeScenario& scenario);

struct ActivitySeries {
    std::vector<std::int64_t> days;       // relative to merge_day; truncated t days early
    std::vector<std::int64_t> active_a;   // users active at that day per origin
    std::vector<std::int64_t> active_b;
};

// Forward-looking activity: a user is active at day d iff they create >= 1
// (optionally class-filtered) edge in [d, d + threshold). The series stops
// threshold days before the end of data.
ActivitySeries activity_series(const EventLog& log, const MergeScenario& scenario,
                               std::optional<EdgeClass> edge_class_filter = std::nullopt,
                               bool backward_looking = false);

struct DuplicateEstimate {
    double inactive_fraction_a = 0;
    double inactive_fraction_b = 0;
    double combined_lower_bound = 0;  // over all pre-merge users
};

DuplicateEstimate duplicate_estimate(const EventLog& log, const MergeScenario& scenario);

struct RatioPoint {
    std::int64_t day = 0;
    double value = 0;
    bool gap = false;  // zero denominator
};

struct EdgeRatioSeries {
    std::vector<RatioPoint> internal_to_external;      // (internal A + B) / external
    std::vector<RatioPoint> new_to_external;           // to-new / external
    std::vector<RatioPoint> internal_a_to_external;
    std::vector<RatioPoint> internal_b_to_external;
};

EdgeRatioSeries edge_ratio_series(const EventLog& log, const MergeScenario& scenario);

struct CrossDistance {
    double mean_a_to_b = 0;
    double mean_b_to_a = 0;
    std::size_t unreachable_a = 0;
    std::size_t unreachable_b = 0;
    bool defined_a = false;
    bool defined_b = false;
};

// Mean shortest hop count from sampled pre-merge sources of one origin to
// any node of the other, on the graph at merge_day + day restricted to
// pre-merge nodes and Internal/External edges.
CrossDistance cross_network_distance(const EventLog& log, const MergeScenario& scenario,
                                     std::int64_t day, std::size_t sample_size,
                                     std::uint64_t seed);

}  // namespace dgl
