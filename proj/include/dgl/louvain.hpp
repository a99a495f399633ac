#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dgl/snapshot.hpp"

namespace dgl {

// Node-to-community assignment for one snapshot, keyed by external node id.
struct CommunityPartition {
    std::size_t snapshot_index = 0;
    std::unordered_map<NodeId, std::int32_t> assignment;
    double modularity = 0.0;
    double delta = 0.0;

    std::int32_t community_count() const;
    // member sets grouped by community id
    std::unordered_map<std::int32_t, std::vector<NodeId>> members() const;
};

// Newman modularity Q = sum_c (e_c/m - (d_c/2m)^2) of an assignment.
double modularity(const Snapshot& s, const std::unordered_map<NodeId, std::int32_t>& assignment);

// Two-phase modularity optimization: seeded-order local moves until a pass
// gains less than delta, then aggregation, repeated. When init is given its
// assignment seeds the first pass and nodes it does not cover start as
// singletons. Deterministic for a fixed seed.
CommunityPartition louvain(const Snapshot& s, double delta, std::uint64_t seed,
                           const CommunityPartition* init = nullptr);

double jaccard(const std::vector<NodeId>& a, const std::vector<NodeId>& b);

}  // namespace dgl
