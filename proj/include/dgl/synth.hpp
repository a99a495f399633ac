#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgl/events.hpp"

namespace dgl {

// Mixed preferential/random attachment growth process. New nodes arrive
// Poisson around an exponential growth curve; every edge picks its
// destination preferentially (weight = degree) with probability
// beta(n) = beta0 * n^-beta_eta, uniformly otherwise.
struct GrowthConfig {
    int days = 100;
    int initial_nodes = 100;
    double growth_factor = 1.02;  // g > 1, expected nodes = initial * g^day
    int edges_per_new_node = 2;   // m
    double gamma = 2.2;           // activity inter-arrival exponent
    Timestamp gap_unit = kSecondsPerDay;  // seconds per activity-gap unit
    double beta0 = 1.0;
    double beta_eta = 0.0;
    bool activity = true;      // existing nodes keep creating edges
    std::size_t max_edges = 0;  // stop after this many edges (0 = unlimited)
    std::uint64_t seed = 1;
};

struct GrowthTruth {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t pa_edges = 0;       // destination drawn by degree
    std::size_t random_edges = 0;   // destination drawn uniformly
    std::vector<std::uint8_t> edge_used_pa;          // per emitted edge
    std::vector<std::uint32_t> activity_edges_per_node;

    std::string to_json() const;
};

struct GrowthResult {
    EventLog log;
    GrowthTruth truth;
};

GrowthResult generate_growth(const GrowthConfig& config);

// Draws one zeta(gamma) variate (support 1, 2, ...), inverse-CDF on a
// cached table. Exposed for the sampling oracles in tests.
std::int64_t sample_zeta(double gamma, std::uint64_t& state);

// Planted dynamic communities with scripted merges and splits.
struct PlantedEvent {
    enum Kind { MergeBlocks, SplitBlock } kind;
    std::size_t at_snapshot = 0;
    std::size_t block_a = 0;  // merge: absorbing block / split: block to split
    std::size_t block_b = 0;  // merge only
    double ratio = 0.5;       // split only: fraction staying in block_a
};

struct PlantedScript {
    std::vector<std::size_t> block_sizes;
    double p_in = 0.3;
    double p_out = 0.01;
    std::size_t growth_per_snapshot = 0;  // new nodes per block per snapshot
    // a split dilutes cross-half density by adding this multiple of each
    // half's size as fresh members
    double split_influx = 1.0;
    // when > 0, growth nodes get exactly this many sampled edges instead of
    // a full density sweep, leaving them weakly attached; each edge endpoint
    // is a previous-snapshot newcomer with probability churn_peer_bias
    // (regardless of block), a density-weighted member otherwise
    std::size_t churn_edges = 0;
    double churn_peer_bias = 0.0;
    std::vector<PlantedEvent> events;
    std::uint64_t seed = 1;
};

struct PlantedResult {
    EventLog log;
    // true_blocks[k] : node id -> block id, after snapshot k's changes
    std::vector<std::vector<std::pair<NodeId, std::int32_t>>> true_blocks;
    std::vector<Timestamp> snapshot_cuts;
};

PlantedResult generate_planted(const PlantedScript& script, std::size_t snapshots,
                               std::int64_t cadence_days);

// Two growth networks merged at merge_day; post-merge edges drawn per class
// at daily rates. A duplicate_fraction of B users goes silent at the merge.
struct TwoNetworkConfig {
    GrowthConfig network_a;
    GrowthConfig network_b;
    std::int64_t merge_day = 0;  // also the pre-merge growth horizon
    std::int64_t days_after = 100;
    double internal_per_day = 50;  // per network
    double external_per_day = 10;
    double new_per_day = 5;
    double new_growth = 1.0;  // daily factor applied to new_per_day
    double duplicate_fraction = 0.0;
    std::uint64_t seed = 1;
};

struct TwoNetworkTruth {
    std::size_t users_a = 0;
    std::size_t users_b = 0;
    std::size_t planted_duplicates_b = 0;
    std::vector<NodeId> duplicate_ids;  // the silenced B users
    std::string to_json() const;
};

struct TwoNetworkResult {
    EventLog log;
    TwoNetworkTruth truth;
};

TwoNetworkResult generate_two_network(const TwoNetworkConfig& config);

// Serializes a log back to the ingestion line format.
void write_event_log(const std::string& path, const EventLog& log);

}  // namespace dgl
