#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgl/snapshot.hpp"

namespace dgl {

enum class Metric {
    NewNodes,
    NewEdges,
    RelativeNodeGrowth,
    RelativeEdgeGrowth,
    AvgDegree,
    AvgPathLength,
    AvgClustering,
    Assortativity,
};

const char* metric_name(Metric m);

struct MetricPoint {
    std::int64_t day = 0;
    double value = 0.0;
    bool degenerate = false;  // zero-denominator / undefined point
};

struct MetricSeries {
    Metric metric;
    std::vector<MetricPoint> points;
};

struct GrowthSeries {
    MetricSeries new_nodes;
    MetricSeries new_edges;
    MetricSeries relative_node_growth;
    MetricSeries relative_edge_growth;
};

// Per-interval new node/edge counts and relative growth (new / previous
// cumulative size). Needs >= 2 snapshots; day indices are relative to t0.
GrowthSeries growth_series(const std::vector<Snapshot>& snapshots, Timestamp t0);

// 2m/n. Throws on an empty graph.
double avg_degree(const Snapshot& s);

// Mean local clustering coefficient over all nodes; degree-<2 nodes count 0
// when include_low_degree (the default), and are dropped from the mean
// otherwise.
double avg_clustering(const Snapshot& s, bool include_low_degree = true);
double avg_clustering_serial(const Snapshot& s, bool include_low_degree = true);

// Mean over sampled sources (uniform, without replacement, from the largest
// connected component) of the mean BFS distance to the rest of the component.
double avg_path_length(const Snapshot& s, std::size_t sample_size, std::uint64_t seed);
double avg_path_length_serial(const Snapshot& s, std::size_t sample_size, std::uint64_t seed);

// Pearson correlation of endpoint degrees over all edges, both orientations.
// Throws "undefined assortativity" on zero degree variance.
double assortativity(const Snapshot& s);

// Dense index members of the largest connected component.
std::vector<Snapshot::Index> largest_component(const Snapshot& s);

void write_metric_csv(const std::string& path, const std::vector<MetricSeries>& series);

}  // namespace dgl
