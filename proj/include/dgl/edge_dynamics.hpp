#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dgl/events.hpp"
#include "dgl/powerlaw.hpp"

namespace dgl {

enum class DestinationPolicy { HigherDegree, RandomEndpoint };

const char* policy_name(DestinationPolicy p);

// Per-node-age bucket of edge inter-arrival gaps with a power-law fit.
struct InterArrivalHistogram {
    std::int64_t bucket = 0;  // age-bucket index (bucket * width <= age < ...)
    std::vector<std::int64_t> gaps;
    double fitted_exponent = 0.0;
    double fit_error = 0.0;
    bool fit_valid = false;
};

// Edge probability p_e(d): edges over the window whose destination had
// degree d just before the edge, normalized by the summed per-step count of
// degree-d nodes.
struct DegreeProbabilityProfile {
    std::size_t at_edge_count = 0;
    DestinationPolicy policy = DestinationPolicy::HigherDegree;
    std::map<std::int64_t, double> pe;
    // raw Eq. pieces, kept for the estimator-exactness checks
    std::map<std::int64_t, std::int64_t> numerator;
    std::map<std::int64_t, std::int64_t> denominator;
};

struct AlphaFit {
    std::size_t at_edge_count = 0;
    DestinationPolicy policy = DestinationPolicy::HigherDegree;
    double alpha = 0.0;
    double mse = 0.0;  // linear-scale MSE of the fitted curve
};

struct AlphaSeries {
    std::vector<AlphaFit> higher_degree;
    std::vector<AlphaFit> random_endpoint;
};

// Consecutive gaps between each node's edge events, bucketed by the node's
// age at the later edge; a gap enters every bucket an endpoint's age selects
// (the either-endpoint rule double-counts across buckets by design).
std::vector<InterArrivalHistogram> inter_arrival_histogram(const EventLog& log,
                                                           Timestamp age_bucket_width);

// Normalized-lifetime activity: each qualifying node's edges mapped to
// (edge_time - join) / (last_edge_time - join), aggregated into equal bins.
// Returned histogram sums to 1. Throws when no node qualifies.
std::vector<double> lifetime_activity_profile(const EventLog& log, Timestamp min_history,
                                              std::size_t min_degree, std::size_t bins);

struct MinimalAgeSeries {
    std::vector<Timestamp> thresholds;
    // fractions[t][d] = fraction of day-d edges whose younger endpoint's age
    // at creation is <= thresholds[t]
    std::vector<std::vector<double>> fractions;
    std::vector<std::int64_t> edges_per_day;
};

MinimalAgeSeries minimal_age_attribution(const EventLog& log,
                                         const std::vector<Timestamp>& thresholds);

// Eq.-style edge probability over the window of edges ending at
// at_edge_count. HigherDegree resolves the undirected edge toward the
// higher-degree endpoint (seeded tie-break); RandomEndpoint picks uniformly.
DegreeProbabilityProfile edge_probability_profile(const EventLog& log, std::size_t at_edge_count,
                                                  DestinationPolicy policy, std::size_t window,
                                                  std::uint64_t seed);

// Least-squares fit of p_e(d) = c * d^alpha on log-log scale (zero entries
// excluded); MSE reported on the linear scale. Needs >= 5 populated degrees.
AlphaFit fit_alpha(const DegreeProbabilityProfile& profile);

// AlphaFit every `window` edges from start_edges, both policies over the
// same windows in a single replay pass.
AlphaSeries alpha_series(const EventLog& log, std::size_t window, std::size_t start_edges,
                         std::uint64_t seed);

void write_alpha_csv(const std::string& path, const AlphaSeries& series);
void write_profile_csv(const std::string& path, const DegreeProbabilityProfile& profile);
void write_interarrival_csv(const std::string& path,
                            const std::vector<InterArrivalHistogram>& hists);

}  // namespace dgl
