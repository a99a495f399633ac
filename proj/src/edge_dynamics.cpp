#include "dgl/edge_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "dgl/io.hpp"
#include "dgl/rng.hpp"

namespace dgl {

const char* policy_name(DestinationPolicy p) {
    return p == DestinationPolicy::HigherDegree ? "higher_degree" : "random_endpoint";
}

namespace {

// Dense node indexing for the whole log, built once per replay.
struct NodeIndex {
    std::unordered_map<NodeId, std::uint32_t> map;
    explicit NodeIndex(const EventLog& log) {
        map.reserve(log.events.size());
        std::uint32_t next = 0;
        for (const Event& ev : log.events)
            if (ev.kind == EventKind::NodeCreate) map.try_emplace(ev.u, next++);
    }
    std::uint32_t at(NodeId id) const { return map.at(id); }
    std::size_t size() const { return map.size(); }
};

// Degree state plus a lazily accumulated per-degree step sum: after a window
// of k edge observations, flushed sum[d] equals the sum over those k steps of
// the count of degree-d nodes just before each step.
class DegreeLedger {
public:
    explicit DegreeLedger(std::size_t nodes) : degree_(nodes, -1) {}

    std::int64_t degree(std::uint32_t n) const { return degree_[n]; }

    void add_node(std::uint32_t n) {
        touch(0);
        degree_[n] = 0;
        count_grow(0)++;
    }

    // One edge observation: the step counter advances before the edge's own
    // degree updates, so sums see the pre-edge state.
    void observe_step() { steps_++; }

    void add_edge(std::uint32_t a, std::uint32_t b) {
        for (std::uint32_t n : {a, b}) {
            std::int64_t d = degree_[n];
            touch(d);
            touch(d + 1);
            count_grow(d)--;
            count_grow(d + 1)++;
            degree_[n] = d + 1;
        }
    }

    std::int64_t count_at(std::int64_t d) const {
        return d < static_cast<std::int64_t>(count_.size()) ? count_[d] : 0;
    }

    // Flushes and returns the accumulated per-step counts, then restarts the
    // accumulation window.
    std::map<std::int64_t, std::int64_t> flush_window() {
        std::map<std::int64_t, std::int64_t> out;
        for (std::int64_t d = 0; d < static_cast<std::int64_t>(count_.size()); d++) {
            touch(d);
            if (sum_[d] > 0) out[d] = sum_[d];
            sum_[d] = 0;
        }
        steps_ = 0;
        std::fill(last_.begin(), last_.end(), 0);
        return out;
    }

private:
    void touch(std::int64_t d) {
        if (d >= static_cast<std::int64_t>(count_.size())) {
            count_.resize(d + 1, 0);
            sum_.resize(d + 1, 0);
            last_.resize(d + 1, 0);
        }
        sum_[d] += count_[d] * (steps_ - last_[d]);
        last_[d] = steps_;
    }

    std::int64_t& count_grow(std::int64_t d) { return count_[d]; }

    std::vector<std::int64_t> degree_;
    std::vector<std::int64_t> count_;
    std::vector<std::int64_t> sum_;
    std::vector<std::int64_t> last_;
    std::int64_t steps_ = 0;
};

std::int64_t pick_destination_degree(std::int64_t du, std::int64_t dv, DestinationPolicy policy,
                                     Rng& rng) {
    if (policy == DestinationPolicy::RandomEndpoint)
        return (rng() & 1) ? du : dv;
    if (du != dv) return std::max(du, dv);
    return du;  // tie: both endpoints have the same degree, choice is moot
}

DegreeProbabilityProfile make_profile(std::size_t at_edge_count, DestinationPolicy policy,
                                      std::map<std::int64_t, std::int64_t> numerator,
                                      std::map<std::int64_t, std::int64_t> denominator) {
    DegreeProbabilityProfile prof;
    prof.at_edge_count = at_edge_count;
    prof.policy = policy;
    prof.denominator = std::move(denominator);
    prof.numerator = std::move(numerator);
    for (auto [d, den] : prof.denominator) {
        auto it = prof.numerator.find(d);
        std::int64_t num = it == prof.numerator.end() ? 0 : it->second;
        prof.pe[d] = static_cast<double>(num) / static_cast<double>(den);
    }
    return prof;
}

}  // namespace

DegreeProbabilityProfile edge_probability_profile(const EventLog& log, std::size_t at_edge_count,
                                                  DestinationPolicy policy, std::size_t window,
                                                  std::uint64_t seed) {
    if (at_edge_count < window) throw std::runtime_error("at_edge_count < window");
    if (log.edge_count() < at_edge_count) throw std::runtime_error("log shorter than at_edge_count");

    NodeIndex idx(log);
    DegreeLedger ledger(idx.size());
    Rng rng(split_seed(seed, "edge_probability_profile"));
    std::map<std::int64_t, std::int64_t> numerator;

    std::size_t edge_no = 0;
    std::size_t window_start = at_edge_count - window;  // steps > window_start accumulate
    for (const Event& ev : log.events) {
        if (ev.kind == EventKind::NodeCreate) {
            ledger.add_node(idx.at(ev.u));
            continue;
        }
        edge_no++;
        if (edge_no > at_edge_count) break;
        auto a = idx.at(ev.u);
        auto b = idx.at(ev.v);
        if (edge_no == window_start + 1) ledger.flush_window();  // discard pre-window sums
        if (edge_no > window_start) {
            ledger.observe_step();
            numerator[pick_destination_degree(ledger.degree(a), ledger.degree(b), policy, rng)]++;
        }
        ledger.add_edge(a, b);
    }
    return make_profile(at_edge_count, policy, std::move(numerator), ledger.flush_window());
}

AlphaFit fit_alpha(const DegreeProbabilityProfile& profile) {
    // log-log least squares over populated degrees (d >= 1, p > 0)
    std::vector<double> lx, ly;
    for (auto [d, p] : profile.pe)
        if (d >= 1 && p > 0) {
            lx.push_back(std::log(static_cast<double>(d)));
            ly.push_back(std::log(p));
        }
    if (lx.size() < 5) throw std::runtime_error("fewer than 5 populated degrees");
    double n = static_cast<double>(lx.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); i++) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); i++) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    AlphaFit fit;
    fit.at_edge_count = profile.at_edge_count;
    fit.policy = profile.policy;
    fit.alpha = sxy / sxx;
    double logc = my - fit.alpha * mx;
    double c = std::exp(logc);
    double mse = 0;
    std::size_t cnt = 0;
    for (auto [d, p] : profile.pe) {
        if (d < 1 || p <= 0) continue;
        double fitted = c * std::pow(static_cast<double>(d), fit.alpha);
        mse += (p - fitted) * (p - fitted);
        cnt++;
    }
    fit.mse = mse / static_cast<double>(cnt);
    return fit;
}

AlphaSeries alpha_series(const EventLog& log, std::size_t window, std::size_t start_edges,
                         std::uint64_t seed) {
    if (start_edges < window) throw std::runtime_error("start_edges < window");
    NodeIndex idx(log);
    DegreeLedger ledger(idx.size());
    Rng rng(split_seed(seed, "alpha_series"));
    std::map<std::int64_t, std::int64_t> num_high, num_rand;
    AlphaSeries series;

    std::size_t edge_no = 0;
    std::size_t window_start = start_edges - window;
    for (const Event& ev : log.events) {
        if (ev.kind == EventKind::NodeCreate) {
            ledger.add_node(idx.at(ev.u));
            continue;
        }
        edge_no++;
        auto a = idx.at(ev.u);
        auto b = idx.at(ev.v);
        if (edge_no == window_start + 1) ledger.flush_window();
        if (edge_no > window_start) {
            ledger.observe_step();
            std::int64_t du = ledger.degree(a), dv = ledger.degree(b);
            num_high[pick_destination_degree(du, dv, DestinationPolicy::HigherDegree, rng)]++;
            num_rand[pick_destination_degree(du, dv, DestinationPolicy::RandomEndpoint, rng)]++;
        }
        ledger.add_edge(a, b);
        if (edge_no > window_start && (edge_no - window_start) % window == 0) {
            auto denom = ledger.flush_window();
            auto high = make_profile(edge_no, DestinationPolicy::HigherDegree,
                                     std::move(num_high), denom);
            auto rand = make_profile(edge_no, DestinationPolicy::RandomEndpoint,
                                     std::move(num_rand), std::move(denom));
            num_high.clear();
            num_rand.clear();
            try {
                series.higher_degree.push_back(fit_alpha(high));
                series.random_endpoint.push_back(fit_alpha(rand));
            } catch (const std::runtime_error&) {
                // window too sparse to fit; skip it in both series
            }
        }
    }
    return series;
}

std::vector<InterArrivalHistogram> inter_arrival_histogram(const EventLog& log,
                                                           Timestamp age_bucket_width) {
    NodeIndex idx(log);
    std::vector<Timestamp> join(idx.size(), -1);
    std::vector<Timestamp> last_edge(idx.size(), -1);
    std::map<std::int64_t, InterArrivalHistogram> buckets;

    auto record = [&](std::int64_t gap, Timestamp age) {
        std::int64_t b = age / age_bucket_width;
        auto [it, fresh] = buckets.try_emplace(b);
        if (fresh) it->second.bucket = b;
        it->second.gaps.push_back(gap);
    };

    for (const Event& ev : log.events) {
        if (ev.kind == EventKind::NodeCreate) {
            join[idx.at(ev.u)] = ev.timestamp;
            continue;
        }
        auto a = idx.at(ev.u);
        auto b = idx.at(ev.v);
        Timestamp age_a = ev.timestamp - join[a];
        Timestamp age_b = ev.timestamp - join[b];
        for (auto [n, other_age] : {std::pair(a, age_b), std::pair(b, age_a)}) {
            if (last_edge[n] >= 0) {
                std::int64_t gap = ev.timestamp - last_edge[n];
                Timestamp own_age = ev.timestamp - join[n];
                // either-endpoint rule: the gap lands in each distinct bucket
                // selected by the closing edge's endpoint ages
                record(gap, own_age);
                if (other_age / age_bucket_width != own_age / age_bucket_width)
                    record(gap, other_age);
            }
            last_edge[n] = ev.timestamp;
        }
    }

    std::vector<InterArrivalHistogram> out;
    for (auto& [b, hist] : buckets) {
        try {
            auto fit = fit_power_law(hist.gaps, 1);
            if (!fit.degenerate) {
                hist.fitted_exponent = fit.exponent;
                hist.fit_error = fit.ks_distance;
                hist.fit_valid = true;
            }
        } catch (const std::runtime_error&) {
            // too few samples in this bucket
        }
        out.push_back(std::move(hist));
    }
    return out;
}

std::vector<double> lifetime_activity_profile(const EventLog& log, Timestamp min_history,
                                              std::size_t min_degree, std::size_t bins) {
    if (bins < 2) throw std::runtime_error("bins must be >= 2");
    NodeIndex idx(log);
    std::vector<Timestamp> join(idx.size(), -1);
    std::vector<std::vector<Timestamp>> edge_times(idx.size());

    for (const Event& ev : log.events) {
        if (ev.kind == EventKind::NodeCreate) {
            join[idx.at(ev.u)] = ev.timestamp;
        } else {
            edge_times[idx.at(ev.u)].push_back(ev.timestamp);
            edge_times[idx.at(ev.v)].push_back(ev.timestamp);
        }
    }

    std::vector<double> hist(bins, 0.0);
    double total = 0;
    for (std::size_t n = 0; n < edge_times.size(); n++) {
        const auto& times = edge_times[n];
        if (times.size() < min_degree) continue;
        Timestamp span = times.back() - join[n];
        if (span < min_history) continue;
        for (Timestamp t : times) {
            double x = static_cast<double>(t - join[n]) / static_cast<double>(span);
            auto bin = std::min(bins - 1, static_cast<std::size_t>(x * static_cast<double>(bins)));
            hist[bin] += 1.0;
            total += 1.0;
        }
    }
    if (total == 0) throw std::runtime_error("no qualifying node");
    for (double& h : hist) h /= total;
    return hist;
}

MinimalAgeSeries minimal_age_attribution(const EventLog& log,
                                         const std::vector<Timestamp>& thresholds) {
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw std::runtime_error("thresholds must be ascending");
    NodeIndex idx(log);
    std::vector<Timestamp> join(idx.size(), -1);
    Timestamp t0 = log.first_time();
    std::int64_t days = log.day_of(log.last_time()) + 1;

    MinimalAgeSeries out;
    out.thresholds = thresholds;
    out.fractions.assign(thresholds.size(), std::vector<double>(days, 0.0));
    out.edges_per_day.assign(days, 0);

    for (const Event& ev : log.events) {
        if (ev.kind == EventKind::NodeCreate) {
            join[idx.at(ev.u)] = ev.timestamp;
            continue;
        }
        std::int64_t day = (ev.timestamp - t0) / kSecondsPerDay;
        Timestamp min_age = std::min(ev.timestamp - join[idx.at(ev.u)],
                                     ev.timestamp - join[idx.at(ev.v)]);
        out.edges_per_day[day]++;
        for (std::size_t t = 0; t < thresholds.size(); t++)
            if (min_age <= thresholds[t]) out.fractions[t][day] += 1.0;
    }
    for (std::int64_t d = 0; d < days; d++) {
        if (out.edges_per_day[d] == 0) continue;
        for (auto& f : out.fractions) f[d] /= static_cast<double>(out.edges_per_day[d]);
    }
    return out;
}

void write_alpha_csv(const std::string& path, const AlphaSeries& series) {
    CsvWriter csv(path);
    csv.row("edge_count,policy,alpha,mse");
    auto emit = [&](const std::vector<AlphaFit>& fits) {
        for (const auto& f : fits)
            csv.row(std::to_string(f.at_edge_count) + "," + policy_name(f.policy) + "," +
                    format_double(f.alpha) + "," + format_double(f.mse));
    };
    emit(series.higher_degree);
    emit(series.random_endpoint);
    csv.commit();
}

void write_profile_csv(const std::string& path, const DegreeProbabilityProfile& profile) {
    CsvWriter csv(path);
    csv.row("degree,pe");
    for (auto [d, p] : profile.pe)
        csv.row(std::to_string(d) + "," + format_double(p));
    csv.commit();
}

void write_interarrival_csv(const std::string& path,
                            const std::vector<InterArrivalHistogram>& hists) {
    CsvWriter csv(path);
    csv.row("bucket,samples,exponent,ks");
    for (const auto& h : hists) {
        if (h.fit_valid)
            csv.row(std::to_string(h.bucket) + "," + std::to_string(h.gaps.size()) + "," +
                    format_double(h.fitted_exponent) + "," + format_double(h.fit_error));
        else
            csv.row(std::to_string(h.bucket) + "," + std::to_string(h.gaps.size()) + ",,");
    }
    csv.commit();
}

}  // namespace dgl
