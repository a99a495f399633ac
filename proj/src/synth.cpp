#include "dgl/synth.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "dgl/io.hpp"
#include "dgl/powerlaw.hpp"
#include "dgl/rng.hpp"

namespace dgl {

namespace {

// Fenwick tree over per-node attachment weights; supports logarithmic
// weighted draws so multi-million-edge runs stay cheap.
class WeightTree {
public:
    void push(double w) {
        // an appended slot at 1-based position p covers (p - lowbit(p), p]
        std::size_t p = tree_.size() + 1;
        std::size_t low = p & (~p + 1);
        tree_.push_back(prefix(p - 1) - prefix(p - low));
        add(p - 1, w);
    }
    double prefix(std::size_t count) const {
        double s = 0.0;
        for (; count > 0; count -= count & (~count + 1)) s += tree_[count - 1];
        return s;
    }
    void add(std::size_t i, double delta) {
        total_ += delta;
        for (i++; i <= tree_.size(); i += i & (~i + 1)) tree_[i - 1] += delta;
    }
    double total() const { return total_; }
    // index with cumulative weight containing x in [0, total)
    std::size_t find(double x) const {
        std::size_t pos = 0, mask = bit_floor_();
        for (; mask > 0; mask >>= 1) {
            std::size_t next = pos + mask;
            if (next <= tree_.size() && tree_[next - 1] <= x) {
                x -= tree_[next - 1];
                pos = next;
            }
        }
        return pos;
    }

private:
    std::size_t bit_floor_() const {
        std::size_t m = 1;
        while (m * 2 <= tree_.size()) m *= 2;
        return m;
    }
    std::vector<double> tree_;
    double total_ = 0.0;
};

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

double unit_uniform(std::uint64_t& state) {
    state = mix64(state + 0x9e3779b97f4a7c15ULL);
    return static_cast<double>(state >> 11) * 0x1.0p-53;
}

std::uint64_t pair_key(NodeId a, NodeId b) {
    auto [lo, hi] = std::minmax(a, b);
    return static_cast<std::uint64_t>(lo) * 0x1f123bb5ULL ^
           (static_cast<std::uint64_t>(hi) << 1) ^ mix64(static_cast<std::uint64_t>(hi) + 77);
}

std::int64_t poisson_draw(double mean, Rng& rng) {
    if (mean <= 0) return 0;
    if (mean > 500) {  // normal approximation for large means
        std::normal_distribution<double> norm(mean, std::sqrt(mean));
        return std::max<std::int64_t>(0, std::llround(norm(rng)));
    }
    std::poisson_distribution<std::int64_t> pois(mean);
    return pois(rng);
}

}  // namespace

std::int64_t sample_zeta(double gamma, std::uint64_t& state) {
    // inverse CDF on a table covering all but ~1e-9 of the mass, with a
    // Pareto-tail fallback beyond it
    struct Table {
        double gamma;
        std::vector<double> cdf;
    };
    thread_local Table table{0.0, {}};
    constexpr std::size_t kTable = 1 << 20;
    if (table.gamma != gamma) {
        table.gamma = gamma;
        table.cdf.resize(kTable);
        double z = hurwitz_zeta(gamma, 1);
        double acc = 0.0;
        for (std::size_t k = 1; k <= kTable; k++) {
            acc += std::pow(static_cast<double>(k), -gamma) / z;
            table.cdf[k - 1] = acc;
        }
    }
    double u = unit_uniform(state);
    if (u >= table.cdf.back()) {
        // continuous Pareto tail beyond the table
        double tail_u = (u - table.cdf.back()) / (1.0 - table.cdf.back());
        double x = static_cast<double>(kTable) * std::pow(1.0 - tail_u, -1.0 / (gamma - 1.0));
        return static_cast<std::int64_t>(std::min(x, 1e15));
    }
    auto it = std::lower_bound(table.cdf.begin(), table.cdf.end(), u);
    return static_cast<std::int64_t>(it - table.cdf.begin()) + 1;
}

std::string GrowthTruth::to_json() const {
    std::ostringstream os;
    os << "{\"nodes\":" << nodes << ",\"edges\":" << edges << ",\"pa_edges\":" << pa_edges
       << ",\"random_edges\":" << random_edges << "}";
    return os.str();
}

GrowthResult generate_growth(const GrowthConfig& config) {
    if (config.growth_factor <= 1.0 || config.edges_per_new_node < 1 || config.initial_nodes < 2 ||
        config.beta0 < 0.0)
        throw std::runtime_error("invalid growth config");

    Rng rng(split_seed(config.seed, "growth"));
    std::uint64_t zeta_state = split_seed(config.seed, "growth/zeta");

    std::vector<Event> events;
    std::vector<std::int64_t> degree;
    WeightTree weights;
    std::unordered_set<std::uint64_t> edge_set;
    GrowthTruth truth;

    // (next activity time, node); min-heap
    using Activity = std::pair<Timestamp, NodeId>;
    std::priority_queue<Activity, std::vector<Activity>, std::greater<>> activities;
    Timestamp horizon = static_cast<Timestamp>(config.days) * kSecondsPerDay;

    auto beta_at = [&](std::size_t n) {
        double b = config.beta0 * std::pow(static_cast<double>(n), -config.beta_eta);
        return std::clamp(b, 0.0, 1.0);
    };

    auto schedule_activity = [&](NodeId n, Timestamp from) {
        if (!config.activity) return;
        Timestamp next = from + sample_zeta(config.gamma, zeta_state) * config.gap_unit;
        if (next < horizon) activities.emplace(next, n);
    };

    auto add_node = [&](Timestamp t) {
        NodeId id = static_cast<NodeId>(degree.size());
        degree.push_back(0);
        weights.push(0.0);
        truth.activity_edges_per_node.push_back(0);
        events.push_back({t, EventKind::NodeCreate, id, 0, -1});
        schedule_activity(id, t);
        return id;
    };

    auto pick_destination = [&](NodeId src, Timestamp, bool& used_pa) -> NodeId {
        std::size_t n = degree.size();
        for (int attempt = 0; attempt < 64; attempt++) {
            bool pa = unit_uniform(zeta_state) < beta_at(n) && weights.total() > 0.5;
            NodeId dst;
            if (pa) {
                std::uniform_real_distribution<double> unif(0.0, weights.total());
                dst = static_cast<NodeId>(weights.find(unif(rng)));
            } else {
                std::uniform_int_distribution<NodeId> unif(0, static_cast<NodeId>(n) - 1);
                dst = unif(rng);
            }
            if (dst == src) continue;
            if (edge_set.count(pair_key(src, dst))) continue;
            used_pa = pa;
            return dst;
        }
        return -1;  // dense neighborhood, give up on this edge
    };

    auto add_edge = [&](NodeId src, Timestamp t) -> bool {
        bool used_pa = false;
        NodeId dst = pick_destination(src, t, used_pa);
        if (dst < 0) return false;
        edge_set.insert(pair_key(src, dst));
        events.push_back({t, EventKind::EdgeCreate, src, dst, -1});
        degree[src]++;
        degree[dst]++;
        weights.add(static_cast<std::size_t>(src), 1.0);
        weights.add(static_cast<std::size_t>(dst), 1.0);
        truth.edge_used_pa.push_back(used_pa ? 1 : 0);
        (used_pa ? truth.pa_edges : truth.random_edges)++;
        return true;
    };

    auto drain_activities = [&](Timestamp upto) {
        while (!activities.empty() && activities.top().first <= upto) {
            if (config.max_edges && truth.edge_used_pa.size() >= config.max_edges) return;
            auto [t, n] = activities.top();
            activities.pop();
            if (add_edge(n, t)) truth.activity_edges_per_node[n]++;
            schedule_activity(n, t);
        }
    };

    // day 0 seed graph: a random recursive tree keeps it connected
    for (int i = 0; i < config.initial_nodes; i++) {
        NodeId id = add_node(0);
        if (id > 0) {
            std::uniform_int_distribution<NodeId> unif(0, id - 1);
            NodeId dst = unif(rng);
            edge_set.insert(pair_key(id, dst));
            events.push_back({0, EventKind::EdgeCreate, id, dst, -1});
            degree[id]++;
            degree[dst]++;
            weights.add(static_cast<std::size_t>(id), 1.0);
            weights.add(static_cast<std::size_t>(dst), 1.0);
            truth.edge_used_pa.push_back(0);
            truth.random_edges++;
        }
    }

    double expected_nodes = static_cast<double>(config.initial_nodes);
    for (int day = 1; day < config.days; day++) {
        if (config.max_edges && truth.edge_used_pa.size() >= config.max_edges) break;
        double prev = expected_nodes;
        expected_nodes *= config.growth_factor;
        std::int64_t arrivals = poisson_draw(expected_nodes - prev, rng);
        std::vector<Timestamp> times(arrivals);
        for (auto& t : times)
            t = static_cast<Timestamp>(day) * kSecondsPerDay +
                static_cast<Timestamp>(rng() % kSecondsPerDay);
        std::sort(times.begin(), times.end());
        for (Timestamp t : times) {
            drain_activities(t);
            if (config.max_edges && truth.edge_used_pa.size() >= config.max_edges) break;
            NodeId id = add_node(t);
            for (int e = 0; e < config.edges_per_new_node; e++) add_edge(id, t);
        }
        drain_activities(static_cast<Timestamp>(day + 1) * kSecondsPerDay - 1);
    }

    truth.nodes = degree.size();
    truth.edges = truth.edge_used_pa.size();

    GrowthResult result;
    result.log = finalize_log(std::move(events), IngestMode::Strict);
    result.truth = std::move(truth);
    return result;
}

PlantedResult generate_planted(const PlantedScript& script, std::size_t snapshots,
                               std::int64_t cadence_days) {
    if (script.block_sizes.empty() || script.p_in <= script.p_out || script.p_out <= 0)
        throw std::runtime_error("invalid planted script");
    for (const auto& ev : script.events)
        if (ev.at_snapshot >= snapshots)
            throw std::runtime_error("scheduled event outside day range");

    Rng rng(split_seed(script.seed, "planted"));
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::vector<Event> events;
    std::vector<std::int32_t> block_of;  // per node id
    std::unordered_set<std::uint64_t> edge_set;
    std::int32_t n_blocks = static_cast<std::int32_t>(script.block_sizes.size());

    auto day_time = [&](std::size_t snap, int seq) {
        return static_cast<Timestamp>(snap) * cadence_days * kSecondsPerDay + seq % kSecondsPerDay;
    };

    auto add_node = [&](std::int32_t block, Timestamp t) {
        NodeId id = static_cast<NodeId>(block_of.size());
        block_of.push_back(block);
        events.push_back({t, EventKind::NodeCreate, id, 0, -1});
        return id;
    };
    auto try_edge = [&](NodeId a, NodeId b, Timestamp t) {
        if (a == b) return;
        auto key = pair_key(a, b);
        if (edge_set.count(key)) return;
        edge_set.insert(key);
        events.push_back({t, EventKind::EdgeCreate, a, b, -1});
    };
    auto density = [&](std::int32_t ba, std::int32_t bb) {
        return ba == bb ? script.p_in : script.p_out;
    };
    // connect one new node to all existing per the block densities
    auto wire_new_node = [&](NodeId id, Timestamp t) {
        for (NodeId other = 0; other < static_cast<NodeId>(block_of.size()); other++) {
            if (other == id) continue;
            if (unif(rng) < density(block_of[id], block_of[other])) try_edge(id, other, t);
        }
    };

    // previous snapshot's newcomers; targets for peer-biased weak wiring
    std::vector<NodeId> recent;
    auto wire_churn_node = [&](NodeId id, Timestamp t) {
        std::size_t placed = 0;
        for (int attempt = 0; attempt < 4000 && placed < script.churn_edges; attempt++) {
            NodeId other;
            if (!recent.empty() && unif(rng) < script.churn_peer_bias) {
                other = recent[static_cast<std::size_t>(rng()) % recent.size()];
            } else {
                other = static_cast<NodeId>(static_cast<std::size_t>(rng()) % block_of.size());
                // rejection keeps the block-density contrast of the sweep
                if (unif(rng) >= density(block_of[id], block_of[other]) / script.p_in) continue;
            }
            if (other == id) continue;
            std::size_t before = edge_set.size();
            try_edge(id, other, t);
            if (edge_set.size() > before) placed++;
        }
    };

    PlantedResult result;

    // snapshot 0: initial blocks, full pairwise sampling
    for (std::int32_t b = 0; b < n_blocks; b++)
        for (std::size_t i = 0; i < script.block_sizes[b]; i++) add_node(b, 0);
    for (NodeId u = 0; u < static_cast<NodeId>(block_of.size()); u++)
        for (NodeId v = u + 1; v < static_cast<NodeId>(block_of.size()); v++)
            if (unif(rng) < density(block_of[u], block_of[v])) try_edge(u, v, 0);

    auto record_truth = [&](std::size_t snap) {
        std::vector<std::pair<NodeId, std::int32_t>> truth;
        for (NodeId n = 0; n < static_cast<NodeId>(block_of.size()); n++)
            truth.emplace_back(n, block_of[n]);
        result.true_blocks.push_back(std::move(truth));
        result.snapshot_cuts.push_back(day_time(snap, 0) + kSecondsPerDay - 1);
    };
    record_truth(0);

    for (std::size_t snap = 1; snap < snapshots; snap++) {
        int seq = 0;
        Timestamp t = day_time(snap, seq);
        std::vector<NodeId> added;

        for (const auto& ev : script.events) {
            if (ev.at_snapshot != snap) continue;
            if (ev.kind == PlantedEvent::MergeBlocks) {
                // relabel, then top up former cross pairs to p_in
                std::vector<NodeId> a_nodes, b_nodes;
                for (NodeId n = 0; n < static_cast<NodeId>(block_of.size()); n++) {
                    if (block_of[n] == static_cast<std::int32_t>(ev.block_a)) a_nodes.push_back(n);
                    if (block_of[n] == static_cast<std::int32_t>(ev.block_b)) b_nodes.push_back(n);
                }
                double top_up = (script.p_in - script.p_out) / (1.0 - script.p_out);
                for (NodeId u : a_nodes)
                    for (NodeId v : b_nodes)
                        if (!edge_set.count(pair_key(u, v)) && unif(rng) < top_up)
                            try_edge(u, v, t);
                for (NodeId n : b_nodes) block_of[n] = static_cast<std::int32_t>(ev.block_a);
            } else {
                // split: move a tail fraction to a fresh block, then dilute
                // the halves' cross density with fresh members
                std::vector<NodeId> members;
                for (NodeId n = 0; n < static_cast<NodeId>(block_of.size()); n++)
                    if (block_of[n] == static_cast<std::int32_t>(ev.block_a)) members.push_back(n);
                std::int32_t fresh = n_blocks++;
                auto keep = static_cast<std::size_t>(std::round(ev.ratio * members.size()));
                for (std::size_t i = keep; i < members.size(); i++) block_of[members[i]] = fresh;
                for (std::int32_t half : {static_cast<std::int32_t>(ev.block_a), fresh}) {
                    std::size_t half_size =
                        half == fresh ? members.size() - keep : keep;
                    auto influx = static_cast<std::size_t>(
                        std::round(script.split_influx * static_cast<double>(half_size)));
                    for (std::size_t i = 0; i < influx; i++)
                        wire_new_node(add_node(half, t), t);
                }
            }
        }

        // churn: steady growth so consecutive snapshots differ
        for (std::int32_t b = 0; b < n_blocks; b++) {
            bool active = false;
            for (auto bb : block_of)
                if (bb == b) {
                    active = true;
                    break;
                }
            if (!active) continue;
            for (std::size_t i = 0; i < script.growth_per_snapshot; i++) {
                NodeId id = add_node(b, t);
                if (script.churn_edges > 0)
                    wire_churn_node(id, t);
                else
                    wire_new_node(id, t);
                added.push_back(id);
            }
        }
        recent = std::move(added);
        record_truth(snap);
    }

    result.log = finalize_log(std::move(events), IngestMode::Strict);
    return result;
}

std::string TwoNetworkTruth::to_json() const {
    std::ostringstream os;
    os << "{\"users_a\":" << users_a << ",\"users_b\":" << users_b
       << ",\"planted_duplicates_b\":" << planted_duplicates_b << "}";
    return os.str();
}

TwoNetworkResult generate_two_network(const TwoNetworkConfig& config) {
    if (config.internal_per_day < 0 || config.external_per_day < 0 || config.new_per_day < 0 ||
        config.duplicate_fraction < 0 || config.duplicate_fraction >= 1)
        throw std::runtime_error("invalid two-network config");

    GrowthConfig ga = config.network_a;
    GrowthConfig gb = config.network_b;
    ga.days = static_cast<int>(config.merge_day);
    gb.days = static_cast<int>(config.merge_day);
    auto a = generate_growth(ga);
    auto b = generate_growth(gb);

    constexpr NodeId kOffsetB = 1'000'000'000;
    constexpr NodeId kOffsetNew = 2'000'000'000;

    std::vector<Event> events;
    std::vector<NodeId> users_a, users_b;
    std::unordered_set<std::uint64_t> edge_set;
    std::int16_t net_a = 0, net_b = 1;

    for (const Event& ev : a.log.events) {
        Event e = ev;
        e.network = net_a;
        events.push_back(e);
        if (ev.kind == EventKind::NodeCreate) users_a.push_back(ev.u);
        else edge_set.insert(pair_key(ev.u, ev.v));
    }
    for (const Event& ev : b.log.events) {
        Event e = ev;
        e.u += kOffsetB;
        if (ev.kind == EventKind::EdgeCreate) {
            e.v += kOffsetB;
            edge_set.insert(pair_key(e.u, e.v));
        } else {
            users_b.push_back(e.u);
        }
        e.network = net_b;
        events.push_back(e);
    }

    Rng rng(split_seed(config.seed, "two_network"));
    TwoNetworkTruth truth;
    truth.users_a = users_a.size();
    truth.users_b = users_b.size();

    // planted duplicates: silent B users from the merge on
    std::vector<NodeId> live_b = users_b;
    std::shuffle(live_b.begin(), live_b.end(), rng);
    auto n_dup = static_cast<std::size_t>(
        std::round(config.duplicate_fraction * static_cast<double>(live_b.size())));
    truth.planted_duplicates_b = n_dup;
    truth.duplicate_ids.assign(live_b.begin(), live_b.begin() + static_cast<std::ptrdiff_t>(n_dup));
    live_b.erase(live_b.begin(), live_b.begin() + static_cast<std::ptrdiff_t>(n_dup));

    std::vector<NodeId> new_users;
    NodeId next_new = kOffsetNew;
    auto pick = [&](const std::vector<NodeId>& pool) {
        std::uniform_int_distribution<std::size_t> unif(0, pool.size() - 1);
        return pool[unif(rng)];
    };
    auto try_edge = [&](NodeId u, NodeId v, Timestamp t) -> bool {
        if (u == v) return false;
        auto key = pair_key(u, v);
        if (edge_set.count(key)) return false;
        edge_set.insert(key);
        events.push_back({t, EventKind::EdgeCreate, u, v, -1});
        return true;
    };

    double new_rate = config.new_per_day;
    for (std::int64_t day = 0; day < config.days_after; day++) {
        Timestamp base = (config.merge_day + day) * kSecondsPerDay;
        auto stamp = [&]() {
            return base + static_cast<Timestamp>(rng() % kSecondsPerDay);
        };
        for (std::int64_t i = poisson_draw(config.internal_per_day, rng); i > 0; i--)
            try_edge(pick(users_a), pick(users_a), stamp());
        for (std::int64_t i = poisson_draw(config.internal_per_day, rng); i > 0; i--)
            try_edge(pick(live_b), pick(live_b), stamp());
        for (std::int64_t i = poisson_draw(config.external_per_day, rng); i > 0; i--)
            try_edge(pick(users_a), pick(live_b), stamp());
        for (std::int64_t i = poisson_draw(new_rate, rng); i > 0; i--) {
            Timestamp t = stamp();
            // half the to-new edges mint a fresh user, the rest reuse one
            NodeId nu;
            if (new_users.empty() || (rng() & 1)) {
                nu = next_new++;
                events.push_back({t, EventKind::NodeCreate, nu, 0, -1});
                new_users.push_back(nu);
            } else {
                nu = pick(new_users);
            }
            NodeId other = (rng() & 1) ? pick(users_a) : pick(live_b);
            try_edge(nu, other, t);
        }
        new_rate *= config.new_growth;
    }

    TwoNetworkResult result;
    result.log = finalize_log(std::move(events), IngestMode::Lenient, {"A", "B"});
    result.truth = truth;
    return result;
}

void write_event_log(const std::string& path, const EventLog& log) {
    std::ostringstream os;
    for (const Event& ev : log.events) {
        os << ev.timestamp << ',';
        if (ev.kind == EventKind::NodeCreate)
            os << "N," << ev.u;
        else
            os << "E," << ev.u << ',' << ev.v;
        if (const auto* net = log.network_name(ev.network)) os << ',' << *net;
        os << '\n';
    }
    write_file_atomic(path, os.str());
}

}  // namespace dgl
