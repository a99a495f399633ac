#include "dgl/louvain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "dgl/rng.hpp"

namespace dgl {

std::int32_t CommunityPartition::community_count() const {
    std::unordered_set<std::int32_t> ids;
    for (auto& [n, c] : assignment) ids.insert(c);
    return static_cast<std::int32_t>(ids.size());
}

std::unordered_map<std::int32_t, std::vector<NodeId>> CommunityPartition::members() const {
    std::unordered_map<std::int32_t, std::vector<NodeId>> out;
    for (auto& [n, c] : assignment) out[c].push_back(n);
    return out;
}

double modularity(const Snapshot& s, const std::unordered_map<NodeId, std::int32_t>& assignment) {
    double m = static_cast<double>(s.edge_count());
    if (m == 0) return 0.0;
    std::unordered_map<std::int32_t, double> intra, deg;
    for (Snapshot::Index u = 0; u < s.node_count(); u++) {
        std::int32_t cu = assignment.at(s.external_id(u));
        deg[cu] += static_cast<double>(s.degree(u));
        for (auto v : s.neighbors(u)) {
            if (v < u) continue;  // count each edge once
            if (assignment.at(s.external_id(v)) == cu) intra[cu] += 1.0;
        }
    }
    double q = 0.0;
    for (auto& [c, d] : deg) q += intra[c] / m - (d / (2.0 * m)) * (d / (2.0 * m));
    return q;
}

namespace {

// Weighted multigraph for the aggregation levels. Self-loop weight stored
// once in `self`; `ki` is the modularity degree (adjacent weight + 2*self).
struct LevelGraph {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
    std::vector<double> self;
    std::vector<double> ki;
    double m = 0.0;  // total edge weight, each edge once

    std::size_t size() const { return adj.size(); }
};

struct LocalMoveResult {
    std::vector<std::int32_t> community;  // dense per-node labels
    double gain = 0.0;
    std::int32_t n_comms = 0;
};

LocalMoveResult local_moves(const LevelGraph& g, double delta, Rng& rng,
                            std::vector<std::int32_t> community) {
    std::size_t n = g.size();
    std::vector<double> tot(n, 0.0);  // sum of ki per community
    std::vector<std::int32_t> comm_size(n, 0);
    for (std::size_t i = 0; i < n; i++) {
        tot[community[i]] += g.ki[i];
        comm_size[community[i]]++;
    }
    // labels not used by the incoming assignment; isolating a node moves it
    // into one of these so a warm-started community can break apart
    std::vector<std::int32_t> free_labels;
    for (std::int32_t c = static_cast<std::int32_t>(n) - 1; c >= 0; c--)
        if (comm_size[c] == 0) free_labels.push_back(c);

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<double> weight_to(n, 0.0);
    std::vector<std::int32_t> touched;
    double total_gain = 0.0;
    double m = g.m;

    while (true) {
        double pass_gain = 0.0;
        for (auto i : order) {
            std::int32_t ci = community[i];
            touched.clear();
            for (auto [j, w] : g.adj[i]) {
                std::int32_t cj = community[j];
                if (weight_to[cj] == 0.0) touched.push_back(cj);
                weight_to[cj] += w;
            }
            double ki = g.ki[i];
            double stay = weight_to[ci] / m - ki * (tot[ci] - ki) / (2.0 * m * m);
            double best_gain = stay;
            std::int32_t best = ci;
            for (auto c : touched) {
                if (c == ci) continue;
                double gain = weight_to[c] / m - ki * tot[c] / (2.0 * m * m);
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best = c;
                }
            }
            bool isolate = false;
            if (comm_size[ci] > 1 && !free_labels.empty() && 0.0 > best_gain + 1e-12) {
                best = free_labels.back();
                best_gain = 0.0;
                isolate = true;
            }
            if (best != ci) {
                tot[ci] -= ki;
                tot[best] += ki;
                comm_size[ci]--;
                comm_size[best]++;
                if (isolate) free_labels.pop_back();
                if (comm_size[ci] == 0) free_labels.push_back(ci);
                community[i] = best;
                pass_gain += best_gain - stay;
            }
            for (auto c : touched) weight_to[c] = 0.0;
        }
        total_gain += pass_gain;
        if (pass_gain < delta) break;
    }

    // compact labels
    std::vector<std::int32_t> remap(n, -1);
    std::int32_t next = 0;
    for (std::size_t i = 0; i < n; i++) {
        if (remap[community[i]] < 0) remap[community[i]] = next++;
        community[i] = remap[community[i]];
    }
    return {std::move(community), total_gain, next};
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<std::int32_t>& community,
                     std::int32_t n_comms) {
    LevelGraph out;
    out.adj.resize(n_comms);
    out.self.assign(n_comms, 0.0);
    out.ki.assign(n_comms, 0.0);
    out.m = g.m;
    std::vector<std::unordered_map<std::uint32_t, double>> acc(n_comms);
    for (std::size_t i = 0; i < g.size(); i++) {
        std::int32_t ci = community[i];
        out.self[ci] += g.self[i];
        for (auto [j, w] : g.adj[i]) {
            std::int32_t cj = community[j];
            if (ci == cj) {
                if (j > i) out.self[ci] += w;
            } else {
                acc[ci][static_cast<std::uint32_t>(cj)] += w;
            }
        }
    }
    for (std::int32_t c = 0; c < n_comms; c++) {
        out.adj[c].assign(acc[c].begin(), acc[c].end());
        std::sort(out.adj[c].begin(), out.adj[c].end());
        double adj_w = 0.0;
        for (auto [j, w] : out.adj[c]) adj_w += w;
        out.ki[c] = adj_w + 2.0 * out.self[c];
    }
    return out;
}

}  // namespace

double jaccard(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    if (a.empty() && b.empty()) return 0.0;
    std::unordered_set<NodeId> sa(a.begin(), a.end());
    std::size_t inter = 0;
    for (auto x : b)
        if (sa.count(x)) inter++;
    std::size_t uni = sa.size() + b.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

CommunityPartition louvain(const Snapshot& s, double delta, std::uint64_t seed,
                           const CommunityPartition* init) {
    if (s.node_count() == 0) throw std::runtime_error("louvain on empty snapshot");
    if (delta <= 0) throw std::runtime_error("delta must be positive");
    std::size_t n = s.node_count();

    LevelGraph g;
    g.adj.resize(n);
    g.self.assign(n, 0.0);
    g.ki.assign(n, 0.0);
    for (Snapshot::Index u = 0; u < n; u++) {
        g.adj[u].reserve(s.degree(u));
        for (auto v : s.neighbors(u)) g.adj[u].emplace_back(v, 1.0);
        g.ki[u] = static_cast<double>(s.degree(u));
    }
    g.m = static_cast<double>(s.edge_count());

    // level-0 labels: init assignment where given, singletons elsewhere
    std::vector<std::int32_t> labels(n);
    if (init) {
        std::unordered_map<std::int32_t, std::int32_t> remap;
        std::int32_t next = 0;
        for (Snapshot::Index u = 0; u < n; u++) {
            auto it = init->assignment.find(s.external_id(u));
            if (it == init->assignment.end()) {
                labels[u] = next++;
            } else {
                auto [rit, fresh] = remap.try_emplace(it->second, next);
                if (fresh) next++;
                labels[u] = rit->second;
            }
        }
        // labels may exceed n only if init ids collide; compact below handles it
    } else {
        std::iota(labels.begin(), labels.end(), 0);
    }

    Rng rng(seed);
    std::vector<std::int32_t> node_to_comm = labels;  // cumulative node -> top-level community

    if (g.m == 0) {
        CommunityPartition part;
        part.delta = delta;
        for (Snapshot::Index u = 0; u < n; u++) part.assignment[s.external_id(u)] = node_to_comm[u];
        part.modularity = 0.0;
        return part;
    }

    LevelGraph cur = std::move(g);
    std::vector<std::int32_t> cur_labels = labels;
    bool first_level = true;
    while (true) {
        auto res = local_moves(cur, delta, rng,
                               first_level ? cur_labels
                                           : [&] {
                                                 std::vector<std::int32_t> singles(cur.size());
                                                 std::iota(singles.begin(), singles.end(), 0);
                                                 return singles;
                                             }());
        // fold level assignment into the cumulative node mapping
        if (first_level) {
            for (std::size_t u = 0; u < n; u++) node_to_comm[u] = res.community[u];
        } else {
            for (std::size_t u = 0; u < n; u++) node_to_comm[u] = res.community[node_to_comm[u]];
        }
        if (res.gain < delta || static_cast<std::size_t>(res.n_comms) == cur.size()) break;
        cur = aggregate(cur, res.community, res.n_comms);
        first_level = false;
    }

    CommunityPartition part;
    part.delta = delta;
    for (Snapshot::Index u = 0; u < n; u++) part.assignment[s.external_id(u)] = node_to_comm[u];
    part.modularity = modularity(s, part.assignment);

    // warm starts can pin the search in a stale local optimum (single-node
    // moves cannot break a community in two); run a cold pass as well and
    // take it when it is clearly better. The margin keeps temporal
    // continuity: a restart that beats the warm partition only by greedy
    // noise should not reshuffle community ids between snapshots.
    if (init) {
        constexpr double kColdMargin = 0.005;
        auto cold = louvain(s, delta, seed ^ 0x9e3779b97f4a7c15ULL, nullptr);
        if (cold.modularity > part.modularity + kColdMargin) part = std::move(cold);
    }

    // zero-delta idempotence: if the grouping matches init exactly, keep
    // init's community ids so callers see the partition unchanged
    if (init && init->assignment.size() == part.assignment.size()) {
        std::unordered_map<std::int32_t, std::int32_t> fwd;  // ours -> init's
        std::unordered_map<std::int32_t, std::int32_t> bwd;
        bool same = true;
        for (auto& [node, c] : part.assignment) {
            auto it = init->assignment.find(node);
            if (it == init->assignment.end()) {
                same = false;
                break;
            }
            auto [f, fin] = fwd.try_emplace(c, it->second);
            auto [b, bin] = bwd.try_emplace(it->second, c);
            if (f->second != it->second || b->second != c) {
                same = false;
                break;
            }
        }
        if (same)
            for (auto& [node, c] : part.assignment) c = fwd.at(c);
    }
    return part;
}

}  // namespace dgl
