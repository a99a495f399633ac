#include "dgl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dgl/io.hpp"
#include "dgl/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dgl {

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::NewNodes: return "new_nodes";
        case Metric::NewEdges: return "new_edges";
        case Metric::RelativeNodeGrowth: return "relative_node_growth";
        case Metric::RelativeEdgeGrowth: return "relative_edge_growth";
        case Metric::AvgDegree: return "avg_degree";
        case Metric::AvgPathLength: return "avg_path_length";
        case Metric::AvgClustering: return "avg_clustering";
        case Metric::Assortativity: return "assortativity";
    }
    return "?";
}

GrowthSeries growth_series(const std::vector<Snapshot>& snapshots, Timestamp t0) {
    if (snapshots.size() < 2) throw std::runtime_error("growth_series needs >= 2 snapshots");
    GrowthSeries g;
    g.new_nodes.metric = Metric::NewNodes;
    g.new_edges.metric = Metric::NewEdges;
    g.relative_node_growth.metric = Metric::RelativeNodeGrowth;
    g.relative_edge_growth.metric = Metric::RelativeEdgeGrowth;
    for (std::size_t i = 1; i < snapshots.size(); i++) {
        const Snapshot& prev = snapshots[i - 1];
        const Snapshot& cur = snapshots[i];
        std::int64_t day = (cur.cut_time() - t0) / kSecondsPerDay;
        double dn = static_cast<double>(cur.node_count() - prev.node_count());
        double de = static_cast<double>(cur.edge_count() - prev.edge_count());
        g.new_nodes.points.push_back({day, dn, false});
        g.new_edges.points.push_back({day, de, false});
        auto rel = [day](double delta, double base) {
            return base > 0 ? MetricPoint{day, delta / base, false} : MetricPoint{day, 0.0, true};
        };
        g.relative_node_growth.points.push_back(rel(dn, static_cast<double>(prev.node_count())));
        g.relative_edge_growth.points.push_back(rel(de, static_cast<double>(prev.edge_count())));
    }
    return g;
}

double avg_degree(const Snapshot& s) {
    if (s.node_count() == 0) throw std::runtime_error("avg_degree of empty graph");
    return 2.0 * static_cast<double>(s.edge_count()) / static_cast<double>(s.node_count());
}

namespace {

// Local clustering of one node: existing links among neighbors over d(d-1)/2.
// `mark` is a scratch array of size node_count, zeroed on entry and exit.
double local_clustering(const Snapshot& s, Snapshot::Index u, std::vector<std::uint8_t>& mark) {
    const auto& nbrs = s.neighbors(u);
    std::size_t d = nbrs.size();
    if (d < 2) return 0.0;
    for (auto v : nbrs) mark[v] = 1;
    std::size_t links = 0;
    for (auto v : nbrs)
        for (auto w : s.neighbors(v))
            if (w != u && mark[w]) links++;
    for (auto v : nbrs) mark[v] = 0;
    // each neighbor-neighbor edge counted twice above
    return static_cast<double>(links) / static_cast<double>(d * (d - 1));
}

double clustering_mean(const Snapshot& s, bool include_low_degree, bool parallel) {
    std::size_t n = s.node_count();
    if (n == 0) return 0.0;
    double sum = 0.0;
    std::size_t counted = 0;
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel reduction(+ : sum, counted)
        {
            std::vector<std::uint8_t> mark(n, 0);
#pragma omp for schedule(dynamic, 256)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); i++) {
                auto u = static_cast<Snapshot::Index>(i);
                if (s.degree(u) < 2) {
                    if (include_low_degree) counted++;
                    continue;
                }
                sum += local_clustering(s, u, mark);
                counted++;
            }
        }
        return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
    }
#else
    (void)parallel;
#endif
    std::vector<std::uint8_t> mark(n, 0);
    for (Snapshot::Index u = 0; u < n; u++) {
        if (s.degree(u) < 2) {
            if (include_low_degree) counted++;
            continue;
        }
        sum += local_clustering(s, u, mark);
        counted++;
    }
    return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

// BFS from src restricted to one component; returns mean distance to the
// other comp_size-1 nodes. dist is scratch, reset after use.
double bfs_mean_distance(const Snapshot& s, Snapshot::Index src, std::size_t comp_size,
                         std::vector<std::int32_t>& dist, std::vector<Snapshot::Index>& queue) {
    queue.clear();
    queue.push_back(src);
    dist[src] = 0;
    std::size_t head = 0;
    std::uint64_t total = 0;
    while (head < queue.size()) {
        auto u = queue[head++];
        for (auto v : s.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                total += static_cast<std::uint64_t>(dist[v]);
                queue.push_back(v);
            }
        }
    }
    for (auto u : queue) dist[u] = -1;
    return static_cast<double>(total) / static_cast<double>(comp_size - 1);
}

double path_length_impl(const Snapshot& s, std::size_t sample_size, std::uint64_t seed,
                        bool parallel) {
    if (s.node_count() == 0) throw std::runtime_error("avg_path_length of empty graph");
    auto comp = largest_component(s);
    if (comp.size() < 2) throw std::runtime_error("degenerate component");
    sample_size = std::min(sample_size, comp.size());

    Rng rng(seed);
    std::vector<Snapshot::Index> sources = comp;
    for (std::size_t i = 0; i < sample_size; i++) {
        std::uniform_int_distribution<std::size_t> pick(i, sources.size() - 1);
        std::swap(sources[i], sources[pick(rng)]);
    }
    sources.resize(sample_size);

    double sum = 0.0;
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel reduction(+ : sum)
        {
            std::vector<std::int32_t> dist(s.node_count(), -1);
            std::vector<Snapshot::Index> queue;
#pragma omp for schedule(dynamic, 4)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(sources.size()); i++)
                sum += bfs_mean_distance(s, sources[i], comp.size(), dist, queue);
        }
        return sum / static_cast<double>(sample_size);
    }
#else
    (void)parallel;
#endif
    std::vector<std::int32_t> dist(s.node_count(), -1);
    std::vector<Snapshot::Index> queue;
    for (auto src : sources) sum += bfs_mean_distance(s, src, comp.size(), dist, queue);
    return sum / static_cast<double>(sample_size);
}

}  // namespace

double avg_clustering(const Snapshot& s, bool include_low_degree) {
    return clustering_mean(s, include_low_degree, true);
}

double avg_clustering_serial(const Snapshot& s, bool include_low_degree) {
    return clustering_mean(s, include_low_degree, false);
}

double avg_path_length(const Snapshot& s, std::size_t sample_size, std::uint64_t seed) {
    return path_length_impl(s, sample_size, seed, true);
}

double avg_path_length_serial(const Snapshot& s, std::size_t sample_size, std::uint64_t seed) {
    return path_length_impl(s, sample_size, seed, false);
}

double assortativity(const Snapshot& s) {
    if (s.edge_count() == 0) throw std::runtime_error("assortativity needs edges");
    // Pearson over both orientations of every edge: sums over ordered pairs.
    double sx = 0, sxx = 0, sxy = 0;
    std::uint64_t m2 = 0;
    for (Snapshot::Index u = 0; u < s.node_count(); u++) {
        double du = static_cast<double>(s.degree(u));
        for (auto v : s.neighbors(u)) {
            double dv = static_cast<double>(s.degree(v));
            sx += du;
            sxx += du * du;
            sxy += du * dv;
            m2++;
        }
    }
    double n = static_cast<double>(m2);
    double mean = sx / n;
    double var = sxx / n - mean * mean;
    if (var <= 1e-12) throw std::runtime_error("undefined assortativity");
    double cov = sxy / n - mean * mean;
    return cov / var;
}

std::vector<Snapshot::Index> largest_component(const Snapshot& s) {
    std::size_t n = s.node_count();
    std::vector<std::int32_t> comp(n, -1);
    std::vector<Snapshot::Index> queue, best, cur;
    std::int32_t cid = 0;
    for (Snapshot::Index start = 0; start < n; start++) {
        if (comp[start] >= 0) continue;
        cur.clear();
        queue.clear();
        queue.push_back(start);
        comp[start] = cid;
        std::size_t head = 0;
        while (head < queue.size()) {
            auto u = queue[head++];
            cur.push_back(u);
            for (auto v : s.neighbors(u)) {
                if (comp[v] < 0) {
                    comp[v] = cid;
                    queue.push_back(v);
                }
            }
        }
        if (cur.size() > best.size()) best = cur;
        cid++;
    }
    return best;
}

void write_metric_csv(const std::string& path, const std::vector<MetricSeries>& series) {
    CsvWriter csv(path);
    csv.row("day,metric,value,flag");
    for (const auto& ms : series) {
        for (const auto& p : ms.points) {
            if (p.degenerate)
                csv.row(std::to_string(p.day) + "," + metric_name(ms.metric) + ",,degenerate");
            else
                csv.row(std::to_string(p.day) + "," + metric_name(ms.metric) + "," +
                        format_double(p.value) + ",");
        }
    }
    csv.commit();
}

}  // namespace dgl
