#include "dgl/merge_predictor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "dgl/io.hpp"
#include "dgl/rng.hpp"

namespace dgl {

namespace {

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

double trailing_std(const std::vector<double>& hist, std::size_t upto, std::size_t window) {
    std::size_t lo = upto + 1 > window ? upto + 1 - window : 0;
    std::size_t n = upto + 1 - lo;
    if (n < 2) return 0.0;
    double mean = 0;
    for (std::size_t i = lo; i <= upto; i++) mean += hist[i];
    mean /= static_cast<double>(n);
    double var = 0;
    for (std::size_t i = lo; i <= upto; i++) var += (hist[i] - mean) * (hist[i] - mean);
    return std::sqrt(var / static_cast<double>(n));
}

double in_degree_ratio_of(const Snapshot& snap, const std::vector<NodeId>& members) {
    std::unordered_map<NodeId, bool> inside;
    inside.reserve(members.size() * 2);
    for (auto n : members) inside[n] = true;
    std::size_t internal2 = 0, degsum = 0;  // internal edges counted twice
    for (auto n : members) {
        auto u = snap.index_of(n);
        if (u == Snapshot::npos) continue;
        degsum += snap.degree(u);
        for (auto v : snap.neighbors(u))
            if (inside.count(snap.external_id(v))) internal2++;
    }
    if (degsum == 0) return 0.0;
    return static_cast<double>(internal2 / 2) / static_cast<double>(degsum);
}

}  // namespace

std::vector<double> MergeFeatureVector::columns() const {
    return {size,
            in_degree_ratio,
            self_similarity,
            size_std,
            ratio_std,
            sim_std,
            static_cast<double>(size_d1),
            static_cast<double>(ratio_d1),
            static_cast<double>(sim_d1),
            static_cast<double>(size_d2),
            static_cast<double>(ratio_d2),
            static_cast<double>(sim_d2),
            static_cast<double>(age)};
}

std::vector<std::string> MergeFeatureVector::column_names() {
    return {"size", "in_degree_ratio", "self_similarity", "size_std", "ratio_std", "sim_std",
            "size_d1", "ratio_d1", "sim_d1", "size_d2", "ratio_d2", "sim_d2", "age"};
}

std::vector<MergeFeatureVector> extract_features(const TrackerResult& tracker,
                                                 const std::vector<Snapshot>& snapshots,
                                                 std::size_t std_window,
                                                 std::int64_t merge_day_snapshot) {
    if (tracker.timelines.empty()) throw std::runtime_error("empty timeline set");
    std::vector<MergeFeatureVector> rows;

    for (const auto& tl : tracker.timelines) {
        if (merge_day_snapshot >= 0 &&
            tl.birth_snapshot == static_cast<std::size_t>(merge_day_snapshot))
            continue;
        std::size_t span = tl.members.size();
        std::vector<double> size_h(span), ratio_h(span), sim_h(span);
        for (std::size_t k = 0; k < span; k++) {
            std::size_t s = tl.birth_snapshot + k;
            size_h[k] = static_cast<double>(tl.members[k].size());
            ratio_h[k] = in_degree_ratio_of(snapshots[s], tl.members[k]);
            sim_h[k] = k == 0 ? 1.0 : jaccard(tl.members[k - 1], tl.members[k]);
        }
        for (std::size_t k = 0; k < span; k++) {
            std::size_t s = tl.birth_snapshot + k;
            if (s + 1 >= snapshots.size()) break;  // no next snapshot to label against
            bool survives = k + 1 < span;
            bool merges = false;
            if (!survives) {
                bool found = false;
                for (const auto& ev : tl.events)
                    if (ev.snapshot_index == s + 1 && ev.kind == CommunityEventKind::Merge) {
                        merges = true;
                        found = true;
                    } else if (ev.snapshot_index == s + 1 &&
                               ev.kind == CommunityEventKind::DeathUnmatched) {
                        found = true;
                    }
                if (found && !merges) continue;  // unmatched death, neither label fits
                if (!found) continue;
            }
            MergeFeatureVector row;
            row.lineage_id = tl.lineage_id;
            row.snapshot_index = s;
            row.age = k;
            row.size = size_h[k];
            row.in_degree_ratio = ratio_h[k];
            row.self_similarity = sim_h[k];
            row.size_std = trailing_std(size_h, k, std_window);
            row.ratio_std = trailing_std(ratio_h, k, std_window);
            row.sim_std = trailing_std(sim_h, k, std_window);
            if (k >= 2) {
                row.indicators_valid = true;
                row.size_d1 = sign_of(size_h[k] - size_h[k - 1]);
                row.ratio_d1 = sign_of(ratio_h[k] - ratio_h[k - 1]);
                row.sim_d1 = sign_of(sim_h[k] - sim_h[k - 1]);
                row.size_d2 = sign_of((size_h[k] - size_h[k - 1]) - (size_h[k - 1] - size_h[k - 2]));
                row.ratio_d2 =
                    sign_of((ratio_h[k] - ratio_h[k - 1]) - (ratio_h[k - 1] - ratio_h[k - 2]));
                row.sim_d2 = sign_of((sim_h[k] - sim_h[k - 1]) - (sim_h[k - 1] - sim_h[k - 2]));
            }
            row.merges_next = merges;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

ClassifierReport train_classifier(const std::vector<MergeFeatureVector>& vectors,
                                  std::size_t folds, std::uint64_t seed) {
    if (folds < 2 || folds > vectors.size()) throw std::runtime_error("bad fold count");
    std::vector<std::vector<double>> x;
    std::vector<int> y;
    for (const auto& v : vectors) {
        x.push_back(v.columns());
        y.push_back(v.merges_next ? 1 : -1);
    }
    if (std::count(y.begin(), y.end(), 1) == 0 || std::count(y.begin(), y.end(), -1) == 0)
        throw std::runtime_error("single-class data");

    Rng rng(split_seed(seed, "cv"));
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    constexpr std::size_t kAgeCap = 10;
    std::vector<double> hit_merge(kAgeCap + 1, 0), tot_merge(kAgeCap + 1, 0);
    std::vector<double> hit_keep(kAgeCap + 1, 0), tot_keep(kAgeCap + 1, 0);
    double merge_hit = 0, merge_tot = 0, keep_hit = 0, keep_tot = 0;

    for (std::size_t f = 0; f < folds; f++) {
        std::vector<std::vector<double>> xt;
        std::vector<int> yt;
        std::vector<std::size_t> held;
        for (std::size_t r = 0; r < order.size(); r++) {
            if (r % folds == f)
                held.push_back(order[r]);
            else {
                xt.push_back(x[order[r]]);
                yt.push_back(y[order[r]]);
            }
        }
        LinearSvm fold_model;
        fold_model.train(xt, yt, {}, split_seed(seed, "fold/" + std::to_string(f)));
        for (auto i : held) {
            bool correct = fold_model.predict(x[i]) == y[i];
            std::size_t age = std::min(vectors[i].age, kAgeCap);
            if (y[i] > 0) {
                merge_tot++;
                tot_merge[age]++;
                if (correct) {
                    merge_hit++;
                    hit_merge[age]++;
                }
            } else {
                keep_tot++;
                tot_keep[age]++;
                if (correct) {
                    keep_hit++;
                    hit_keep[age]++;
                }
            }
        }
    }

    ClassifierReport report;
    report.model.train(x, y, {}, split_seed(seed, "final"));
    report.merge_accuracy = merge_tot > 0 ? merge_hit / merge_tot : 0;
    report.no_merge_accuracy = keep_tot > 0 ? keep_hit / keep_tot : 0;
    for (std::size_t a = 0; a <= kAgeCap; a++) {
        report.merge_accuracy_by_age.push_back(tot_merge[a] > 0 ? hit_merge[a] / tot_merge[a] : -1);
        report.no_merge_accuracy_by_age.push_back(tot_keep[a] > 0 ? hit_keep[a] / tot_keep[a] : -1);
    }
    return report;
}

std::int32_t predict_destination(const CommunityPartition& partition, const Snapshot& snapshot,
                                 std::int32_t subject_community) {
    std::unordered_map<std::int32_t, std::size_t> cross, comm_sizes;
    for (auto& [node, c] : partition.assignment) comm_sizes[c]++;
    bool any_external = false;
    for (Snapshot::Index u = 0; u < snapshot.node_count(); u++) {
        if (partition.assignment.at(snapshot.external_id(u)) != subject_community) continue;
        for (auto v : snapshot.neighbors(u)) {
            auto cv = partition.assignment.at(snapshot.external_id(v));
            if (cv != subject_community) {
                cross[cv]++;
                any_external = true;
            }
        }
    }
    if (!any_external) throw std::runtime_error("subject has no external edges");
    std::int32_t best = -1;
    std::size_t best_cross = 0, best_size = 0;
    for (auto [c, k] : cross) {
        if (k > best_cross || (k == best_cross && comm_sizes[c] > best_size) ||
            (k == best_cross && comm_sizes[c] == best_size && c < best)) {
            best = c;
            best_cross = k;
            best_size = comm_sizes[c];
        }
    }
    return best;
}

void write_features_csv(const std::string& path, const std::vector<MergeFeatureVector>& vectors) {
    CsvWriter csv(path);
    std::string header = "lineage_id,snapshot,label";
    for (const auto& c : MergeFeatureVector::column_names()) header += "," + c;
    csv.row(header);
    for (const auto& v : vectors) {
        std::string row = std::to_string(v.lineage_id) + "," + std::to_string(v.snapshot_index) +
                          "," + (v.merges_next ? "merges_next" : "survives_next");
        for (double c : v.columns()) row += "," + format_double(c);
        csv.row(row);
    }
    csv.commit();
}

}  // namespace dgl
