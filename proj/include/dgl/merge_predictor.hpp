#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgl/svm.hpp"
#include "dgl/tracker.hpp"

namespace dgl {

// Per-(lineage, snapshot) feature row for the merge classifier.
struct MergeFeatureVector {
    std::int64_t lineage_id = 0;
    std::size_t snapshot_index = 0;
    std::size_t age = 0;  // snapshots since birth

    double size = 0;
    double in_degree_ratio = 0;   // internal edges / summed member degree
    double self_similarity = 0;   // Jaccard with the previous incarnation
    double size_std = 0, ratio_std = 0, sim_std = 0;  // trailing window
    int size_d1 = 0, ratio_d1 = 0, sim_d1 = 0;        // first-order change sign
    int size_d2 = 0, ratio_d2 = 0, sim_d2 = 0;        // second-order change sign
    bool indicators_valid = false;  // false for rows with < 3 snapshots of history

    bool merges_next = false;

    std::vector<double> columns() const;
    static std::vector<std::string> column_names();
};

// One labeled row per (lineage, snapshot) that has a defined next snapshot.
// Rows born on a day flagged as the network-merge day are excluded when
// merge_day_snapshot >= 0.
std::vector<MergeFeatureVector> extract_features(const TrackerResult& tracker,
                                                 const std::vector<Snapshot>& snapshots,
                                                 std::size_t std_window = 5,
                                                 std::int64_t merge_day_snapshot = -1);

struct ClassifierReport {
    LinearSvm model;  // trained on all rows
    double merge_accuracy = 0;     // predicted-merge / actual merges, CV
    double no_merge_accuracy = 0;  // analogous for survivors
    std::vector<double> merge_accuracy_by_age;     // index = min(age, bucket cap)
    std::vector<double> no_merge_accuracy_by_age;
};

ClassifierReport train_classifier(const std::vector<MergeFeatureVector>& vectors,
                                  std::size_t folds, std::uint64_t seed);

// Strongest-tie rule: the other community with the largest cross-edge count
// to the subject; ties broken toward the larger community. Throws when the
// subject has no external edges.
std::int32_t predict_destination(const CommunityPartition& partition, const Snapshot& snapshot,
                                 std::int32_t subject_community);

void write_features_csv(const std::string& path, const std::vector<MergeFeatureVector>& vectors);

}  // namespace dgl
