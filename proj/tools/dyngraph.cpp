// Command-line front end: replay a timestamped event stream and run the
// analysis stages, or generate synthetic streams to exercise them.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dgl/edge_dynamics.hpp"
#include "dgl/events.hpp"
#include "dgl/io.hpp"
#include "dgl/merge_predictor.hpp"
#include "dgl/metrics.hpp"
#include "dgl/netmerge.hpp"
#include "dgl/rng.hpp"
#include "dgl/snapshot.hpp"
#include "dgl/synth.hpp"
#include "dgl/tracker.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace dgl;

namespace {

struct CommonOpts {
    std::string input;
    std::string outdir = ".";
    std::uint64_t seed = 1;
    int threads = 0;
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Reproducibility manifest: the full effective config plus input checksums.
void write_manifest(const CommonOpts& common, const std::string& subcommand,
                    const std::vector<std::pair<std::string, std::string>>& params) {
    std::ostringstream os;
    os << "{\"subcommand\":\"" << subcommand << "\",\"seed\":" << common.seed << ",\"params\":{";
    bool first = true;
    for (const auto& [k, v] : params) {
        os << (first ? "" : ",") << "\"" << json_escape(k) << "\":\"" << json_escape(v) << "\"";
        first = false;
    }
    os << "},\"inputs\":{";
    if (!common.input.empty())
        os << "\"" << json_escape(common.input) << "\":\"" << file_checksum(common.input) << "\"";
    os << "}}\n";
    write_file_atomic((fs::path(common.outdir) / "manifest.json").string(), os.str());
}

std::string out_path(const CommonOpts& c, const std::string& name) {
    return (fs::path(c.outdir) / name).string();
}

EventLog load(const CommonOpts& c, IngestMode mode = IngestMode::Lenient) {
    if (!fs::exists(c.input)) throw std::runtime_error("missing input path: " + c.input);
    return ingest_file(c.input, mode);
}

std::vector<Snapshot> series_of(const EventLog& log, std::int64_t start_day,
                                std::int64_t cadence_days) {
    return snapshot_series(log, log.first_time() + start_day * kSecondsPerDay,
                           cadence_days * kSecondsPerDay);
}

void add_common(CLI::App* sub, CommonOpts& c, bool needs_input = true) {
    auto* in = sub->add_option("-i,--input", c.input, "event stream (.gz accepted)");
    if (needs_input) in->required();
    sub->add_option("-o,--outdir", c.outdir, "report directory");
    sub->add_option("--seed", c.seed, "root RNG seed");
    sub->add_option("--threads", c.threads, "worker cap (0 = default)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic graph analytics over timestamped creation events"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);
    app.allow_config_extras(true);

    CommonOpts c;
    std::string stage = "cli";

    // ingest
    auto* cmd_ingest = app.add_subcommand("ingest", "parse and validate a stream");
    CommonOpts c_ingest;
    bool strict = false;
    add_common(cmd_ingest, c_ingest);
    cmd_ingest->add_flag("--strict", strict, "reject edges to unknown nodes");

    // snapshot
    auto* cmd_snapshot = app.add_subcommand("snapshot", "materialize one snapshot");
    CommonOpts c_snap;
    std::int64_t cut_day = 0;
    add_common(cmd_snapshot, c_snap);
    cmd_snapshot->add_option("--day", cut_day, "cut day index")->required();

    // metrics
    auto* cmd_metrics = app.add_subcommand("metrics", "metric time series over a snapshot series");
    CommonOpts c_met;
    std::int64_t cadence = 3, start_day = 0;
    std::size_t sample_size = 1000;
    bool exclude_low_degree = false;
    add_common(cmd_metrics, c_met);
    cmd_metrics->add_option("--cadence-days", cadence);
    cmd_metrics->add_option("--start-day", start_day);
    cmd_metrics->add_option("--path-sample", sample_size, "BFS source sample per snapshot");
    cmd_metrics->add_flag("--exclude-low-degree", exclude_low_degree,
                          "drop degree<2 nodes from the clustering mean");

    // edgedyn
    auto* cmd_edgedyn = app.add_subcommand("edgedyn", "inter-arrival / lifetime / minimal age");
    CommonOpts c_ed;
    std::int64_t bucket_days = 30, min_history_days = 30;
    std::size_t min_degree = 20, bins = 20;
    std::vector<std::int64_t> age_thresholds{1, 10, 30};
    add_common(cmd_edgedyn, c_ed);
    cmd_edgedyn->add_option("--bucket-days", bucket_days, "age bucket width");
    cmd_edgedyn->add_option("--min-history-days", min_history_days);
    cmd_edgedyn->add_option("--min-degree", min_degree);
    cmd_edgedyn->add_option("--bins", bins);
    cmd_edgedyn->add_option("--age-thresholds", age_thresholds, "days, ascending");

    // pa-fit
    auto* cmd_pafit = app.add_subcommand("pa-fit", "preferential attachment strength over time");
    CommonOpts c_pa;
    std::size_t window = 5000, start_edges = 5000, profile_at = 0;
    add_common(cmd_pafit, c_pa);
    cmd_pafit->add_option("--window", window, "edges per estimation window");
    cmd_pafit->add_option("--start-edges", start_edges);
    cmd_pafit->add_option("--profile-at", profile_at, "also dump p_e(d) at this edge count");

    // communities
    auto* cmd_comm = app.add_subcommand("communities", "track community evolution");
    CommonOpts c_comm;
    double delta = 0.04;
    std::size_t min_size = 10;
    std::int64_t comm_cadence = 3, comm_start = 0;
    std::vector<double> sweep_deltas;
    std::vector<std::size_t> size_bands{50, 200, 1000};
    add_common(cmd_comm, c_comm);
    cmd_comm->add_option("--delta", delta, "modularity gain threshold");
    cmd_comm->add_option("--min-size", min_size);
    cmd_comm->add_option("--cadence-days", comm_cadence);
    cmd_comm->add_option("--start-day", comm_start);
    cmd_comm->add_option("--sweep-deltas", sweep_deltas, "extra thresholds to sweep");
    cmd_comm->add_option("--size-bands", size_bands, "impact size band edges");

    // predict-merge
    auto* cmd_pred = app.add_subcommand("predict-merge", "merge classifier over tracked lineages");
    CommonOpts c_pred;
    double pred_delta = 0.04;
    std::size_t pred_min_size = 10, folds = 5, std_window = 5;
    std::int64_t pred_cadence = 3;
    add_common(cmd_pred, c_pred);
    cmd_pred->add_option("--delta", pred_delta);
    cmd_pred->add_option("--min-size", pred_min_size);
    cmd_pred->add_option("--cadence-days", pred_cadence);
    cmd_pred->add_option("--folds", folds);
    cmd_pred->add_option("--std-window", std_window);

    // netmerge
    auto* cmd_net = app.add_subcommand("netmerge", "two-network merge analysis");
    CommonOpts c_net;
    std::int64_t merge_day = 0, activity_days = 94, distance_every = 5;
    std::string tag_a = "A", tag_b = "B";
    NodeId id_split = -1;
    std::size_t dist_sample = 1000;
    add_common(cmd_net, c_net);
    cmd_net->add_option("--merge-day", merge_day)->required();
    cmd_net->add_option("--activity-days", activity_days);
    cmd_net->add_option("--tag-a", tag_a);
    cmd_net->add_option("--tag-b", tag_b);
    cmd_net->add_option("--id-split", id_split, "origin by id threshold for untagged logs");
    cmd_net->add_option("--distance-sample", dist_sample);
    cmd_net->add_option("--distance-every", distance_every, "days between distance probes");

    // synth
    auto* cmd_synth = app.add_subcommand("synth", "generate a synthetic stream");
    CommonOpts c_synth;
    std::string mode = "growth";
    GrowthConfig growth;
    std::int64_t synth_days = 100;
    double beta0 = 1.0, beta_eta = 0.0, duplicate_fraction = 0.0;
    std::size_t max_edges = 0;
    add_common(cmd_synth, c_synth, false);
    cmd_synth->add_option("--mode", mode)->check(CLI::IsMember({"growth", "planted", "two-network"}));
    cmd_synth->add_option("--days", synth_days);
    cmd_synth->add_option("--initial-nodes", growth.initial_nodes);
    cmd_synth->add_option("--growth-factor", growth.growth_factor);
    cmd_synth->add_option("--edges-per-node", growth.edges_per_new_node);
    cmd_synth->add_option("--gamma", growth.gamma);
    cmd_synth->add_option("--beta0", beta0);
    cmd_synth->add_option("--beta-eta", beta_eta);
    cmd_synth->add_option("--max-edges", max_edges);
    cmd_synth->add_option("--duplicate-fraction", duplicate_fraction);

    try {
        // environment overrides, DGL_ prefixed
        if (const char* env_seed = std::getenv("DGL_SEED")) c.seed = std::stoull(env_seed);

        CLI11_PARSE(app, argc, argv);

        auto run = [&](CommonOpts& common, const char* name, auto&& body) {
            stage = name;
            if (common.seed == 1 && c.seed != 1) common.seed = c.seed;
#ifdef _OPENMP
            if (common.threads > 0) omp_set_num_threads(common.threads);
#endif
            fs::create_directories(common.outdir);
            body();
        };

        if (cmd_ingest->parsed()) {
            run(c_ingest, "ingest", [&] {
                auto log = load(c_ingest, strict ? IngestMode::Strict : IngestMode::Lenient);
                write_file_atomic(out_path(c_ingest, "ingest.stats.json"),
                                  log.stats.to_json() + "\n");
                write_manifest(c_ingest, "ingest", {{"strict", strict ? "1" : "0"}});
            });
        } else if (cmd_snapshot->parsed()) {
            run(c_snap, "snapshot", [&] {
                auto log = load(c_snap);
                auto snap = snapshot_at(log, log.first_time() + cut_day * kSecondsPerDay);
                std::ostringstream os;
                os << "{\"day\":" << cut_day << ",\"nodes\":" << snap.node_count()
                   << ",\"edges\":" << snap.edge_count() << "}\n";
                write_file_atomic(out_path(c_snap, "snapshot.summary.json"), os.str());
                write_manifest(c_snap, "snapshot", {{"day", std::to_string(cut_day)}});
            });
        } else if (cmd_metrics->parsed()) {
            run(c_met, "metrics", [&] {
                auto log = load(c_met);
                auto snaps = series_of(log, start_day, cadence);
                Timestamp t0 = log.first_time();
                auto g = growth_series(snaps, t0);
                write_metric_csv(out_path(c_met, "metrics.new_nodes.csv"), {g.new_nodes});
                write_metric_csv(out_path(c_met, "metrics.new_edges.csv"), {g.new_edges});
                write_metric_csv(out_path(c_met, "metrics.relative_growth.csv"),
                                 {g.relative_node_growth, g.relative_edge_growth});
                MetricSeries deg{Metric::AvgDegree, {}}, path{Metric::AvgPathLength, {}},
                    clus{Metric::AvgClustering, {}}, assort{Metric::Assortativity, {}};
                for (const auto& s : snaps) {
                    std::int64_t day = (s.cut_time() - t0) / kSecondsPerDay;
                    deg.points.push_back({day, s.node_count() ? avg_degree(s) : 0.0,
                                          s.node_count() == 0});
                    clus.points.push_back({day, avg_clustering(s, !exclude_low_degree), false});
                    try {
                        path.points.push_back(
                            {day, avg_path_length(s, sample_size, split_seed(c_met.seed, "path")),
                             false});
                    } catch (const std::runtime_error&) {
                        path.points.push_back({day, 0.0, true});
                    }
                    try {
                        assort.points.push_back({day, assortativity(s), false});
                    } catch (const std::runtime_error&) {
                        assort.points.push_back({day, 0.0, true});
                    }
                }
                write_metric_csv(out_path(c_met, "metrics.avg_degree.csv"), {deg});
                write_metric_csv(out_path(c_met, "metrics.avg_path_length.csv"), {path});
                write_metric_csv(out_path(c_met, "metrics.avg_clustering.csv"), {clus});
                write_metric_csv(out_path(c_met, "metrics.assortativity.csv"), {assort});
                write_manifest(c_met, "metrics",
                               {{"cadence_days", std::to_string(cadence)},
                                {"start_day", std::to_string(start_day)},
                                {"path_sample", std::to_string(sample_size)}});
            });
        } else if (cmd_edgedyn->parsed()) {
            run(c_ed, "edgedyn", [&] {
                auto log = load(c_ed);
                auto hists = inter_arrival_histogram(log, bucket_days * kSecondsPerDay);
                write_interarrival_csv(out_path(c_ed, "edgedyn.interarrival.csv"), hists);
                try {
                    auto profile = lifetime_activity_profile(
                        log, min_history_days * kSecondsPerDay, min_degree, bins);
                    CsvWriter csv(out_path(c_ed, "edgedyn.lifetime.csv"));
                    csv.row("bin,mass");
                    for (std::size_t bIdx = 0; bIdx < profile.size(); bIdx++)
                        csv.row(std::to_string(bIdx) + "," + format_double(profile[bIdx]));
                    csv.commit();
                } catch (const std::runtime_error&) {
                    write_file_atomic(out_path(c_ed, "edgedyn.lifetime.csv"),
                                      "bin,mass\n# no qualifying node\n");
                }
                std::vector<Timestamp> thr;
                for (auto d : age_thresholds) thr.push_back(d * kSecondsPerDay);
                auto minage = minimal_age_attribution(log, thr);
                CsvWriter csv(out_path(c_ed, "edgedyn.minage.csv"));
                csv.row("day,threshold_days,fraction");
                for (std::size_t t = 0; t < minage.thresholds.size(); t++)
                    for (std::size_t d = 0; d < minage.fractions[t].size(); d++)
                        csv.row(std::to_string(d) + "," +
                                std::to_string(minage.thresholds[t] / kSecondsPerDay) + "," +
                                format_double(minage.fractions[t][d]));
                csv.commit();
                write_manifest(c_ed, "edgedyn", {{"bucket_days", std::to_string(bucket_days)}});
            });
        } else if (cmd_pafit->parsed()) {
            run(c_pa, "pa-fit", [&] {
                auto log = load(c_pa);
                auto series = alpha_series(log, window, start_edges, c_pa.seed);
                write_alpha_csv(out_path(c_pa, "pa-fit.alpha.csv"), series);
                if (profile_at >= window) {
                    auto prof = edge_probability_profile(
                        log, profile_at, DestinationPolicy::HigherDegree, window, c_pa.seed);
                    write_profile_csv(out_path(c_pa, "pa-fit.profile.csv"), prof);
                }
                write_manifest(c_pa, "pa-fit",
                               {{"window", std::to_string(window)},
                                {"start_edges", std::to_string(start_edges)}});
            });
        } else if (cmd_comm->parsed()) {
            run(c_comm, "communities", [&] {
                auto log = load(c_comm);
                auto snaps = series_of(log, comm_start, comm_cadence);
                TrackerOptions opts;
                opts.delta = delta;
                opts.seed = c_comm.seed;
                opts.min_size = min_size;
                auto tracker = track(snaps, opts);
                write_timelines_jsonl(out_path(c_comm, "communities.timelines.jsonl"), tracker);

                auto stats = community_stats(tracker, snaps);
                CsvWriter scsv(out_path(c_comm, "communities.stats.csv"));
                scsv.row("snapshot,metric,value");
                for (std::size_t i = 0; i < stats.top5_coverage.size(); i++)
                    scsv.row(std::to_string(i) + ",top5_coverage," +
                             format_double(stats.top5_coverage[i]));
                for (auto l : stats.lifetimes) scsv.row(",lifetime," + std::to_string(l));
                scsv.commit();

                auto ratios = size_ratio_analysis(tracker);
                CsvWriter rcsv(out_path(c_comm, "communities.size_ratio.csv"));
                rcsv.row("event,ratio");
                for (double r : ratios.merge_ratios) rcsv.row("merge," + format_double(r));
                for (double r : ratios.split_ratios) rcsv.row("split," + format_double(r));
                rcsv.commit();

                auto impact = community_impact(tracker, snaps, log, size_bands, min_size);
                CsvWriter icsv(out_path(c_comm, "communities.impact.csv"));
                icsv.row("family,key,value");
                for (auto gseconds : impact.community_gaps)
                    icsv.row("gap,community," + std::to_string(gseconds));
                for (auto gseconds : impact.non_community_gaps)
                    icsv.row("gap,non_community," + std::to_string(gseconds));
                for (auto& [band, lifetimes] : impact.lifetime_by_size_band)
                    for (auto lt : lifetimes)
                        icsv.row("lifetime," + std::to_string(band) + "," + std::to_string(lt));
                for (double r : impact.in_degree_ratios)
                    icsv.row("in_degree_ratio,," + format_double(r));
                icsv.commit();

                if (!sweep_deltas.empty()) {
                    auto sweep = delta_sweep(snaps, sweep_deltas, c_comm.seed, min_size);
                    CsvWriter wcsv(out_path(c_comm, "communities.sweep.csv"));
                    wcsv.row("delta,snapshot,modularity,mean_similarity");
                    for (const auto& entry : sweep)
                        for (std::size_t i = 0; i < entry.modularity.size(); i++)
                            wcsv.row(format_double(entry.delta) + "," + std::to_string(i) + "," +
                                     format_double(entry.modularity[i]) + "," +
                                     (i < entry.mean_similarity.size()
                                          ? format_double(entry.mean_similarity[i])
                                          : ""));
                    wcsv.commit();
                }
                write_manifest(c_comm, "communities",
                               {{"delta", format_double(delta)},
                                {"min_size", std::to_string(min_size)},
                                {"cadence_days", std::to_string(comm_cadence)}});
            });
        } else if (cmd_pred->parsed()) {
            run(c_pred, "predict-merge", [&] {
                auto log = load(c_pred);
                auto snaps = series_of(log, 0, pred_cadence);
                TrackerOptions opts;
                opts.delta = pred_delta;
                opts.seed = c_pred.seed;
                opts.min_size = pred_min_size;
                auto tracker = track(snaps, opts);
                auto rows = extract_features(tracker, snaps, std_window);
                write_features_csv(out_path(c_pred, "predict.features.csv"), rows);
                auto report = train_classifier(rows, folds, c_pred.seed);
                write_file_atomic(out_path(c_pred, "predict.model.json"),
                                  report.model.to_json() + "\n");
                CsvWriter csv(out_path(c_pred, "predict.accuracy.csv"));
                csv.row("age,merge_accuracy,no_merge_accuracy");
                csv.row("all," + format_double(report.merge_accuracy) + "," +
                        format_double(report.no_merge_accuracy));
                for (std::size_t a = 0; a < report.merge_accuracy_by_age.size(); a++)
                    csv.row(std::to_string(a) + "," +
                            format_double(report.merge_accuracy_by_age[a]) + "," +
                            format_double(report.no_merge_accuracy_by_age[a]));
                csv.commit();
                write_manifest(c_pred, "predict-merge", {{"folds", std::to_string(folds)}});
            });
        } else if (cmd_net->parsed()) {
            run(c_net, "netmerge", [&] {
                auto log = load(c_net);
                MergeScenario scenario =
                    id_split >= 0
                        ? scenario_from_id_split(log, merge_day, id_split, activity_days)
                        : scenario_from_tags(log, merge_day, tag_a, tag_b, activity_days);

                auto classes = classify_edges(log, scenario);
                CsvWriter ccsv(out_path(c_net, "netmerge.classes.csv"));
                ccsv.row("day,internal_a,internal_b,external,to_new");
                for (std::size_t i = 0; i < classes.days.size(); i++) {
                    auto& k = classes.counts[i];
                    ccsv.row(std::to_string(classes.days[i]) + "," + std::to_string(k[0]) + "," +
                             std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
                             std::to_string(k[3]));
                }
                ccsv.commit();

                auto act = activity_series(log, scenario);
                CsvWriter acsv(out_path(c_net, "netmerge.activity.csv"));
                acsv.row("day,origin,active");
                for (std::size_t i = 0; i < act.days.size(); i++) {
                    acsv.row(std::to_string(act.days[i]) + ",A," + std::to_string(act.active_a[i]));
                    acsv.row(std::to_string(act.days[i]) + ",B," + std::to_string(act.active_b[i]));
                }
                acsv.commit();

                auto dup = duplicate_estimate(log, scenario);
                std::ostringstream dos;
                dos << "{\"inactive_fraction_a\":" << format_double(dup.inactive_fraction_a)
                    << ",\"inactive_fraction_b\":" << format_double(dup.inactive_fraction_b)
                    << ",\"combined_lower_bound\":" << format_double(dup.combined_lower_bound)
                    << "}\n";
                write_file_atomic(out_path(c_net, "netmerge.duplicates.json"), dos.str());

                auto ratios = edge_ratio_series(log, scenario);
                CsvWriter rcsv(out_path(c_net, "netmerge.ratios.csv"));
                rcsv.row("day,metric,value,flag");
                auto emit_ratio = [&](const char* name, const std::vector<RatioPoint>& pts) {
                    for (const auto& p : pts)
                        rcsv.row(std::to_string(p.day) + "," + name + "," +
                                 (p.gap ? "" : format_double(p.value)) + "," +
                                 (p.gap ? "gap" : ""));
                };
                emit_ratio("internal_to_external", ratios.internal_to_external);
                emit_ratio("new_to_external", ratios.new_to_external);
                emit_ratio("internal_a_to_external", ratios.internal_a_to_external);
                emit_ratio("internal_b_to_external", ratios.internal_b_to_external);
                rcsv.commit();

                CsvWriter dcsv(out_path(c_net, "netmerge.distance.csv"));
                dcsv.row("day,mean_a_to_b,mean_b_to_a,unreachable_a,unreachable_b");
                std::int64_t last_day = log.day_of(log.last_time()) - merge_day;
                for (std::int64_t d = 0; d <= last_day; d += distance_every) {
                    auto dist = cross_network_distance(log, scenario, d, dist_sample,
                                                      split_seed(c_net.seed, "dist"));
                    dcsv.row(std::to_string(d) + "," +
                             (dist.defined_a ? format_double(dist.mean_a_to_b) : "") + "," +
                             (dist.defined_b ? format_double(dist.mean_b_to_a) : "") + "," +
                             std::to_string(dist.unreachable_a) + "," +
                             std::to_string(dist.unreachable_b));
                }
                dcsv.commit();
                write_manifest(c_net, "netmerge",
                               {{"merge_day", std::to_string(merge_day)},
                                {"activity_days", std::to_string(activity_days)}});
            });
        } else if (cmd_synth->parsed()) {
            run(c_synth, "synth", [&] {
                growth.seed = c_synth.seed;
                growth.days = static_cast<int>(synth_days);
                growth.beta0 = beta0;
                growth.beta_eta = beta_eta;
                growth.max_edges = max_edges;
                if (mode == "growth") {
                    auto res = generate_growth(growth);
                    write_event_log(out_path(c_synth, "synth.events.csv"), res.log);
                    write_file_atomic(out_path(c_synth, "synth.truth.json"),
                                      res.truth.to_json() + "\n");
                } else if (mode == "planted") {
                    PlantedScript script;
                    script.block_sizes = {50, 50, 50, 50};
                    script.growth_per_snapshot = 5;
                    script.seed = c_synth.seed;
                    auto res = generate_planted(script, static_cast<std::size_t>(synth_days / 3), 3);
                    write_event_log(out_path(c_synth, "synth.events.csv"), res.log);
                } else {
                    TwoNetworkConfig cfg;
                    cfg.network_a.seed = split_seed(c_synth.seed, "a");
                    cfg.network_b.seed = split_seed(c_synth.seed, "b");
                    cfg.merge_day = synth_days / 2;
                    cfg.days_after = synth_days - cfg.merge_day;
                    cfg.duplicate_fraction = duplicate_fraction;
                    cfg.seed = c_synth.seed;
                    auto res = generate_two_network(cfg);
                    write_event_log(out_path(c_synth, "synth.events.csv"), res.log);
                    write_file_atomic(out_path(c_synth, "synth.truth.json"),
                                      res.truth.to_json() + "\n");
                }
                write_manifest(c_synth, "synth",
                               {{"mode", mode}, {"days", std::to_string(synth_days)}});
            });
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"" << json_escape(e.what()) << "\",\"stage\":\""
                  << json_escape(stage) << "\"}" << std::endl;
        return 1;
    }
}
