// Drives the installed binary end to end through std::system. The path comes
// from the DYNGRAPH_BIN environment variable set by the test harness.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

std::string binary() {
    const char* p = std::getenv("DYNGRAPH_BIN");
    REQUIRE_MESSAGE(p != nullptr, "DYNGRAPH_BIN not set");
    return p;
}

int run(const std::string& args) {
    std::string cmd = binary() + " " + args + " >/dev/null 2>&1";
    return std::system(cmd.c_str());
}

fs::path fresh_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("dgl_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), ("missing file " + p.string()));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t line_count(const fs::path& p) {
    std::string text = slurp(p);
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n') n++;
    return n;
}

}  // namespace

TEST_CASE("synth then metrics produces every series file plus a manifest") {
    auto gen_dir = fresh_dir("gen");
    REQUIRE(run("synth --mode growth --days 50 --initial-nodes 30 --growth-factor 1.05 "
                "--edges-per-node 3 --seed 5 -o " +
                gen_dir.string()) == 0);
    auto events = gen_dir / "synth.events.csv";
    REQUIRE(fs::exists(events));
    REQUIRE(fs::exists(gen_dir / "synth.truth.json"));
    REQUIRE(fs::exists(gen_dir / "manifest.json"));

    auto met_dir = fresh_dir("met");
    REQUIRE(run("metrics -i " + events.string() + " --cadence-days 10 --path-sample 200 -o " +
                met_dir.string()) == 0);
    for (const char* f :
         {"metrics.new_nodes.csv", "metrics.new_edges.csv", "metrics.relative_growth.csv",
          "metrics.avg_degree.csv", "metrics.avg_path_length.csv", "metrics.avg_clustering.csv",
          "metrics.assortativity.csv"}) {
        CHECK_MESSAGE(fs::exists(met_dir / f), f);
        CHECK(line_count(met_dir / f) >= 2);  // header plus data
    }
    CHECK(slurp(met_dir / "manifest.json").find("\"metrics\"") != std::string::npos);
}

TEST_CASE("ingest reports stats and rejects a malformed stream") {
    auto dir = fresh_dir("ingest");
    auto good = dir / "good.csv";
    std::ofstream(good) << "# comment\n100,N,1\n100,N,2\n200,E,1,2\n";
    REQUIRE(run("ingest -i " + good.string() + " -o " + dir.string()) == 0);
    auto stats = slurp(dir / "ingest.stats.json");
    CHECK(stats.find("\"events\":3") != std::string::npos);
    CHECK(stats.find("\"comments_skipped\":1") != std::string::npos);

    auto bad = dir / "bad.csv";
    std::ofstream(bad) << "100,N,1\nnot-a-line\n";
    CHECK(run("ingest -i " + bad.string() + " -o " + dir.string()) != 0);
    CHECK(run("ingest -i " + (dir / "does_not_exist.csv").string() + " -o " + dir.string()) != 0);
}

TEST_CASE("gzip input is accepted by extension") {
    auto dir = fresh_dir("gzip");
    auto plain = dir / "events.csv";
    std::ofstream(plain) << "100,N,1\n100,N,2\n200,E,1,2\n";
    REQUIRE(std::system(("gzip -k " + plain.string()).c_str()) == 0);
    REQUIRE(run("ingest -i " + (dir / "events.csv.gz").string() + " -o " + dir.string()) == 0);
    CHECK(slurp(dir / "ingest.stats.json").find("\"events\":3") != std::string::npos);
}

TEST_CASE("same seed gives byte-identical reports, fresh seed does not") {
    auto gen_dir = fresh_dir("det_gen");
    REQUIRE(run("synth --mode growth --days 60 --initial-nodes 30 --growth-factor 1.05 "
                "--edges-per-node 3 --seed 11 -o " +
                gen_dir.string()) == 0);
    auto events = (gen_dir / "synth.events.csv").string();

    auto a = fresh_dir("det_a"), b = fresh_dir("det_b"), c = fresh_dir("det_c");
    std::string args = "pa-fit -i " + events + " --window 500 --start-edges 500 --seed 3 -o ";
    REQUIRE(run(args + a.string()) == 0);
    REQUIRE(run(args + b.string()) == 0);
    CHECK(slurp(a / "pa-fit.alpha.csv") == slurp(b / "pa-fit.alpha.csv"));
    CHECK(slurp(a / "manifest.json") == slurp(b / "manifest.json"));
    // a fresh generator seed must actually change the stream downstream
    auto gen2 = fresh_dir("det_gen2");
    REQUIRE(run("synth --mode growth --days 60 --initial-nodes 30 --growth-factor 1.05 "
                "--edges-per-node 3 --seed 12 -o " +
                gen2.string()) == 0);
    REQUIRE(run("pa-fit -i " + (gen2 / "synth.events.csv").string() +
                " --window 500 --start-edges 500 --seed 3 -o " + c.string()) == 0);
    CHECK(slurp(a / "pa-fit.alpha.csv") != slurp(c / "pa-fit.alpha.csv"));
}

TEST_CASE("communities pipeline emits timelines on a planted stream") {
    auto gen_dir = fresh_dir("comm_gen");
    REQUIRE(run("synth --mode planted --days 30 --seed 21 -o " + gen_dir.string()) == 0);
    auto dir = fresh_dir("comm");
    REQUIRE(run("communities -i " + (gen_dir / "synth.events.csv").string() +
                " --cadence-days 3 --seed 21 -o " + dir.string()) == 0);
    CHECK(line_count(dir / "communities.timelines.jsonl") >= 3);
    CHECK(fs::exists(dir / "communities.stats.csv"));
    CHECK(fs::exists(dir / "communities.size_ratio.csv"));
    CHECK(fs::exists(dir / "communities.impact.csv"));
}

TEST_CASE("DGL_SEED environment override applies when no flag is given") {
    auto gen_a = fresh_dir("env_a"), gen_b = fresh_dir("env_b");
    std::string base = std::string("synth --mode growth --days 40 --initial-nodes 20 "
                                   "--growth-factor 1.05 --edges-per-node 2 -o ");
    REQUIRE(std::system(("DGL_SEED=77 " + binary() + " " + base + gen_a.string() +
                         " >/dev/null 2>&1")
                            .c_str()) == 0);
    REQUIRE(std::system(("DGL_SEED=78 " + binary() + " " + base + gen_b.string() +
                         " >/dev/null 2>&1")
                            .c_str()) == 0);
    CHECK(slurp(gen_a / "synth.events.csv") != slurp(gen_b / "synth.events.csv"));
}
