#include <sstream>

#include "dgl/events.hpp"
#include "doctest.h"

using namespace dgl;

TEST_CASE("minimal well-formed stream") {
    std::istringstream in("1,N,1\n2,N,2\n3,E,1,2\n");
    auto log = ingest(in);
    CHECK(log.events.size() == 3);
    CHECK(log.stats.duplicates_dropped == 0);
    CHECK(log.events[2].kind == EventKind::EdgeCreate);
}

TEST_CASE("duplicate edges dropped and counted") {
    std::istringstream in("1,N,1\n2,N,2\n3,E,1,2\n4,E,2,1\n");
    auto log = ingest(in);
    CHECK(log.events.size() == 3);
    CHECK(log.stats.duplicates_dropped == 1);
}

TEST_CASE("lenient mode materializes endpoints") {
    std::istringstream in("7,E,5,6\n");
    auto log = ingest(in, IngestMode::Lenient);
    CHECK(log.stats.implicit_nodes == 2);
    REQUIRE(log.events.size() == 3);
    CHECK(log.events[0].kind == EventKind::NodeCreate);
    CHECK(log.events[0].timestamp == 7);
    CHECK(log.events[2].kind == EventKind::EdgeCreate);
}

TEST_CASE("strict mode rejects unknown endpoints") {
    std::istringstream in("7,E,5,6\n");
    CHECK_THROWS(ingest(in, IngestMode::Strict));
}

TEST_CASE("malformed lines report line numbers") {
    std::istringstream in("1,N,1\nbogus line\n");
    CHECK_THROWS_WITH_AS(ingest(in), doctest::Contains("line 2"), std::runtime_error);

    std::istringstream in2("1,N,abc\n");
    CHECK_THROWS_WITH_AS(ingest(in2), doctest::Contains("line 1"), std::runtime_error);
}

TEST_CASE("self-loops rejected") {
    std::istringstream in("1,E,4,4\n");
    CHECK_THROWS(ingest(in));
}

TEST_CASE("comments and network tags") {
    std::istringstream in("# header\n1,N,1,A\n1,N,2,B\n2,E,1,2,A\n");
    auto log = ingest(in);
    CHECK(log.stats.comments_skipped == 1);
    REQUIRE(log.networks.size() == 2);
    CHECK(*log.network_name(log.events[0].network) == "A");
}

TEST_CASE("stable sort preserves same-timestamp input order") {
    std::istringstream in("5,N,10\n1,N,1\n5,N,20\n5,N,30\n");
    auto log = ingest(in);
    REQUIRE(log.events.size() == 4);
    CHECK(log.events[0].u == 1);
    CHECK(log.events[1].u == 10);
    CHECK(log.events[2].u == 20);
    CHECK(log.events[3].u == 30);
}

TEST_CASE("stats json shape") {
    std::istringstream in("1,N,1\n");
    auto log = ingest(in);
    CHECK(log.stats.to_json().find("\"events\":1") != std::string::npos);
}
