#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dgl {

using NodeId = std::int64_t;
using Timestamp = std::int64_t;

constexpr Timestamp kSecondsPerDay = 86400;

enum class EventKind : std::uint8_t { NodeCreate, EdgeCreate };

// One timestamped creation event. `network` indexes into EventLog::networks
// (-1 when untagged).
struct Event {
    Timestamp timestamp = 0;
    EventKind kind = EventKind::NodeCreate;
    NodeId u = 0;
    NodeId v = 0;  // valid iff kind == EdgeCreate
    std::int16_t network = -1;
};

struct IngestStats {
    std::uint64_t lines_read = 0;
    std::uint64_t comments_skipped = 0;
    std::uint64_t duplicates_dropped = 0;
    std::uint64_t implicit_nodes = 0;
    std::uint64_t events = 0;

    std::string to_json() const;
};

// Sorted-by-timestamp event stream plus the network tag table.
struct EventLog {
    std::vector<Event> events;
    std::vector<std::string> networks;
    IngestStats stats;

    Timestamp first_time() const;
    Timestamp last_time() const;
    std::size_t edge_count() const;

    // Day index of t relative to the first event.
    std::int64_t day_of(Timestamp t) const {
        return (t - first_time()) / kSecondsPerDay;
    }

    const std::string* network_name(std::int16_t idx) const {
        if (idx < 0 || static_cast<std::size_t>(idx) >= networks.size()) return nullptr;
        return &networks[static_cast<std::size_t>(idx)];
    }
};

enum class IngestMode { Strict, Lenient };

// Parses the line format `timestamp,N,node[,network]` / `timestamp,E,u,v[,network]`.
// Lines starting with '#' are skipped. Events are stably sorted by timestamp,
// duplicate undirected edges dropped, and (in lenient mode) unseen edge
// endpoints materialized as NodeCreate events at the edge's timestamp.
// Throws std::runtime_error with the offending line number on parse errors.
EventLog ingest(std::istream& in, IngestMode mode = IngestMode::Lenient);

// File variant; names ending in .gz are decompressed transparently.
EventLog ingest_file(const std::string& path, IngestMode mode = IngestMode::Lenient);

// Normalizes a raw event vector the same way ingest() does (stable sort,
// dedupe, implicit node creation). Used by generators and tests that build
// logs programmatically.
EventLog finalize_log(std::vector<Event> events, IngestMode mode = IngestMode::Lenient,
                      std::vector<std::string> networks = {});

}  // namespace dgl
