#include "dgl/events.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dgl {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<NodeId, NodeId>& p) const {
        std::uint64_t a = static_cast<std::uint64_t>(p.first);
        std::uint64_t b = static_cast<std::uint64_t>(p.second);
        std::uint64_t h = a * 0x9e3779b97f4a7c15ULL ^ (b + 0x517cc1b727220a95ULL);
        h ^= h >> 32;
        return static_cast<std::size_t>(h * 0xff51afd7ed558ccdULL);
    }
};

std::int64_t parse_int(std::string_view s, std::uint64_t line_no, const char* what) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad " + what +
                                 " '" + std::string(s) + "'");
    return out;
}

// Splits on commas into at most 5 fields.
int split_fields(std::string_view line, std::string_view out[5]) {
    int n = 0;
    std::size_t pos = 0;
    while (n < 5) {
        std::size_t c = line.find(',', pos);
        if (c == std::string_view::npos) {
            out[n++] = line.substr(pos);
            break;
        }
        out[n++] = line.substr(pos, c - pos);
        pos = c + 1;
    }
    return n;
}

struct RawParse {
    std::vector<Event> events;
    std::vector<std::string> networks;
    IngestStats stats;
    std::unordered_map<std::string, std::int16_t> net_index;

    std::int16_t network_id(std::string_view name) {
        auto it = net_index.find(std::string(name));
        if (it != net_index.end()) return it->second;
        auto id = static_cast<std::int16_t>(networks.size());
        networks.emplace_back(name);
        net_index.emplace(networks.back(), id);
        return id;
    }

    void parse_line(std::string_view line, std::uint64_t line_no) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.remove_suffix(1);
        if (line.empty()) return;
        stats.lines_read++;
        if (line[0] == '#') {
            stats.comments_skipped++;
            stats.lines_read--;
            return;
        }
        std::string_view f[5];
        int n = split_fields(line, f);
        if (n < 3) throw std::runtime_error("line " + std::to_string(line_no) + ": too few fields");
        Event ev;
        ev.timestamp = parse_int(f[0], line_no, "timestamp");
        if (f[1] == "N") {
            ev.kind = EventKind::NodeCreate;
            ev.u = parse_int(f[2], line_no, "node id");
            if (n >= 4 && !f[3].empty()) ev.network = network_id(f[3]);
        } else if (f[1] == "E") {
            if (n < 4) throw std::runtime_error("line " + std::to_string(line_no) + ": edge needs two endpoints");
            ev.kind = EventKind::EdgeCreate;
            ev.u = parse_int(f[2], line_no, "node id");
            ev.v = parse_int(f[3], line_no, "node id");
            if (ev.u == ev.v)
                throw std::runtime_error("line " + std::to_string(line_no) + ": self-loop");
            if (n >= 5 && !f[4].empty()) ev.network = network_id(f[4]);
        } else {
            throw std::runtime_error("line " + std::to_string(line_no) + ": unknown kind '" +
                                     std::string(f[1]) + "'");
        }
        events.push_back(ev);
    }
};

EventLog normalize(std::vector<Event> events, std::vector<std::string> networks,
                   IngestStats stats, IngestMode mode) {
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });

    std::unordered_set<NodeId> known;
    std::unordered_set<std::pair<NodeId, NodeId>, PairHash> seen_edges;
    known.reserve(events.size());
    seen_edges.reserve(events.size());

    std::vector<Event> out;
    out.reserve(events.size());
    for (const Event& ev : events) {
        if (ev.kind == EventKind::NodeCreate) {
            known.insert(ev.u);
            out.push_back(ev);
            continue;
        }
        auto key = std::minmax(ev.u, ev.v);
        if (!seen_edges.insert(std::pair(key.first, key.second)).second) {
            stats.duplicates_dropped++;
            continue;
        }
        for (NodeId id : {ev.u, ev.v}) {
            if (known.insert(id).second) {
                if (mode == IngestMode::Strict)
                    throw std::runtime_error("strict mode: edge references unknown node " +
                                             std::to_string(id));
                Event nc;
                nc.timestamp = ev.timestamp;
                nc.kind = EventKind::NodeCreate;
                nc.u = id;
                nc.network = ev.network;
                out.push_back(nc);
                stats.implicit_nodes++;
            }
        }
        out.push_back(ev);
    }
    stats.events = out.size();

    EventLog log;
    log.events = std::move(out);
    log.networks = std::move(networks);
    log.stats = stats;
    return log;
}

}  // namespace

std::string IngestStats::to_json() const {
    std::ostringstream os;
    os << "{\"lines_read\":" << lines_read << ",\"comments_skipped\":" << comments_skipped
       << ",\"duplicates_dropped\":" << duplicates_dropped
       << ",\"implicit_nodes\":" << implicit_nodes << ",\"events\":" << events << "}";
    return os.str();
}

Timestamp EventLog::first_time() const {
    if (events.empty()) throw std::runtime_error("empty event log");
    return events.front().timestamp;
}

Timestamp EventLog::last_time() const {
    if (events.empty()) throw std::runtime_error("empty event log");
    return events.back().timestamp;
}

std::size_t EventLog::edge_count() const {
    std::size_t n = 0;
    for (const Event& e : events)
        if (e.kind == EventKind::EdgeCreate) n++;
    return n;
}

EventLog ingest(std::istream& in, IngestMode mode) {
    RawParse raw;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        raw.parse_line(line, line_no);
    }
    return normalize(std::move(raw.events), std::move(raw.networks), raw.stats, mode);
}

EventLog ingest_file(const std::string& path, IngestMode mode) {
    if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
        gzFile gz = gzopen(path.c_str(), "rb");
        if (!gz) throw std::runtime_error("cannot open " + path);
        std::string buf;
        char chunk[1 << 16];
        int got;
        while ((got = gzread(gz, chunk, sizeof(chunk))) > 0) buf.append(chunk, got);
        bool bad = got < 0;
        gzclose(gz);
        if (bad) throw std::runtime_error("gzip read error on " + path);
        std::istringstream is(buf);
        return ingest(is, mode);
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return ingest(in, mode);
}

EventLog finalize_log(std::vector<Event> events, IngestMode mode,
                      std::vector<std::string> networks) {
    return normalize(std::move(events), std::move(networks), IngestStats{}, mode);
}

}  // namespace dgl
