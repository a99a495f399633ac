#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "dgl/events.hpp"

namespace dgl {

// Undirected simple graph materialized at a cut-off time. Nodes are stored
// under dense internal indices; external ids stay whatever the stream used.
class Snapshot {
public:
    using Index = std::uint32_t;

    Timestamp cut_time() const { return cut_time_; }
    std::size_t node_count() const { return join_time_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<Index>& neighbors(Index i) const { return adj_[i]; }
    std::size_t degree(Index i) const { return adj_[i].size(); }
    Timestamp join_time(Index i) const { return join_time_[i]; }
    NodeId external_id(Index i) const { return ids_[i]; }

    // Returns the dense index of an external id, or npos if absent.
    static constexpr Index npos = static_cast<Index>(-1);
    Index index_of(NodeId id) const {
        auto it = index_.find(id);
        return it == index_.end() ? npos : it->second;
    }

    bool has_edge(Index a, Index b) const;

    // Verifies symmetry, simplicity and the degree-sum identity; throws on
    // violation. Debug aid, linear in graph size.
    void audit() const;

private:
    friend class SnapshotStream;
    Timestamp cut_time_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Index>> adj_;
    std::vector<Timestamp> join_time_;
    std::vector<NodeId> ids_;
    std::unordered_map<NodeId, Index> index_;
};

// Incremental replay cursor over an event log. advance_to applies the delta
// between the current cut and the new one; the snapshot is never rebuilt.
class SnapshotStream {
public:
    explicit SnapshotStream(const EventLog& log);

    // Moves the cut forward to `cut_time` (monotone) and returns the graph.
    const Snapshot& advance_to(Timestamp cut_time);

    const Snapshot& current() const { return snap_; }
    bool exhausted() const { return pos_ == log_->events.size(); }

private:
    const EventLog* log_;
    std::size_t pos_ = 0;
    Snapshot snap_;
};

// Graph induced by all events with timestamp <= cut_time.
Snapshot snapshot_at(const EventLog& log, Timestamp cut_time);

// Snapshots at start, start+cadence, ... up to the last event, built
// incrementally. Each element equals snapshot_at at its cut.
std::vector<Snapshot> snapshot_series(const EventLog& log, Timestamp start, Timestamp cadence);

// Streaming variant: calls visit once per cut with a reference that is only
// valid during the call. Used when materializing every snapshot is too big.
void for_each_snapshot(const EventLog& log, Timestamp start, Timestamp cadence,
                       const std::function<void(const Snapshot&)>& visit);

}  // namespace dgl
