#include "dgl/snapshot.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgl {

bool Snapshot::has_edge(Index a, Index b) const {
    const auto& na = adj_[a];
    const auto& nb = adj_[b];
    const auto& smaller = na.size() <= nb.size() ? na : nb;
    Index target = na.size() <= nb.size() ? b : a;
    return std::find(smaller.begin(), smaller.end(), target) != smaller.end();
}

void Snapshot::audit() const {
    std::size_t deg_sum = 0;
    for (Index i = 0; i < adj_.size(); i++) {
        deg_sum += adj_[i].size();
        for (Index j : adj_[i]) {
            if (j == i) throw std::runtime_error("audit: self-loop at node " + std::to_string(ids_[i]));
            if (j >= adj_.size()) throw std::runtime_error("audit: dangling neighbor index");
            const auto& back = adj_[j];
            if (std::count(back.begin(), back.end(), i) != 1)
                throw std::runtime_error("audit: asymmetric or duplicate edge");
        }
        auto sorted = adj_[i];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::runtime_error("audit: duplicate neighbor");
        if (join_time_[i] > cut_time_) throw std::runtime_error("audit: join after cut");
    }
    if (deg_sum != 2 * edge_count_) throw std::runtime_error("audit: degree sum mismatch");
}

SnapshotStream::SnapshotStream(const EventLog& log) : log_(&log) {
    snap_.cut_time_ = log.events.empty() ? 0 : log.events.front().timestamp - 1;
}

const Snapshot& SnapshotStream::advance_to(Timestamp cut_time) {
    if (cut_time < snap_.cut_time_)
        throw std::runtime_error("snapshot stream cannot move backwards");
    const auto& events = log_->events;
    while (pos_ < events.size() && events[pos_].timestamp <= cut_time) {
        const Event& ev = events[pos_];
        if (ev.kind == EventKind::NodeCreate) {
            auto [it, fresh] = snap_.index_.try_emplace(
                ev.u, static_cast<Snapshot::Index>(snap_.ids_.size()));
            if (fresh) {
                snap_.ids_.push_back(ev.u);
                snap_.join_time_.push_back(ev.timestamp);
                snap_.adj_.emplace_back();
            }
        } else {
            auto a = snap_.index_.at(ev.u);
            auto b = snap_.index_.at(ev.v);
            snap_.adj_[a].push_back(b);
            snap_.adj_[b].push_back(a);
            snap_.edge_count_++;
        }
        pos_++;
    }
    snap_.cut_time_ = cut_time;
    return snap_;
}

Snapshot snapshot_at(const EventLog& log, Timestamp cut_time) {
    if (log.events.empty() || cut_time < log.first_time())
        throw std::runtime_error("cut_time precedes first event");
    SnapshotStream stream(log);
    return stream.advance_to(cut_time);  // copies out the materialized graph
}

std::vector<Snapshot> snapshot_series(const EventLog& log, Timestamp start, Timestamp cadence) {
    std::vector<Snapshot> out;
    for_each_snapshot(log, start, cadence, [&](const Snapshot& s) { out.push_back(s); });
    return out;
}

void for_each_snapshot(const EventLog& log, Timestamp start, Timestamp cadence,
                       const std::function<void(const Snapshot&)>& visit) {
    if (cadence <= 0) throw std::runtime_error("cadence must be positive");
    if (log.events.empty() || start < log.first_time())
        throw std::runtime_error("cut_time precedes first event");
    SnapshotStream stream(log);
    Timestamp last = log.last_time();
    for (Timestamp cut = start; cut <= last; cut += cadence) visit(stream.advance_to(cut));
}

}  // namespace dgl
