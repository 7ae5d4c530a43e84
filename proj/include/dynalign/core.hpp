#ifndef DYNALIGN_CORE_HPP
#define DYNALIGN_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dynalign {

using Timestamp = double;
using NodeIndex = std::uint32_t;

// Raised for any semantically invalid input (bad event, bad mapping, bad file).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A temporal edge: nodes u and v interact over [t_start, t_end]. Endpoints are
// stored with u < v.
struct Event {
    NodeIndex u = 0;
    NodeIndex v = 0;
    Timestamp t_start = 0;
    Timestamp t_end = 0;

    double duration() const { return t_end - t_start; }

    friend bool operator==(const Event& a, const Event& b) = default;
};

inline std::uint64_t pair_key(NodeIndex a, NodeIndex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

namespace detail {

class LabelTable {
public:
    NodeIndex intern(const std::string& label) {
        auto it = index_.find(label);
        if (it != index_.end()) return it->second;
        NodeIndex id = static_cast<NodeIndex>(labels_.size());
        labels_.push_back(label);
        index_.emplace(label, id);
        return id;
    }

    std::optional<NodeIndex> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& label(NodeIndex i) const { return labels_[i]; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeIndex> index_;
};

}  // namespace detail

// Events between one node pair, time-sorted and pairwise disjoint.
struct PairTimeline {
    NodeIndex u = 0;
    NodeIndex v = 0;
    std::span<const Event> events;
};

// A node set plus an event set. Immutable once built; all views returned by
// accessors stay valid for the lifetime of the network, so instances can be
// shared read-only across threads.
class DynamicNetwork {
public:
    class Builder;

    std::size_t num_nodes() const { return labels_.size(); }
    std::size_t num_events() const { return events_.size(); }

    const std::string& label(NodeIndex i) const { return labels_.label(i); }
    const std::vector<std::string>& labels() const { return labels_.labels(); }
    std::optional<NodeIndex> index_of(const std::string& label) const { return labels_.find(label); }

    std::span<const Event> events() const { return events_; }

    // One entry per node pair that carries at least one event.
    std::span<const PairTimeline> pairs() const { return pairs_; }

    std::span<const Event> events_between(NodeIndex a, NodeIndex b) const {
        auto it = pair_slot_.find(pair_key(a, b));
        if (it == pair_slot_.end()) return {};
        return pairs_[it->second].events;
    }

    double total_duration() const { return total_duration_; }

    bool operator==(const DynamicNetwork& other) const {
        return canonical_form() == other.canonical_form();
    }

private:
    using CanonicalEvent = std::tuple<std::string, std::string, Timestamp, Timestamp>;

    std::vector<std::string> sorted_labels() const {
        std::vector<std::string> ls = labels_.labels();
        std::sort(ls.begin(), ls.end());
        return ls;
    }

    std::pair<std::vector<std::string>, std::vector<CanonicalEvent>> canonical_form() const {
        std::vector<CanonicalEvent> evs;
        evs.reserve(events_.size());
        for (const Event& e : events_) {
            std::string lu = label(e.u), lv = label(e.v);
            if (lv < lu) std::swap(lu, lv);
            evs.emplace_back(std::move(lu), std::move(lv), e.t_start, e.t_end);
        }
        std::sort(evs.begin(), evs.end());
        return {sorted_labels(), std::move(evs)};
    }

    detail::LabelTable labels_;
    std::vector<Event> events_;  // grouped by pair, time-sorted within a pair
    std::vector<PairTimeline> pairs_;
    std::unordered_map<std::uint64_t, std::size_t> pair_slot_;
    double total_duration_ = 0;
};

class DynamicNetwork::Builder {
public:
    NodeIndex add_node(const std::string& label) { return net_.labels_.intern(label); }

    void add_event(const std::string& u, const std::string& v, Timestamp t_start, Timestamp t_end) {
        add_event(add_node(u), add_node(v), t_start, t_end);
    }

    void add_event(NodeIndex u, NodeIndex v, Timestamp t_start, Timestamp t_end) {
        if (u == v) throw DataError("self-loop event on node '" + net_.labels_.label(u) + "'");
        if (!(std::isfinite(t_start) && std::isfinite(t_end)))
            throw DataError("non-finite event timestamp");
        if (t_end < t_start)
            throw DataError("negative-duration event between '" + net_.labels_.label(u) + "' and '" +
                            net_.labels_.label(v) + "'");
        if (u > v) std::swap(u, v);
        raw_.push_back(Event{u, v, t_start, t_end});
    }

    // Groups events by pair, merges any overlapping or abutting intervals on
    // the same pair, and freezes the network.
    DynamicNetwork build() && {
        std::sort(raw_.begin(), raw_.end(), [](const Event& a, const Event& b) {
            return std::tuple(a.u, a.v, a.t_start, a.t_end) < std::tuple(b.u, b.v, b.t_start, b.t_end);
        });
        DynamicNetwork net = std::move(net_);
        net.events_.reserve(raw_.size());
        for (const Event& e : raw_) {
            Event* last = net.events_.empty() ? nullptr : &net.events_.back();
            if (last != nullptr && last->u == e.u && last->v == e.v && e.t_start <= last->t_end) {
                last->t_end = std::max(last->t_end, e.t_end);
            } else {
                net.events_.push_back(e);
            }
        }
        std::size_t i = 0;
        while (i < net.events_.size()) {
            std::size_t j = i;
            while (j < net.events_.size() && net.events_[j].u == net.events_[i].u &&
                   net.events_[j].v == net.events_[i].v) {
                ++j;
            }
            net.pair_slot_.emplace(pair_key(net.events_[i].u, net.events_[i].v), net.pairs_.size());
            net.pairs_.push_back(PairTimeline{net.events_[i].u, net.events_[i].v,
                                              std::span<const Event>(net.events_.data() + i, j - i)});
            i = j;
        }
        double total = 0;
        for (const Event& e : net.events_) total += e.duration();
        net.total_duration_ = total;
        return net;
    }

private:
    DynamicNetwork net_;
    std::vector<Event> raw_;
};

// A simple undirected graph: no self-loops, no parallel edges.
class StaticNetwork {
public:
    class Builder;

    std::size_t num_nodes() const { return labels_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::string& label(NodeIndex i) const { return labels_.label(i); }
    const std::vector<std::string>& labels() const { return labels_.labels(); }
    std::optional<NodeIndex> index_of(const std::string& label) const { return labels_.find(label); }

    std::span<const std::pair<NodeIndex, NodeIndex>> edges() const { return edges_; }

    bool has_edge(NodeIndex a, NodeIndex b) const {
        return edge_set_.count(pair_key(a, b)) != 0;
    }

    std::span<const NodeIndex> neighbors(NodeIndex v) const { return adjacency_[v]; }

    std::size_t degree(NodeIndex v) const { return adjacency_[v].size(); }

private:
    detail::LabelTable labels_;
    std::vector<std::pair<NodeIndex, NodeIndex>> edges_;
    std::unordered_set<std::uint64_t> edge_set_;
    std::vector<std::vector<NodeIndex>> adjacency_;
};

class StaticNetwork::Builder {
public:
    NodeIndex add_node(const std::string& label) { return net_.labels_.intern(label); }

    void add_edge(const std::string& u, const std::string& v) { add_edge(add_node(u), add_node(v)); }

    void add_edge(NodeIndex u, NodeIndex v) {
        if (u == v) throw DataError("self-loop edge on node '" + net_.labels_.label(u) + "'");
        if (u > v) std::swap(u, v);
        if (net_.edge_set_.insert(pair_key(u, v)).second) {
            net_.edges_.emplace_back(u, v);
        }
    }

    StaticNetwork build() && {
        StaticNetwork net = std::move(net_);
        std::sort(net.edges_.begin(), net.edges_.end());
        net.adjacency_.assign(net.labels_.size(), {});
        for (auto [u, v] : net.edges_) {
            net.adjacency_[u].push_back(v);
            net.adjacency_[v].push_back(u);
        }
        for (auto& adj : net.adjacency_) std::sort(adj.begin(), adj.end());
        return net;
    }

private:
    StaticNetwork net_;
};

// Injective node mapping from the smaller network into the larger one. Entry i
// is the target index aligned with source node i.
class Alignment {
public:
    Alignment() = default;

    Alignment(std::vector<NodeIndex> mapping, std::size_t target_size)
        : mapping_(std::move(mapping)), target_size_(target_size) {
        if (mapping_.size() > target_size_)
            throw DataError("alignment source larger than target (|V1| must be <= |V2|)");
        std::vector<bool> used(target_size_, false);
        for (NodeIndex t : mapping_) {
            if (t >= target_size_) throw DataError("alignment target index out of range");
            if (used[t]) throw DataError("alignment is not injective");
            used[t] = true;
        }
    }

    std::size_t size() const { return mapping_.size(); }
    std::size_t target_size() const { return target_size_; }
    NodeIndex operator[](std::size_t i) const { return mapping_[i]; }
    std::span<const NodeIndex> mapping() const { return mapping_; }

    friend bool operator==(const Alignment& a, const Alignment& b) = default;

private:
    std::vector<NodeIndex> mapping_;
    std::size_t target_size_ = 0;
};

// The mapping that sends every node of `from` to the node of `to` carrying the
// same label. Both networks must have identical label sets.
template <typename NetA, typename NetB>
Alignment ground_truth_alignment(const NetA& from, const NetB& to) {
    if (from.num_nodes() != to.num_nodes())
        throw DataError("ground truth requires equally sized node sets");
    std::vector<NodeIndex> mapping(from.num_nodes());
    for (NodeIndex i = 0; i < from.num_nodes(); ++i) {
        auto t = to.index_of(from.label(i));
        if (!t) throw DataError("node '" + from.label(i) + "' has no counterpart");
        mapping[i] = *t;
    }
    return Alignment(std::move(mapping), to.num_nodes());
}

// Converts a snapshot sequence into the event-duration representation: an edge
// in snapshot t (1-based) becomes the event (u, v, t, t+1); runs over
// consecutive snapshots merge into one longer event.
inline DynamicNetwork from_snapshots(const std::vector<StaticNetwork>& snapshots) {
    if (snapshots.empty()) throw DataError("empty snapshot list");
    DynamicNetwork::Builder builder;
    for (std::size_t t = 0; t < snapshots.size(); ++t) {
        const StaticNetwork& snap = snapshots[t];
        for (NodeIndex i = 0; i < snap.num_nodes(); ++i) builder.add_node(snap.label(i));
        for (auto [u, v] : snap.edges()) {
            builder.add_event(snap.label(u), snap.label(v), static_cast<Timestamp>(t + 1),
                              static_cast<Timestamp>(t + 2));
        }
    }
    return std::move(builder).build();
}

// Aggregates a dynamic network: an edge exists wherever at least one event does.
inline StaticNetwork flatten(const DynamicNetwork& net) {
    StaticNetwork::Builder builder;
    for (NodeIndex i = 0; i < net.num_nodes(); ++i) builder.add_node(net.label(i));
    for (const PairTimeline& pt : net.pairs()) builder.add_edge(pt.u, pt.v);
    return std::move(builder).build();
}

// Lengthens every event by delta_t, re-merging events that come to overlap.
inline DynamicNetwork extend_durations(const DynamicNetwork& net, double delta_t) {
    if (delta_t < 0) throw DataError("negative duration extension");
    DynamicNetwork::Builder builder;
    for (NodeIndex i = 0; i < net.num_nodes(); ++i) builder.add_node(net.label(i));
    for (const Event& e : net.events()) builder.add_event(e.u, e.v, e.t_start, e.t_end + delta_t);
    return std::move(builder).build();
}

}  // namespace dynalign

#endif  // DYNALIGN_CORE_HPP
