#ifndef DYNALIGN_RANDOMIZE_HPP
#define DYNALIGN_RANDOMIZE_HPP

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dynalign/core.hpp"
#include "dynalign/rng.hpp"

namespace dynalign {

enum class NoiseScheme { time_swap, rewire };

struct NoiseSpec {
    NoiseScheme scheme = NoiseScheme::time_swap;
    double level = 0;  // probability p that an event is perturbed
    std::uint64_t seed = 0;
    int replicate_count = 5;

    void validate() const {
        if (level < 0.0 || level > 1.0) throw DataError("noise level must lie in [0, 1]");
        if (replicate_count < 1) throw DataError("replicate count must be positive");
    }
};

// Ten noise levels, finer at the meaningful low end.
inline const std::vector<double>& default_noise_grid() {
    static const std::vector<double> grid = {0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.40, 0.60, 0.80, 1.0};
    return grid;
}

struct NoiseStats {
    std::size_t selected = 0;  // events picked for perturbation
    std::size_t applied = 0;   // perturbations that stuck
    std::size_t skipped = 0;   // events left alone after exhausting retries
};

namespace detail {

constexpr int kNoiseRetryLimit = 100;

// Mutable event table with a per-pair index for overlap checks while noise is
// applied. Two events on the same pair may not overlap or even touch, since
// touching intervals merge on ingestion and merging would change the event
// count and timestamp multiset the noise models promise to preserve.
class NoiseTable {
public:
    explicit NoiseTable(const DynamicNetwork& net)
        : labels_(net.labels()), events_(net.events().begin(), net.events().end()) {
        for (std::size_t i = 0; i < events_.size(); ++i)
            buckets_[pair_key(events_[i].u, events_[i].v)].push_back(i);
    }

    std::size_t size() const { return events_.size(); }
    Event& at(std::size_t i) { return events_[i]; }

    bool interval_fits(NodeIndex u, NodeIndex v, Timestamp ts, Timestamp te, std::size_t skip_a,
                       std::size_t skip_b) const {
        auto it = buckets_.find(pair_key(u, v));
        if (it == buckets_.end()) return true;
        for (std::size_t other : it->second) {
            if (other == skip_a || other == skip_b) continue;
            const Event& e = events_[other];
            if (ts <= e.t_end && e.t_start <= te) return false;
        }
        return true;
    }

    void move_pair(std::size_t i, NodeIndex u, NodeIndex v) {
        if (u > v) std::swap(u, v);
        auto& from = buckets_[pair_key(events_[i].u, events_[i].v)];
        from.erase(std::find(from.begin(), from.end(), i));
        events_[i].u = u;
        events_[i].v = v;
        buckets_[pair_key(u, v)].push_back(i);
    }

    DynamicNetwork build() const {
        DynamicNetwork::Builder builder;
        for (const std::string& label : labels_) builder.add_node(label);
        for (const Event& e : events_) builder.add_event(e.u, e.v, e.t_start, e.t_end);
        DynamicNetwork net = std::move(builder).build();
        if (net.num_events() != events_.size())
            throw DataError("internal error: noise model produced mergeable events");
        return net;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Event> events_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

}  // namespace detail

// Strict randomization: with probability p, an event trades its (t_start,
// t_end) stamp with another event chosen uniformly at random. Endpoints never
// change, so the flattened structure, the event count, and the timestamp
// multiset are all preserved exactly. A swap that would make two events on the
// same pair overlap is undone and redrawn (bounded retries).
inline DynamicNetwork time_swap(const DynamicNetwork& net, double p, Rng& rng,
                                NoiseStats* stats = nullptr) {
    detail::NoiseTable table(net);
    NoiseStats local;
    const std::size_t m = table.size();
    if (m >= 2) {
        for (std::size_t i = 0; i < m; ++i) {
            if (rng.next_double() >= p) continue;
            ++local.selected;
            bool done = false;
            for (int attempt = 0; attempt < detail::kNoiseRetryLimit && !done; ++attempt) {
                std::size_t j = static_cast<std::size_t>(rng.next_below(m - 1));
                if (j >= i) ++j;
                Event& ei = table.at(i);
                Event& ej = table.at(j);
                std::swap(ei.t_start, ej.t_start);
                std::swap(ei.t_end, ej.t_end);
                const bool same_pair = ei.u == ej.u && ei.v == ej.v;
                if (same_pair ||
                    (table.interval_fits(ei.u, ei.v, ei.t_start, ei.t_end, i, j) &&
                     table.interval_fits(ej.u, ej.v, ej.t_start, ej.t_end, i, j))) {
                    done = true;
                    ++local.applied;
                } else {
                    std::swap(ei.t_start, ej.t_start);
                    std::swap(ei.t_end, ej.t_end);
                }
            }
            if (!done) ++local.skipped;
        }
    }
    if (stats != nullptr) *stats = local;
    return table.build();
}

// Flexible randomization: with probability p, an event and a random partner
// exchange one endpoint (two exchange patterns, a fair coin between them).
// Each event keeps its own timestamps, so the timestamp multiset, the event
// count, and the total duration are preserved; the flattened structure is not.
// Rewirings that would create a self-loop or overlapping same-pair events are
// undone and redrawn (bounded retries).
inline DynamicNetwork rewire(const DynamicNetwork& net, double p, Rng& rng,
                             NoiseStats* stats = nullptr) {
    detail::NoiseTable table(net);
    NoiseStats local;
    const std::size_t m = table.size();
    if (m >= 2) {
        for (std::size_t i = 0; i < m; ++i) {
            if (rng.next_double() >= p) continue;
            ++local.selected;
            bool done = false;
            for (int attempt = 0; attempt < detail::kNoiseRetryLimit && !done; ++attempt) {
                std::size_t j = static_cast<std::size_t>(rng.next_below(m - 1));
                if (j >= i) ++j;
                const Event ei = table.at(i);
                const Event ej = table.at(j);
                NodeIndex iu, iv, ju, jv;
                if (rng.next_bool()) {
                    iu = ei.u; iv = ej.v; ju = ej.u; jv = ei.v;
                } else {
                    iu = ei.u; iv = ej.u; ju = ei.v; jv = ej.v;
                }
                if (iu == iv || ju == jv) continue;
                auto norm = [](NodeIndex a, NodeIndex b) {
                    return a < b ? std::pair(a, b) : std::pair(b, a);
                };
                auto [ia, ib] = norm(iu, iv);
                auto [ja, jb] = norm(ju, jv);
                if (!table.interval_fits(ia, ib, ei.t_start, ei.t_end, i, j)) continue;
                if (!table.interval_fits(ja, jb, ej.t_start, ej.t_end, i, j)) continue;
                if (ia == ja && ib == jb && ei.t_start <= ej.t_end && ej.t_start <= ei.t_end) continue;
                table.move_pair(i, ia, ib);
                table.move_pair(j, ja, jb);
                done = true;
                ++local.applied;
            }
            if (!done) ++local.skipped;
        }
    }
    if (stats != nullptr) *stats = local;
    return table.build();
}

inline DynamicNetwork apply_noise(const DynamicNetwork& net, NoiseScheme scheme, double p, Rng& rng,
                                  NoiseStats* stats = nullptr) {
    return scheme == NoiseScheme::time_swap ? time_swap(net, p, rng, stats)
                                            : rewire(net, p, rng, stats);
}

inline const char* noise_scheme_name(NoiseScheme scheme) {
    return scheme == NoiseScheme::time_swap ? "time-swap" : "rewire";
}

}  // namespace dynalign

#endif  // DYNALIGN_RANDOMIZE_HPP
