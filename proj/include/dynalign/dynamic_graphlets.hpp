#ifndef DYNALIGN_DYNAMIC_GRAPHLETS_HPP
#define DYNALIGN_DYNAMIC_GRAPHLETS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "dynalign/core.hpp"
#include "dynalign/graphlets.hpp"

namespace dynalign {

namespace detail {

// A dynamic graphlet shape is the sequence of node pairs hit by its events in
// temporal order, over nodes labeled 0..n-1. Pairs are encoded as 3-bit codes
// packed into a 32-bit key (code 0 terminates the sequence).
constexpr std::uint8_t kPairCode[4][4] = {
    {0, 1, 2, 4},
    {1, 0, 3, 5},
    {2, 3, 0, 6},
    {4, 5, 6, 0},
};

constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 7> kCodePair = {{
    {0, 0}, {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3},
}};

inline std::uint32_t append_pair(std::uint32_t key, unsigned position, unsigned a, unsigned b) {
    return key | (static_cast<std::uint32_t>(kPairCode[a][b]) << (3 * position));
}

using PairSeq = std::vector<std::pair<std::uint8_t, std::uint8_t>>;

inline std::uint32_t seq_key(const PairSeq& seq) {
    std::uint32_t key = 0;
    for (unsigned i = 0; i < seq.size(); ++i) key = append_pair(key, i, seq[i].first, seq[i].second);
    return key;
}

inline PairSeq relabel_seq(const PairSeq& seq, const std::array<std::uint8_t, 4>& perm) {
    PairSeq out(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::uint8_t a = perm[seq[i].first], b = perm[seq[i].second];
        if (a > b) std::swap(a, b);
        out[i] = {a, b};
    }
    return out;
}

}  // namespace detail

// Catalog of dynamic graphlets: equivalence classes of event sequences in
// which consecutive events share a node and events are strictly ordered in
// time, up to relabeling of nodes. Orbits are the automorphism classes of the
// touched nodes, so they reflect both the topological and the temporal
// position of a node. At (4 nodes, 6 events) the catalog has 981 graphlets
// with 3,727 orbits.
class DynamicGraphletCatalog {
public:
    DynamicGraphletCatalog(int max_nodes, int max_events) : max_nodes_(max_nodes), max_events_(max_events) {
        if (max_nodes < 2 || max_nodes > 4) throw DataError("dynamic graphlets support 2..4 nodes");
        if (max_events < 1 || max_events > 8) throw DataError("dynamic graphlets support 1..8 events");
        build();
    }

    static const DynamicGraphletCatalog& standard() {
        static const DynamicGraphletCatalog catalog(4, 6);
        return catalog;
    }

    int max_nodes() const { return max_nodes_; }
    int max_events() const { return max_events_; }
    int graphlet_count() const { return static_cast<int>(graphlet_nodes_.size()); }
    int orbit_count() const { return static_cast<int>(orbit_graphlet_.size()); }

    int graphlet_nodes(int g) const { return graphlet_nodes_[g]; }
    int graphlet_events(int g) const { return graphlet_events_[g]; }
    int orbit_graphlet(int orbit) const { return orbit_graphlet_[orbit]; }

    // Orbit ids per node label for a first-touch-labeled shape key.
    const std::array<std::uint16_t, 4>& orbits_for(std::uint32_t key) const {
        return lookup_.at(key);
    }

private:
    void build() {
        // Enumerate every shape whose node labels appear in first-touch order.
        detail::PairSeq seq;
        seq.reserve(max_events_);
        std::vector<detail::PairSeq> shapes;
        enumerate(seq, 0, shapes);

        // Group shapes into isomorphism classes via canonical relabeling.
        struct ClassInfo {
            detail::PairSeq canon;
            unsigned n;
            std::vector<std::uint32_t> member_keys;
            std::vector<detail::PairSeq> members;
        };
        std::map<std::tuple<unsigned, std::size_t, detail::PairSeq>, ClassInfo> classes;
        for (const detail::PairSeq& shape : shapes) {
            unsigned n = 0;
            for (auto [a, b] : shape) n = std::max({n, a + 1u, b + 1u});
            auto perms = detail::permutations_of(n);
            detail::PairSeq canon = shape;
            for (const auto& p : perms) canon = std::min(canon, detail::relabel_seq(shape, p));
            auto& cls = classes[{n, shape.size(), canon}];
            cls.canon = canon;
            cls.n = n;
            cls.member_keys.push_back(detail::seq_key(shape));
            cls.members.push_back(shape);
        }

        for (auto& [sort_key, cls] : classes) {
            unsigned n = cls.n;
            auto perms = detail::permutations_of(n);

            // Automorphism orbits of the canonical representative.
            std::array<unsigned, 4> comp{0, 1, 2, 3};
            auto find = [&](unsigned x) {
                while (comp[x] != x) x = comp[x] = comp[comp[x]];
                return x;
            };
            for (const auto& p : perms) {
                if (detail::relabel_seq(cls.canon, p) == cls.canon) {
                    for (unsigned v = 0; v < n; ++v) comp[find(v)] = find(p[v]);
                }
            }
            std::vector<unsigned> reps;
            for (unsigned v = 0; v < n; ++v)
                if (find(v) == v) reps.push_back(v);
            std::sort(reps.begin(), reps.end());

            int graphlet_id = static_cast<int>(graphlet_nodes_.size());
            std::uint16_t orbit_base = static_cast<std::uint16_t>(orbit_graphlet_.size());
            std::array<std::uint16_t, 4> canon_orbit{0, 0, 0, 0};
            for (unsigned v = 0; v < n; ++v) {
                unsigned rep = find(v);
                auto pos = std::find(reps.begin(), reps.end(), rep) - reps.begin();
                canon_orbit[v] = static_cast<std::uint16_t>(orbit_base + pos);
            }
            for (std::size_t i = 0; i < reps.size(); ++i) orbit_graphlet_.push_back(graphlet_id);
            graphlet_nodes_.push_back(static_cast<int>(n));
            graphlet_events_.push_back(static_cast<int>(cls.canon.size()));

            // Every first-touch-labeled member maps its labels onto canonical
            // orbits through any relabeling that reaches the canonical form;
            // the choice does not matter because orbits absorb automorphisms.
            for (std::size_t m = 0; m < cls.members.size(); ++m) {
                const detail::PairSeq& member = cls.members[m];
                std::array<std::uint16_t, 4> orbits{0, 0, 0, 0};
                for (const auto& p : perms) {
                    if (detail::relabel_seq(member, p) == cls.canon) {
                        for (unsigned v = 0; v < n; ++v) orbits[v] = canon_orbit[p[v]];
                        break;
                    }
                }
                lookup_.emplace(cls.member_keys[m], orbits);
            }
        }
    }

    void enumerate(detail::PairSeq& seq, unsigned touched, std::vector<detail::PairSeq>& out) {
        if (!seq.empty()) out.push_back(seq);
        if (seq.size() == static_cast<std::size_t>(max_events_)) return;
        if (seq.empty()) {
            seq.push_back({0, 1});
            enumerate(seq, 2, out);
            seq.pop_back();
            return;
        }
        auto [la, lb] = seq.back();
        for (std::uint8_t x = 0; x < touched; ++x) {
            for (std::uint8_t y = static_cast<std::uint8_t>(x + 1); y < touched; ++y) {
                if (x != la && x != lb && y != la && y != lb) continue;
                seq.push_back({x, y});
                enumerate(seq, touched, out);
                seq.pop_back();
            }
        }
        if (touched < static_cast<unsigned>(max_nodes_)) {
            for (std::uint8_t x : {la, lb}) {
                seq.push_back({x, static_cast<std::uint8_t>(touched)});
                enumerate(seq, touched + 1, out);
                seq.pop_back();
            }
        }
    }

    int max_nodes_;
    int max_events_;
    std::unordered_map<std::uint32_t, std::array<std::uint16_t, 4>> lookup_;
    std::vector<int> graphlet_nodes_;
    std::vector<int> graphlet_events_;
    std::vector<int> orbit_graphlet_;
};

struct DynamicGdvParams {
    int max_nodes = 4;
    int max_events = 6;
    double delta_t = 1.0;
};

namespace detail {

// Exhaustive chain extension over a concrete network. Events are ordered by
// (start, end, pair); an event can follow another when they share a node and
// the gap between the earlier end and the later start is at most delta_t.
class DynamicGdvCounter {
public:
    DynamicGdvCounter(const DynamicNetwork& net, const DynamicGraphletCatalog& catalog, double delta_t)
        : net_(net), catalog_(catalog), delta_t_(delta_t) {
        sorted_.assign(net.events().begin(), net.events().end());
        std::sort(sorted_.begin(), sorted_.end(), [](const Event& a, const Event& b) {
            return std::tuple(a.t_start, a.t_end, a.u, a.v) < std::tuple(b.t_start, b.t_end, b.u, b.v);
        });
        incident_.assign(net.num_nodes(), {});
        for (std::uint32_t r = 0; r < sorted_.size(); ++r) {
            incident_[sorted_[r].u].push_back(r);
            incident_[sorted_[r].v].push_back(r);
        }
        // Incident lists are rank-sorted by construction.
    }

    SignatureMatrix run() {
        SignatureMatrix sig;
        sig.kind = SignatureKind::dynamic_gdv;
        sig.rows.assign(net_.num_nodes(), SignatureRow(catalog_.orbit_count(), 0.0));
        rows_ = &sig.rows;
        for (std::uint32_t r = 0; r < sorted_.size(); ++r) {
            const Event& e = sorted_[r];
            chain_.assign(1, r);
            labels_.clear();
            NodeIndex first = std::min(e.u, e.v), second = std::max(e.u, e.v);
            labels_.push_back(first);
            labels_.push_back(second);
            extend(detail::append_pair(0, 0, 0, 1));
        }
        rows_ = nullptr;
        return sig;
    }

private:
    std::uint8_t label_of(NodeIndex node) const {
        for (std::uint8_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == node) return i;
        return static_cast<std::uint8_t>(labels_.size());
    }

    void extend(std::uint32_t key) {
        const auto& orbits = catalog_.orbits_for(key);
        for (std::uint8_t i = 0; i < labels_.size(); ++i) {
            (*rows_)[labels_[i]][orbits[i]] += 1.0;
        }
        if (chain_.size() == static_cast<std::size_t>(catalog_.max_events())) return;

        const std::uint32_t last = chain_.back();
        const Event& e = sorted_[last];
        const double lo = e.t_end - delta_t_;
        const double hi = e.t_end + delta_t_;
        for (int side = 0; side < 2; ++side) {
            NodeIndex endpoint = side == 0 ? e.u : e.v;
            const auto& inc = incident_[endpoint];
            // Find the first incident event starting at or after lo.
            auto it = std::lower_bound(inc.begin(), inc.end(), lo, [&](std::uint32_t r, double t) {
                return sorted_[r].t_start < t;
            });
            for (; it != inc.end() && sorted_[*it].t_start <= hi; ++it) {
                std::uint32_t next = *it;
                if (next <= last) continue;
                const Event& ne = sorted_[next];
                // An event on the same pair is incident to both endpoints;
                // visit it from the first side only.
                if (side == 1 && (ne.u == e.u || ne.v == e.u)) continue;
                NodeIndex other = ne.u == endpoint ? ne.v : ne.u;
                std::uint8_t la = label_of(endpoint);
                std::uint8_t lb = label_of(other);
                bool grew = false;
                if (lb == labels_.size()) {
                    if (labels_.size() == static_cast<std::size_t>(catalog_.max_nodes())) continue;
                    labels_.push_back(other);
                    grew = true;
                }
                std::uint8_t a = std::min(la, lb), b = std::max(la, lb);
                chain_.push_back(next);
                extend(detail::append_pair(key, static_cast<unsigned>(chain_.size() - 1), a, b));
                chain_.pop_back();
                if (grew) labels_.pop_back();
            }
        }
    }

    const DynamicNetwork& net_;
    const DynamicGraphletCatalog& catalog_;
    double delta_t_;
    std::vector<Event> sorted_;
    std::vector<std::vector<std::uint32_t>> incident_;
    std::vector<std::uint32_t> chain_;
    std::vector<NodeIndex> labels_;
    std::vector<SignatureRow>* rows_ = nullptr;
};

}  // namespace detail

// Dynamic graphlet degree vector of every node: entry o counts the chains of
// up to max_events temporally ordered, delta_t-adjacent events on up to
// max_nodes nodes that touch the node at orbit o.
inline SignatureMatrix dynamic_gdv(const DynamicNetwork& h, const DynamicGdvParams& params = {}) {
    for (const Event& e : h.events()) {
        if (!(std::isfinite(e.t_start) && std::isfinite(e.t_end)))
            throw DataError("non-finite timestamp");
    }
    if (params.max_nodes == 4 && params.max_events == 6) {
        return detail::DynamicGdvCounter(h, DynamicGraphletCatalog::standard(), params.delta_t).run();
    }
    DynamicGraphletCatalog catalog(params.max_nodes, params.max_events);
    return detail::DynamicGdvCounter(h, catalog, params.delta_t).run();
}

}  // namespace dynalign

#endif  // DYNALIGN_DYNAMIC_GRAPHLETS_HPP
