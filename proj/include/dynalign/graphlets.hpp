#ifndef DYNALIGN_GRAPHLETS_HPP
#define DYNALIGN_GRAPHLETS_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "dynalign/core.hpp"

namespace dynalign {

namespace detail {

// Bit index of pair (i, j), i < j, in the upper-triangle mask of an n-node graph.
inline unsigned pair_bit(unsigned i, unsigned j, unsigned n) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::vector<std::array<std::uint8_t, 4>> permutations_of(unsigned n) {
    std::array<std::uint8_t, 4> base{0, 1, 2, 3};
    std::vector<std::array<std::uint8_t, 4>> perms;
    std::vector<std::uint8_t> idx(base.begin(), base.begin() + n);
    std::sort(idx.begin(), idx.end());
    do {
        std::array<std::uint8_t, 4> p{0, 0, 0, 0};
        for (unsigned i = 0; i < n; ++i) p[i] = idx[i];
        perms.push_back(p);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return perms;
}

inline unsigned relabel_mask(unsigned mask, unsigned n, const std::array<std::uint8_t, 4>& perm) {
    unsigned out = 0;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            if (mask & (1u << pair_bit(i, j, n))) {
                unsigned a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                out |= 1u << pair_bit(a, b, n);
            }
        }
    }
    return out;
}

inline bool mask_connected(unsigned mask, unsigned n) {
    std::array<unsigned, 4> comp{0, 1, 2, 3};
    auto find = [&](unsigned x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    unsigned degree_any = 0;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            if (mask & (1u << pair_bit(i, j, n))) {
                comp[find(i)] = find(j);
                degree_any |= (1u << i) | (1u << j);
            }
        }
    }
    if (degree_any != (1u << n) - 1) return false;  // isolated node
    unsigned root = find(0);
    for (unsigned i = 1; i < n; ++i) {
        if (find(i) != root) return false;
    }
    return true;
}

}  // namespace detail

// Catalog of the connected graphs on 2..4 nodes and their automorphism orbits,
// generated by canonicalization. Graphlets are ordered by (node count, edge
// count, descending degree sequence) and orbits within a graphlet by node
// degree, which reproduces the conventional 0..14 orbit numbering: orbit 0 is
// the edge, orbit 3 the triangle, orbit 14 the 4-clique.
class StaticGraphletCatalog {
public:
    static const StaticGraphletCatalog& instance() {
        static const StaticGraphletCatalog catalog;
        return catalog;
    }

    int graphlet_count() const { return static_cast<int>(graphlet_nodes_.size()); }
    int orbit_count() const { return orbit_total_; }

    // Node count of the graphlet an orbit belongs to.
    int orbit_graphlet(int orbit) const { return orbit_graphlet_[orbit]; }

    // Orbit ids, one per position, for a connected induced subgraph given as an
    // upper-triangle adjacency mask over its n sorted nodes.
    const std::array<std::uint8_t, 4>& orbits_for(unsigned n, unsigned mask) const {
        return lookup_.at((n << 6) | mask);
    }

private:
    StaticGraphletCatalog() {
        struct ClassInfo {
            unsigned n;
            unsigned mask;
            std::vector<int> degseq_desc;
        };
        std::vector<ClassInfo> classes;
        for (unsigned n = 2; n <= 4; ++n) {
            auto perms = detail::permutations_of(n);
            unsigned bits = n * (n - 1) / 2;
            std::vector<char> seen(1u << bits, 0);
            for (unsigned mask = 0; mask < (1u << bits); ++mask) {
                if (!detail::mask_connected(mask, n)) continue;
                unsigned canon = mask;
                for (const auto& p : perms) canon = std::min(canon, detail::relabel_mask(mask, n, p));
                if (seen[canon]) continue;
                if (canon == mask) {
                    std::vector<int> deg(n, 0);
                    for (unsigned i = 0; i < n; ++i)
                        for (unsigned j = i + 1; j < n; ++j)
                            if (mask & (1u << detail::pair_bit(i, j, n))) {
                                ++deg[i];
                                ++deg[j];
                            }
                    std::sort(deg.rbegin(), deg.rend());
                    classes.push_back({n, mask, deg});
                    seen[mask] = 1;
                }
            }
        }
        std::sort(classes.begin(), classes.end(), [](const ClassInfo& a, const ClassInfo& b) {
            unsigned ma = static_cast<unsigned>(std::popcount(a.mask));
            unsigned mb = static_cast<unsigned>(std::popcount(b.mask));
            return std::tuple(a.n, ma, a.degseq_desc) < std::tuple(b.n, mb, b.degseq_desc);
        });

        for (const ClassInfo& cls : classes) {
            unsigned n = cls.n;
            auto perms = detail::permutations_of(n);
            // Orbit partition of the canonical representative.
            std::array<unsigned, 4> comp{0, 1, 2, 3};
            auto find = [&](unsigned x) {
                while (comp[x] != x) x = comp[x] = comp[comp[x]];
                return x;
            };
            for (const auto& p : perms) {
                if (detail::relabel_mask(cls.mask, n, p) == cls.mask) {
                    for (unsigned v = 0; v < n; ++v) comp[find(v)] = find(p[v]);
                }
            }
            std::vector<int> deg(n, 0);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j)
                    if (cls.mask & (1u << detail::pair_bit(i, j, n))) {
                        ++deg[i];
                        ++deg[j];
                    }
            // Orbit ids within the graphlet ordered by node degree.
            std::vector<unsigned> reps;
            for (unsigned v = 0; v < n; ++v)
                if (find(v) == v) reps.push_back(v);
            std::sort(reps.begin(), reps.end(),
                      [&](unsigned a, unsigned b) { return std::tuple(deg[a], a) < std::tuple(deg[b], b); });
            std::array<std::uint8_t, 4> orbit_of_node{0, 0, 0, 0};
            for (unsigned v = 0; v < n; ++v) {
                unsigned rep = find(v);
                auto pos = std::find(reps.begin(), reps.end(), rep) - reps.begin();
                orbit_of_node[v] = static_cast<std::uint8_t>(orbit_total_ + pos);
            }
            for (std::size_t i = 0; i < reps.size(); ++i)
                orbit_graphlet_.push_back(static_cast<int>(graphlet_nodes_.size()));
            orbit_total_ += static_cast<int>(reps.size());
            graphlet_nodes_.push_back(static_cast<int>(n));

            // Lookup entries for every labeled form of this class.
            for (const auto& p : perms) {
                unsigned relab = detail::relabel_mask(cls.mask, n, p);
                std::array<std::uint8_t, 4> orbits{0, 0, 0, 0};
                for (unsigned v = 0; v < n; ++v) orbits[p[v]] = orbit_of_node[v];
                lookup_.emplace((n << 6) | relab, orbits);
            }
        }
    }

    std::unordered_map<unsigned, std::array<std::uint8_t, 4>> lookup_;
    std::vector<int> graphlet_nodes_;
    std::vector<int> orbit_graphlet_;
    int orbit_total_ = 0;
};

using SignatureRow = std::vector<double>;

enum class SignatureKind { static_gdv, dynamic_gdv };

// Per-node feature vectors: orbit-touch counts before reduction.
struct SignatureMatrix {
    std::vector<SignatureRow> rows;
    SignatureKind kind = SignatureKind::static_gdv;

    std::size_t dim() const { return rows.empty() ? 0 : rows[0].size(); }
};

namespace detail {

// ESU-style enumeration: every connected induced subgraph on 2..4 nodes is
// visited exactly once (each subgraph is grown from its minimum node, adding
// only exclusive neighbors).
template <typename Visit>
class ConnectedSubgraphEnumerator {
public:
    ConnectedSubgraphEnumerator(const StaticNetwork& g, Visit visit)
        : g_(g), visit_(visit), in_sub_(g.num_nodes(), 0), adjacent_(g.num_nodes(), 0) {}

    void run() {
        const NodeIndex n = static_cast<NodeIndex>(g_.num_nodes());
        for (NodeIndex root = 0; root < n; ++root) {
            sub_.assign(1, root);
            in_sub_[root] = 1;
            std::vector<NodeIndex> ext;
            std::vector<NodeIndex> marked;
            for (NodeIndex u : g_.neighbors(root)) {
                adjacent_[u] = 1;
                marked.push_back(u);
                if (u > root) ext.push_back(u);
            }
            extend(root, ext);
            in_sub_[root] = 0;
            for (NodeIndex u : marked) adjacent_[u] = 0;
        }
    }

private:
    void extend(NodeIndex root, std::vector<NodeIndex>& ext) {
        if (sub_.size() >= 2) visit_(sub_);
        if (sub_.size() == 4) return;
        std::vector<NodeIndex> pool = ext;
        while (!pool.empty()) {
            NodeIndex w = pool.back();
            pool.pop_back();
            std::vector<NodeIndex> child = pool;
            std::vector<NodeIndex> marked;
            for (NodeIndex u : g_.neighbors(w)) {
                if (!adjacent_[u] && !in_sub_[u]) {
                    adjacent_[u] = 1;
                    marked.push_back(u);
                    if (u > root) child.push_back(u);
                }
            }
            sub_.push_back(w);
            in_sub_[w] = 1;
            extend(root, child);
            in_sub_[w] = 0;
            sub_.pop_back();
            for (NodeIndex u : marked) adjacent_[u] = 0;
        }
    }

    const StaticNetwork& g_;
    Visit visit_;
    std::vector<NodeIndex> sub_;
    std::vector<char> in_sub_;
    std::vector<char> adjacent_;
};

}  // namespace detail

// Graphlet degree vector of every node: entry o counts how many connected
// induced subgraphs on 2..4 nodes touch the node at orbit o.
inline SignatureMatrix static_gdv(const StaticNetwork& g) {
    const auto& catalog = StaticGraphletCatalog::instance();
    SignatureMatrix sig;
    sig.kind = SignatureKind::static_gdv;
    sig.rows.assign(g.num_nodes(), SignatureRow(catalog.orbit_count(), 0.0));

    auto visit = [&](const std::vector<NodeIndex>& sub) {
        std::array<NodeIndex, 4> nodes{0, 0, 0, 0};
        unsigned n = static_cast<unsigned>(sub.size());
        std::copy(sub.begin(), sub.end(), nodes.begin());
        std::sort(nodes.begin(), nodes.begin() + n);
        unsigned mask = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (g.has_edge(nodes[i], nodes[j])) mask |= 1u << detail::pair_bit(i, j, n);
        const auto& orbits = catalog.orbits_for(n, mask);
        for (unsigned i = 0; i < n; ++i) sig.rows[nodes[i]][orbits[i]] += 1.0;
    };
    detail::ConnectedSubgraphEnumerator(g, visit).run();
    return sig;
}

}  // namespace dynalign

#endif  // DYNALIGN_GRAPHLETS_HPP
