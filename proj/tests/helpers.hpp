#ifndef DYNALIGN_TEST_HELPERS_HPP
#define DYNALIGN_TEST_HELPERS_HPP

// Test-only oracles and generators. Everything here recomputes expected values
// straight from the definitions (quadratic loops, subset enumeration), kept
// deliberately independent of the library's optimized code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynalign/core.hpp"
#include "dynalign/rng.hpp"

namespace testutil {

using dynalign::Alignment;
using dynalign::DynamicNetwork;
using dynalign::Event;
using dynalign::NodeIndex;
using dynalign::Rng;
using dynalign::StaticNetwork;

// ---- construction shorthands -------------------------------------------------

struct Ev {
    std::string u, v;
    double ts, te;
};

inline DynamicNetwork make_dynamic(const std::vector<std::string>& nodes,
                                   const std::vector<Ev>& events) {
    DynamicNetwork::Builder b;
    for (const auto& n : nodes) b.add_node(n);
    for (const auto& e : events) b.add_event(e.u, e.v, e.ts, e.te);
    return std::move(b).build();
}

inline StaticNetwork make_static(const std::vector<std::string>& nodes,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
    StaticNetwork::Builder b;
    for (const auto& n : nodes) b.add_node(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

// Random dynamic network on n nodes with roughly m events.
inline DynamicNetwork random_dynamic(std::size_t n, std::size_t m, Rng& rng,
                                     bool fractional_times = false) {
    DynamicNetwork::Builder b;
    for (std::size_t i = 0; i < n; ++i) b.add_node("n" + std::to_string(i));
    const double span = static_cast<double>(m) * 2.0 + 10.0;
    for (std::size_t k = 0; k < m; ++k) {
        NodeIndex u = static_cast<NodeIndex>(rng.next_below(n));
        NodeIndex v = static_cast<NodeIndex>(rng.next_below(n - 1));
        if (v >= u) ++v;
        double ts, dur;
        if (fractional_times) {
            ts = rng.next_double() * span;
            dur = rng.next_double() * 3.0;
        } else {
            ts = static_cast<double>(rng.next_below(static_cast<std::uint64_t>(span)));
            dur = static_cast<double>(rng.next_below(4));
        }
        b.add_event(u, v, ts, ts + dur);
    }
    return std::move(b).build();
}

inline StaticNetwork random_static(std::size_t n, double edge_prob, Rng& rng) {
    StaticNetwork::Builder b;
    for (std::size_t i = 0; i < n; ++i) b.add_node("n" + std::to_string(i));
    for (NodeIndex u = 0; u < n; ++u)
        for (NodeIndex v = u + 1; v < n; ++v)
            if (rng.next_double() < edge_prob) b.add_edge(u, v);
    return std::move(b).build();
}

inline Alignment random_mapping(std::size_t n1, std::size_t n2, Rng& rng) {
    std::vector<NodeIndex> targets(n2);
    for (std::size_t i = 0; i < n2; ++i) targets[i] = static_cast<NodeIndex>(i);
    dynalign::shuffle(targets, rng);
    targets.resize(n1);
    return Alignment(std::move(targets), n2);
}

// ---- definitional oracles ----------------------------------------------------

inline double oracle_ct(const Event& a, const Event& b) {
    return std::max(0.0, std::min(a.t_end, b.t_end) - std::max(a.t_start, b.t_start));
}

inline double oracle_pair_cet(std::span<const Event> a, std::span<const Event> b) {
    double total = 0;
    for (const Event& x : a)
        for (const Event& y : b) total += oracle_ct(x, y);
    return total;
}

inline double oracle_duration(std::span<const Event> a) {
    double total = 0;
    for (const Event& x : a) total += x.duration();
    return total;
}

// Quadratic DS3: loop over every unordered node pair of net1 and apply the
// CET/NCET definitions directly.
struct OracleDynScore {
    double tc = 0, tn = 0, ds3 = 0;
};

inline OracleDynScore oracle_ds3(const DynamicNetwork& net1, const DynamicNetwork& net2,
                                 const Alignment& f) {
    OracleDynScore out;
    const std::size_t n1 = net1.num_nodes();
    for (NodeIndex u = 0; u < n1; ++u) {
        for (NodeIndex v = u + 1; v < n1; ++v) {
            auto a = net1.events_between(u, v);
            auto b = net2.events_between(f[u], f[v]);
            double cet = oracle_pair_cet(a, b);
            out.tc += cet;
            out.tn += oracle_duration(a) + oracle_duration(b) - 2.0 * cet;
        }
    }
    double denom = out.tc + out.tn;
    out.ds3 = denom > 0 ? out.tc / denom : 0.0;
    return out;
}

// All-pairs S3 straight from the conserved / non-conserved edge definitions.
struct OracleStatScore {
    long long nc = 0, nn = 0;
    double s3 = 0;
};

inline OracleStatScore oracle_s3(const StaticNetwork& g1, const StaticNetwork& g2,
                                 const Alignment& f) {
    OracleStatScore out;
    const std::size_t n1 = g1.num_nodes();
    for (NodeIndex u = 0; u < n1; ++u) {
        for (NodeIndex v = u + 1; v < n1; ++v) {
            bool e1 = g1.has_edge(u, v);
            bool e2 = g2.has_edge(f[u], f[v]);
            if (e1 && e2) ++out.nc;
            if (e1 != e2) ++out.nn;
        }
    }
    long long denom = out.nc + out.nn;
    out.s3 = denom > 0 ? static_cast<double>(out.nc) / static_cast<double>(denom) : 0.0;
    return out;
}

// Subset-enumeration GDV oracle: visit every 2/3/4-subset of nodes, keep the
// connected ones, and classify orbits from edge counts and degrees.
inline std::vector<std::vector<double>> oracle_gdv(const StaticNetwork& g) {
    const std::size_t n = g.num_nodes();
    std::vector<std::vector<double>> gdv(n, std::vector<double>(15, 0.0));

    auto classify = [&](const std::vector<NodeIndex>& sub) {
        const std::size_t k = sub.size();
        std::vector<int> deg(k, 0);
        int edges = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (g.has_edge(sub[i], sub[j])) {
                    ++deg[i];
                    ++deg[j];
                    ++edges;
                }
        // connectivity
        std::vector<char> seen(k, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < k; ++y) {
                if (!seen[y] && g.has_edge(sub[x], sub[y])) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        if (reached != k) return;

        for (std::size_t i = 0; i < k; ++i) {
            int orbit = -1;
            if (k == 2) {
                orbit = 0;
            } else if (k == 3) {
                orbit = edges == 3 ? 3 : (deg[i] == 1 ? 1 : 2);
            } else {
                std::vector<int> ds = deg;
                std::sort(ds.rbegin(), ds.rend());
                if (edges == 3 && ds == std::vector<int>{2, 2, 1, 1}) orbit = deg[i] == 1 ? 4 : 5;
                if (edges == 3 && ds == std::vector<int>{3, 1, 1, 1}) orbit = deg[i] == 1 ? 6 : 7;
                if (edges == 4 && ds == std::vector<int>{2, 2, 2, 2}) orbit = 8;
                if (edges == 4 && ds == std::vector<int>{3, 2, 2, 1}) orbit = 8 + deg[i];
                if (edges == 5) orbit = deg[i] == 2 ? 12 : 13;
                if (edges == 6) orbit = 14;
            }
            if (orbit < 0) throw std::logic_error("oracle_gdv: unclassifiable subgraph");
            gdv[sub[i]][static_cast<std::size_t>(orbit)] += 1.0;
        }
    };

    std::vector<NodeIndex> sub;
    for (NodeIndex a = 0; a < n; ++a) {
        for (NodeIndex b = a + 1; b < n; ++b) {
            classify({a, b});
            for (NodeIndex c = b + 1; c < n; ++c) {
                classify({a, b, c});
                for (NodeIndex d = c + 1; d < n; ++d) classify({a, b, c, d});
            }
        }
    }
    return gdv;
}

// ---- small statistics --------------------------------------------------------

inline std::vector<double> ranks(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> r(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
        i = j + 1;
    }
    return r;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx <= 0 || syy <= 0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(ranks(x), ranks(y));
}

inline double skewness(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= n;
    double m2 = 0, m3 = 0;
    for (double x : xs) {
        double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    if (m2 <= 0) return 0.0;
    return m3 / std::pow(m2, 1.5);
}

inline double chi_square_statistic(const std::vector<std::size_t>& observed, double expected) {
    double stat = 0;
    for (std::size_t o : observed) {
        double d = static_cast<double>(o) - expected;
        stat += d * d / expected;
    }
    return stat;
}

}  // namespace testutil

#endif  // DYNALIGN_TEST_HELPERS_HPP
