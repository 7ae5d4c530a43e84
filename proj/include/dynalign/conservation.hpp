#ifndef DYNALIGN_CONSERVATION_HPP
#define DYNALIGN_CONSERVATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dynalign/core.hpp"

namespace dynalign {

// Kahan compensated accumulator. Event-time sums add many small overlaps, so
// plain accumulation drifts on long event lists.
class KahanSum {
public:
    void add(double x) {
        double y = x - compensation_;
        double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0;
    double compensation_ = 0;
};

struct StaticEdgeScore {
    std::int64_t n_conserved = 0;
    std::int64_t n_nonconserved = 0;
    double s3 = 0;
};

struct DynamicEdgeScore {
    double t_conserved = 0;
    double t_nonconserved = 0;
    double ds3 = 0;
};

// Length of the overlap of the two events' active intervals.
inline double conserved_time(const Event& e, const Event& e2) {
    double lo = std::max(e.t_start, e2.t_start);
    double hi = std::min(e.t_end, e2.t_end);
    return hi > lo ? hi - lo : 0.0;
}

// Total conserved event time between two pair timelines. Both lists are
// time-sorted and internally disjoint, so a two-pointer sweep visits each
// event once: O(|a| + |b|).
inline double pair_cet(std::span<const Event> a, std::span<const Event> b) {
    KahanSum total;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double lo = std::max(a[i].t_start, b[j].t_start);
        double hi = std::min(a[i].t_end, b[j].t_end);
        if (hi > lo) total.add(hi - lo);
        if (a[i].t_end < b[j].t_end) {
            ++i;
        } else {
            ++j;
        }
    }
    return total.value();
}

inline double pair_cet(const DynamicNetwork& net1, NodeIndex u1, NodeIndex u2,
                       const DynamicNetwork& net2, NodeIndex v1, NodeIndex v2) {
    return pair_cet(net1.events_between(u1, u2), net2.events_between(v1, v2));
}

inline double total_duration(std::span<const Event> events) {
    KahanSum total;
    for (const Event& e : events) total.add(e.duration());
    return total.value();
}

// Time during which exactly one of the two timelines is active.
inline double pair_ncet(std::span<const Event> a, std::span<const Event> b) {
    return total_duration(a) + total_duration(b) - 2.0 * pair_cet(a, b);
}

inline double pair_ncet(const DynamicNetwork& net1, NodeIndex u1, NodeIndex u2,
                        const DynamicNetwork& net2, NodeIndex v1, NodeIndex v2) {
    return pair_ncet(net1.events_between(u1, u2), net2.events_between(v1, v2));
}

namespace detail {

template <typename Net>
void check_alignment(const Net& net1, const Net& net2, const Alignment& f) {
    if (f.size() != net1.num_nodes() || f.target_size() != net2.num_nodes())
        throw DataError("alignment does not match the given networks");
}

// Inverse of f over the target network; npos for nodes outside the image.
inline void inverse_mapping(std::span<const NodeIndex> f, std::vector<NodeIndex>& inv,
                            std::size_t target_size) {
    constexpr NodeIndex npos = ~NodeIndex{0};
    inv.assign(target_size, npos);
    for (NodeIndex i = 0; i < f.size(); ++i) inv[f[i]] = i;
}

}  // namespace detail

// Reusable scratch space for the scoring hot path.
struct ScoreWorkspace {
    std::vector<NodeIndex> inverse;
};

// Dynamic edge conservation of a mapping. Sums CET and NCET over the node
// pairs of net1 against the induced image pairs in net2. Only pairs that carry
// events on either side contribute, which keeps the cost at O(|T1| + |T2|).
// The span overload trusts the mapping to be a valid injection.
inline DynamicEdgeScore ds3(const DynamicNetwork& net1, const DynamicNetwork& net2,
                            std::span<const NodeIndex> f, ScoreWorkspace& ws) {
    constexpr NodeIndex npos = ~NodeIndex{0};
    detail::inverse_mapping(f, ws.inverse, net2.num_nodes());

    KahanSum conserved;
    KahanSum nonconserved;
    for (const PairTimeline& pt : net1.pairs()) {
        std::span<const Event> image = net2.events_between(f[pt.u], f[pt.v]);
        double cet = pair_cet(pt.events, image);
        conserved.add(cet);
        nonconserved.add(total_duration(pt.events) + total_duration(image) - 2.0 * cet);
    }
    // net2 events between two image nodes whose preimage pair is silent.
    for (const PairTimeline& pt : net2.pairs()) {
        NodeIndex a = ws.inverse[pt.u], b = ws.inverse[pt.v];
        if (a == npos || b == npos) continue;
        if (!net1.events_between(a, b).empty()) continue;  // already counted above
        nonconserved.add(total_duration(pt.events));
    }

    DynamicEdgeScore score;
    score.t_conserved = conserved.value();
    score.t_nonconserved = nonconserved.value();
    double denom = score.t_conserved + score.t_nonconserved;
    score.ds3 = denom > 0 ? score.t_conserved / denom : 0.0;
    return score;
}

inline DynamicEdgeScore ds3(const DynamicNetwork& net1, const DynamicNetwork& net2,
                            const Alignment& f) {
    detail::check_alignment(net1, net2, f);
    ScoreWorkspace ws;
    return ds3(net1, net2, f.mapping(), ws);
}

// Static S3: conserved edges over conserved plus non-conserved edges, where the
// non-conserved side counts edges of net1 and of the image-induced subgraph of
// net2 that map to non-edges. O(|E1| + |E2|).
inline StaticEdgeScore s3(const StaticNetwork& net1, const StaticNetwork& net2,
                          std::span<const NodeIndex> f, ScoreWorkspace& ws) {
    constexpr NodeIndex npos = ~NodeIndex{0};
    detail::inverse_mapping(f, ws.inverse, net2.num_nodes());

    std::int64_t conserved = 0;
    for (auto [u, v] : net1.edges()) {
        if (net2.has_edge(f[u], f[v])) ++conserved;
    }
    std::int64_t induced = 0;
    for (auto [x, y] : net2.edges()) {
        if (ws.inverse[x] != npos && ws.inverse[y] != npos) ++induced;
    }

    StaticEdgeScore score;
    score.n_conserved = conserved;
    score.n_nonconserved = static_cast<std::int64_t>(net1.num_edges()) + induced - 2 * conserved;
    std::int64_t denom = score.n_conserved + score.n_nonconserved;
    score.s3 = denom > 0 ? static_cast<double>(score.n_conserved) / static_cast<double>(denom) : 0.0;
    return score;
}

inline StaticEdgeScore s3(const StaticNetwork& net1, const StaticNetwork& net2, const Alignment& f) {
    detail::check_alignment(net1, net2, f);
    ScoreWorkspace ws;
    return s3(net1, net2, f.mapping(), ws);
}

}  // namespace dynalign

#endif  // DYNALIGN_CONSERVATION_HPP
