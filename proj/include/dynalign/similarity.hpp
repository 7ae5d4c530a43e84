#ifndef DYNALIGN_SIMILARITY_HPP
#define DYNALIGN_SIMILARITY_HPP

#include <cmath>
#include <istream>
#include <numeric>
#include <string>
#include <vector>

#include "dynalign/core.hpp"
#include "dynalign/dynamic_graphlets.hpp"
#include "dynalign/graphlets.hpp"
#include "dynalign/io.hpp"
#include "dynalign/pca.hpp"

namespace dynalign {

// Pairwise node similarities s(u, v) in [0, 1] for u in V1, v in V2.
class SimilarityMatrix {
public:
    SimilarityMatrix() = default;
    SimilarityMatrix(std::size_t n1, std::size_t n2, double fill = 0.0)
        : n1_(n1), n2_(n2), data_(n1 * n2, fill) {}

    std::size_t rows() const { return n1_; }
    std::size_t cols() const { return n2_; }

    double at(NodeIndex u, NodeIndex v) const { return data_[u * n2_ + v]; }
    void set(NodeIndex u, NodeIndex v, double s) { data_[u * n2_ + v] = s; }

private:
    std::size_t n1_ = 0;
    std::size_t n2_ = 0;
    std::vector<double> data_;
};

// Cosine of the angle between two vectors; 0 when either is the zero vector.
inline double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na <= 0 || nb <= 0) return 0.0;
    double c = dot / (std::sqrt(na) * std::sqrt(nb));
    return std::clamp(c, -1.0, 1.0);
}

// Cosine similarity rescaled from [-1, 1] into [0, 1] so that it can be
// blended with the edge-conservation term of the objective.
inline double node_similarity(const std::vector<double>& yu, const std::vector<double>& yv) {
    return (1.0 + cosine(yu, yv)) / 2.0;
}

// Builds the full similarity matrix from reduced signatures pooled over both
// networks: rows 0..n1-1 describe net1 nodes, rows n1.. describe net2 nodes.
inline SimilarityMatrix similarity_from_reduced(const ReducedSignatures& reduced, std::size_t n1,
                                                std::size_t n2) {
    if (reduced.rows.size() != n1 + n2)
        throw DataError("reduced signatures do not cover both node sets");
    SimilarityMatrix sim(n1, n2);
    for (NodeIndex u = 0; u < n1; ++u)
        for (NodeIndex v = 0; v < n2; ++v)
            sim.set(u, v, node_similarity(reduced.rows[u], reduced.rows[n1 + v]));
    return sim;
}

// GDV-based similarities for two static networks.
inline SimilarityMatrix gdv_similarity(const StaticNetwork& g1, const StaticNetwork& g2) {
    SignatureMatrix s1 = static_gdv(g1);
    SignatureMatrix s2 = static_gdv(g2);
    std::vector<SignatureRow> pooled;
    pooled.reserve(s1.rows.size() + s2.rows.size());
    pooled.insert(pooled.end(), s1.rows.begin(), s1.rows.end());
    pooled.insert(pooled.end(), s2.rows.begin(), s2.rows.end());
    return similarity_from_reduced(reduce(pooled), g1.num_nodes(), g2.num_nodes());
}

// DGDV-based similarities for two dynamic networks.
inline SimilarityMatrix dgdv_similarity(const DynamicNetwork& h1, const DynamicNetwork& h2,
                                        const DynamicGdvParams& params = {}) {
    SignatureMatrix s1 = dynamic_gdv(h1, params);
    SignatureMatrix s2 = dynamic_gdv(h2, params);
    std::vector<SignatureRow> pooled;
    pooled.reserve(s1.rows.size() + s2.rows.size());
    pooled.insert(pooled.end(), s1.rows.begin(), s1.rows.end());
    pooled.insert(pooled.end(), s2.rows.begin(), s2.rows.end());
    return similarity_from_reduced(reduce(pooled), h1.num_nodes(), h2.num_nodes());
}

// Mean similarity of aligned node pairs.
inline double node_conservation(const SimilarityMatrix& sim, const Alignment& f) {
    if (sim.rows() != f.size() || sim.cols() != f.target_size())
        throw DataError("similarity matrix does not match the alignment");
    if (f.size() == 0) return 0.0;
    double total = 0;
    for (NodeIndex u = 0; u < f.size(); ++u) total += sim.at(u, f[u]);
    return total / static_cast<double>(f.size());
}

// Similarity file: `u v s` per line with s in [0, 1]; missing pairs are 0.
template <typename NetA, typename NetB>
SimilarityMatrix parse_similarity(std::istream& in, const NetA& net1, const NetB& net2) {
    SimilarityMatrix sim(net1.num_nodes(), net2.num_nodes(), 0.0);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_comment_or_blank(line)) continue;
        auto fields = detail::split_fields(line);
        if (fields.size() != 3)
            throw DataError("line " + std::to_string(line_no) + ": expected 'u v s'");
        auto u = net1.index_of(fields[0]);
        auto v = net2.index_of(fields[1]);
        if (!u) throw DataError("line " + std::to_string(line_no) + ": unknown node '" + fields[0] + "'");
        if (!v) throw DataError("line " + std::to_string(line_no) + ": unknown node '" + fields[1] + "'");
        double s = detail::parse_number(fields[2], line_no);
        if (s < 0.0 || s > 1.0)
            throw DataError("line " + std::to_string(line_no) + ": similarity " + fields[2] +
                            " outside [0, 1]");
        sim.set(*u, *v, s);
    }
    return sim;
}

// Signature dump format: `node c1 c2 ... cK` per line.
template <typename Net>
void write_signatures(const Net& net, const SignatureMatrix& sig, std::ostream& out) {
    for (NodeIndex i = 0; i < sig.rows.size(); ++i) {
        out << net.label(i);
        for (double c : sig.rows[i]) out << ' ' << detail::format_number(c);
        out << '\n';
    }
}

}  // namespace dynalign

#endif  // DYNALIGN_SIMILARITY_HPP
