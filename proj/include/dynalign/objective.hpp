#ifndef DYNALIGN_OBJECTIVE_HPP
#define DYNALIGN_OBJECTIVE_HPP

#include <span>

#include "dynalign/conservation.hpp"
#include "dynalign/core.hpp"
#include "dynalign/similarity.hpp"

namespace dynalign {

enum class AlignmentMode { static_graphs, dynamic_events };

struct ObjectiveValue {
    double total = 0;
    double edge_term = 0;  // S3 or DS3
    double node_term = 0;  // graphlet- or file-based node conservation
};

// Everything needed to score one alignment. The static pointers must be set in
// static mode, the dynamic ones in dynamic mode; the similarity matrix is
// required only when alpha < 1.
struct ObjectiveInputs {
    AlignmentMode mode = AlignmentMode::dynamic_events;
    const DynamicNetwork* net1 = nullptr;
    const DynamicNetwork* net2 = nullptr;
    const StaticNetwork* graph1 = nullptr;
    const StaticNetwork* graph2 = nullptr;
    const SimilarityMatrix* similarity = nullptr;
    double alpha = 0.5;

    std::size_t source_size() const {
        return mode == AlignmentMode::dynamic_events ? net1->num_nodes() : graph1->num_nodes();
    }
    std::size_t target_size() const {
        return mode == AlignmentMode::dynamic_events ? net2->num_nodes() : graph2->num_nodes();
    }

    void validate() const {
        if (alpha < 0.0 || alpha > 1.0) throw DataError("alpha must lie in [0, 1]");
        if (mode == AlignmentMode::dynamic_events) {
            if (net1 == nullptr || net2 == nullptr) throw DataError("dynamic mode needs two dynamic networks");
        } else {
            if (graph1 == nullptr || graph2 == nullptr) throw DataError("static mode needs two static networks");
        }
        if (alpha < 1.0 && similarity == nullptr)
            throw DataError("alpha < 1 requires node similarities");
        if (source_size() > target_size())
            throw DataError("the first network must be the smaller one (|V1| <= |V2|)");
        if (similarity != nullptr &&
            (similarity->rows() != source_size() || similarity->cols() != target_size()))
            throw DataError("similarity matrix does not match the networks");
    }
};

// alpha * edge conservation + (1 - alpha) * node conservation. At alpha = 1 the
// node machinery is never touched, at alpha = 0 the edge machinery is not.
inline ObjectiveValue evaluate_objective(const ObjectiveInputs& in, std::span<const NodeIndex> mapping,
                                         ScoreWorkspace& ws) {
    ObjectiveValue value;
    if (in.alpha > 0.0) {
        value.edge_term = in.mode == AlignmentMode::dynamic_events
                              ? ds3(*in.net1, *in.net2, mapping, ws).ds3
                              : s3(*in.graph1, *in.graph2, mapping, ws).s3;
    }
    if (in.alpha < 1.0) {
        double total = 0;
        for (NodeIndex u = 0; u < mapping.size(); ++u) total += in.similarity->at(u, mapping[u]);
        value.node_term = mapping.empty() ? 0.0 : total / static_cast<double>(mapping.size());
    }
    value.total = in.alpha * value.edge_term + (1.0 - in.alpha) * value.node_term;
    return value;
}

inline ObjectiveValue evaluate_objective(const ObjectiveInputs& in, const Alignment& f) {
    in.validate();
    if (f.size() != in.source_size() || f.target_size() != in.target_size())
        throw DataError("alignment does not match the objective inputs");
    ScoreWorkspace ws;
    return evaluate_objective(in, f.mapping(), ws);
}

// Objective value of the ground-truth (label-matching) alignment between a
// network and a perturbed copy of it, measured with the dynamic objective.
inline ObjectiveValue ideal_quality(const DynamicNetwork& net, const DynamicNetwork& noisy,
                                    double alpha, const SimilarityMatrix* similarity = nullptr) {
    Alignment truth = ground_truth_alignment(net, noisy);
    ObjectiveInputs in;
    in.mode = AlignmentMode::dynamic_events;
    in.net1 = &net;
    in.net2 = &noisy;
    in.similarity = similarity;
    in.alpha = alpha;
    return evaluate_objective(in, truth);
}

}  // namespace dynalign

#endif  // DYNALIGN_OBJECTIVE_HPP
