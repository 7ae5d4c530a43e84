#ifndef DYNALIGN_EVALUATION_HPP
#define DYNALIGN_EVALUATION_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dynalign/conservation.hpp"
#include "dynalign/core.hpp"
#include "dynalign/objective.hpp"
#include "dynalign/parallel.hpp"
#include "dynalign/randomize.hpp"
#include "dynalign/rng.hpp"
#include "dynalign/search.hpp"
#include "dynalign/similarity.hpp"

namespace dynalign {

// Fraction of nodes mapped to the same target as the ground truth.
inline double node_correctness(const Alignment& f, const Alignment& truth) {
    if (f.size() != truth.size() || f.target_size() != truth.target_size())
        throw DataError("alignments cover different node sets");
    if (f.size() == 0) return 0.0;
    std::size_t hits = 0;
    for (NodeIndex u = 0; u < f.size(); ++u)
        if (f[u] == truth[u]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(f.size());
}

// One network pair scored by an alignment method.
struct ScoredPair {
    double quality = 0;
    bool similar = false;
};

struct CurvePoint {
    double threshold = 0;
    double precision = 0;
    double recall = 0;  // = sensitivity
    double fpr = 0;     // = 1 - specificity
};

struct CurveSummary {
    double aupr = 0;
    double auroc = 0;
    double f_cross = 0;
    double f_max = 0;
    std::vector<CurvePoint> points;  // ascending threshold
};

// Precision-recall and ROC summary of a set of scored pairs. Thresholds sweep
// from 0 to the maximum observed quality; between observed values the curves
// are flat, so sweeping the midpoints of consecutive distinct values plus the
// endpoints captures every point of the step curve deterministically.
inline CurveSummary pr_roc(const std::vector<ScoredPair>& pairs) {
    std::size_t positives = 0, negatives = 0;
    for (const ScoredPair& p : pairs) (p.similar ? positives : negatives) += 1;
    if (positives == 0 || negatives == 0)
        throw DataError("discrimination needs at least one similar and one dissimilar pair");

    std::vector<double> values;
    values.reserve(pairs.size());
    for (const ScoredPair& p : pairs) values.push_back(p.quality);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<double> thresholds;
    thresholds.push_back(0.0);
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        thresholds.push_back((values[i] + values[i + 1]) / 2.0);
    thresholds.push_back(values.back());
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    CurveSummary out;
    out.points.reserve(thresholds.size());
    for (double r : thresholds) {
        std::size_t tp = 0, fp = 0;
        for (const ScoredPair& p : pairs) {
            if (p.quality > r) (p.similar ? tp : fp) += 1;
        }
        CurvePoint pt;
        pt.threshold = r;
        pt.precision = (tp + fp) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 1.0;
        pt.recall = static_cast<double>(tp) / static_cast<double>(positives);
        pt.fpr = static_cast<double>(fp) / static_cast<double>(negatives);
        out.points.push_back(pt);
    }

    // Integrate along descending threshold, i.e. increasing recall / fpr.
    double best_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = out.points.size(); i-- > 0;) {
        const CurvePoint& pt = out.points[i];
        double f = (pt.precision + pt.recall) > 0
                       ? 2.0 * pt.precision * pt.recall / (pt.precision + pt.recall)
                       : 0.0;
        out.f_max = std::max(out.f_max, f);
        double gap = std::abs(pt.precision - pt.recall);
        if (gap < best_gap) {
            best_gap = gap;
            out.f_cross = f;
        }
        if (i + 1 < out.points.size()) {
            const CurvePoint& prev = out.points[i + 1];  // higher threshold
            out.aupr += (pt.recall - prev.recall) * (pt.precision + prev.precision) / 2.0;
            out.auroc += (pt.fpr - prev.fpr) * (pt.recall + prev.recall) / 2.0;
        }
    }
    return out;
}

// Synthetic dynamic-network generators for discrimination experiments.
enum class SyntheticModel { preferential_attachment, random_geometric };

inline const char* synthetic_model_name(SyntheticModel m) {
    return m == SyntheticModel::preferential_attachment ? "preferential" : "geometric";
}

// Snapshot-based generator. The preferential model draws each snapshot's edges
// toward high-degree nodes, giving a right-skewed flattened degree
// distribution; the geometric model connects nearby points in the unit square
// and lets them drift between snapshots.
inline DynamicNetwork generate_synthetic(SyntheticModel model, int nodes, int snapshots,
                                         std::uint64_t seed) {
    if (nodes < 2 || snapshots < 1) throw DataError("synthetic generator needs >= 2 nodes, >= 1 snapshot");
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(model), 0x517e));
    std::vector<std::string> labels(nodes);
    for (int i = 0; i < nodes; ++i) labels[i] = "v" + std::to_string(i);

    std::vector<StaticNetwork> snaps;
    snaps.reserve(snapshots);

    if (model == SyntheticModel::preferential_attachment) {
        // Low starting weight plus unit reinforcement makes early winners
        // dominate, which is what gives the flattened degrees their skew.
        std::vector<double> weight(nodes, 0.25);
        double weight_sum = 0.25 * static_cast<double>(nodes);
        const int edges_per_snapshot = std::max(2, nodes / 2);
        auto draw = [&] {
            double x = rng.next_double() * weight_sum;
            for (int i = 0; i < nodes; ++i) {
                x -= weight[i];
                if (x < 0) return i;
            }
            return nodes - 1;
        };
        for (int t = 0; t < snapshots; ++t) {
            StaticNetwork::Builder builder;
            for (const std::string& l : labels) builder.add_node(l);
            int added = 0;
            int guard = 0;
            while (added < edges_per_snapshot && guard < edges_per_snapshot * 50) {
                ++guard;
                int a = draw();
                int b = draw();
                if (a == b) continue;
                builder.add_edge(static_cast<NodeIndex>(a), static_cast<NodeIndex>(b));
                weight[a] += 1.0;
                weight[b] += 1.0;
                weight_sum += 2.0;
                ++added;
            }
            snaps.push_back(std::move(builder).build());
        }
    } else {
        const double radius = std::sqrt(6.0 / (3.141592653589793 * nodes));
        const double drift = 0.05;
        std::vector<std::pair<double, double>> pos(nodes);
        for (auto& [x, y] : pos) {
            x = rng.next_double();
            y = rng.next_double();
        }
        for (int t = 0; t < snapshots; ++t) {
            StaticNetwork::Builder builder;
            for (const std::string& l : labels) builder.add_node(l);
            for (int i = 0; i < nodes; ++i) {
                for (int j = i + 1; j < nodes; ++j) {
                    double dx = pos[i].first - pos[j].first;
                    double dy = pos[i].second - pos[j].second;
                    if (dx * dx + dy * dy <= radius * radius)
                        builder.add_edge(static_cast<NodeIndex>(i), static_cast<NodeIndex>(j));
                }
            }
            snaps.push_back(std::move(builder).build());
            for (auto& [x, y] : pos) {
                x = std::clamp(x + (rng.next_double() * 2.0 - 1.0) * drift, 0.0, 1.0);
                y = std::clamp(y + (rng.next_double() * 2.0 - 1.0) * drift, 0.0, 1.0);
            }
        }
    }
    return from_snapshots(snaps);
}

// Noise-sweep protocol: perturb the original network at each (level,
// replicate), track the ground-truth ("ideal") quality, and optionally run the
// dynamic- and static-mode searches against each noisy instance.
struct SweepOptions {
    NoiseScheme scheme = NoiseScheme::time_swap;
    std::vector<double> levels = default_noise_grid();
    int replicates = 5;
    std::uint64_t seed = 0;
    double alpha = 1.0;
    bool run_searches = false;
    SearchConfig search;  // alpha/seed fields are overridden per run
    unsigned threads = 1;
};

struct SweepRow {
    double level = 0;
    int replicate = 0;
    double ideal_dynamic_objective = 0;
    double static_truth_s3 = 0;
    double dynamic_objective = std::numeric_limits<double>::quiet_NaN();
    double dynamic_node_correctness = std::numeric_limits<double>::quiet_NaN();
    double static_objective = std::numeric_limits<double>::quiet_NaN();
    double static_node_correctness = std::numeric_limits<double>::quiet_NaN();
};

inline std::vector<SweepRow> noise_sweep(const DynamicNetwork& original, const SweepOptions& options) {
    const StaticNetwork flat_original = flatten(original);
    std::vector<SweepRow> rows(options.levels.size() * options.replicates);

    auto run_cell = [&](std::size_t cell) {
        const std::size_t level_index = cell / options.replicates;
        const int replicate = static_cast<int>(cell % options.replicates);
        const double level = options.levels[level_index];
        Rng rng(derive_seed(options.seed, level_index, static_cast<std::uint64_t>(replicate)));
        DynamicNetwork noisy = apply_noise(original, options.scheme, level, rng);

        SweepRow row;
        row.level = level;
        row.replicate = replicate;

        Alignment truth = ground_truth_alignment(original, noisy);
        SimilarityMatrix dyn_sim;
        const bool need_dyn_sim = options.alpha < 1.0;
        if (need_dyn_sim) dyn_sim = dgdv_similarity(original, noisy);
        row.ideal_dynamic_objective =
            ideal_quality(original, noisy, options.alpha, need_dyn_sim ? &dyn_sim : nullptr).total;

        StaticNetwork flat_noisy = flatten(noisy);
        row.static_truth_s3 = s3(flat_original, flat_noisy, truth).s3;

        if (options.run_searches) {
            SearchConfig cfg = options.search;
            cfg.alpha = options.alpha;

            ObjectiveInputs dyn;
            dyn.mode = AlignmentMode::dynamic_events;
            dyn.net1 = &original;
            dyn.net2 = &noisy;
            dyn.alpha = options.alpha;
            dyn.similarity = need_dyn_sim ? &dyn_sim : nullptr;
            cfg.seed = derive_seed(options.seed, cell, 0xd1u);
            SearchTrace dyn_trace = run_search(cfg, dyn);
            row.dynamic_objective = dyn_trace.best_value.total;
            row.dynamic_node_correctness = node_correctness(dyn_trace.best_alignment, truth);

            SimilarityMatrix stat_sim;
            ObjectiveInputs stat;
            stat.mode = AlignmentMode::static_graphs;
            stat.graph1 = &flat_original;
            stat.graph2 = &flat_noisy;
            stat.alpha = options.alpha;
            if (options.alpha < 1.0) {
                stat_sim = gdv_similarity(flat_original, flat_noisy);
                stat.similarity = &stat_sim;
            }
            cfg.seed = derive_seed(options.seed, cell, 0x5au);
            SearchTrace stat_trace = run_search(cfg, stat);
            row.static_objective = stat_trace.best_value.total;
            row.static_node_correctness = node_correctness(stat_trace.best_alignment, truth);
        }
        rows[cell] = row;
    };

    if (options.run_searches || options.threads <= 1) {
        for (std::size_t cell = 0; cell < rows.size(); ++cell) run_cell(cell);
    } else {
        parallel_for(0, rows.size(), options.threads, run_cell);
    }
    return rows;
}

struct SweepLevelSummary {
    double level = 0;
    double mean_ideal = 0;
    double mean_static_truth_s3 = 0;
    double mean_dynamic_objective = 0;
    double mean_dynamic_node_correctness = 0;
    double mean_static_objective = 0;
    double mean_static_node_correctness = 0;
};

inline std::vector<SweepLevelSummary> summarize_sweep(const std::vector<SweepRow>& rows) {
    std::vector<SweepLevelSummary> out;
    for (const SweepRow& row : rows) {
        if (out.empty() || out.back().level != row.level) {
            out.push_back(SweepLevelSummary{row.level, 0, 0, 0, 0, 0, 0});
        }
    }
    for (SweepLevelSummary& s : out) {
        double n = 0;
        for (const SweepRow& row : rows) {
            if (row.level != s.level) continue;
            n += 1;
            s.mean_ideal += row.ideal_dynamic_objective;
            s.mean_static_truth_s3 += row.static_truth_s3;
            s.mean_dynamic_objective += row.dynamic_objective;
            s.mean_dynamic_node_correctness += row.dynamic_node_correctness;
            s.mean_static_objective += row.static_objective;
            s.mean_static_node_correctness += row.static_node_correctness;
        }
        s.mean_ideal /= n;
        s.mean_static_truth_s3 /= n;
        s.mean_dynamic_objective /= n;
        s.mean_dynamic_node_correctness /= n;
        s.mean_static_objective /= n;
        s.mean_static_node_correctness /= n;
    }
    return out;
}

// Network discrimination protocol: generate several networks per model, align
// every unordered pair, and summarize whether same-model pairs score higher.
struct DiscriminationOptions {
    std::vector<SyntheticModel> models = {SyntheticModel::preferential_attachment,
                                          SyntheticModel::random_geometric};
    int networks_per_model = 3;
    int nodes = 50;
    int snapshots = 10;
    std::uint64_t seed = 0;
    AlignmentMode mode = AlignmentMode::dynamic_events;
    double alpha = 1.0;
    SearchConfig search;
};

struct DiscriminationPair {
    std::size_t first = 0;
    std::size_t second = 0;
    bool similar = false;
    double quality = 0;
};

struct DiscriminationResult {
    std::vector<std::string> network_names;
    std::vector<DiscriminationPair> pairs;
    CurveSummary summary;
};

inline DiscriminationResult discriminate(const DiscriminationOptions& options) {
    std::vector<DynamicNetwork> networks;
    std::vector<int> model_of;
    DiscriminationResult result;
    for (std::size_t m = 0; m < options.models.size(); ++m) {
        for (int k = 0; k < options.networks_per_model; ++k) {
            networks.push_back(generate_synthetic(options.models[m], options.nodes, options.snapshots,
                                                  derive_seed(options.seed, m, k)));
            model_of.push_back(static_cast<int>(m));
            result.network_names.push_back(std::string(synthetic_model_name(options.models[m])) + "-" +
                                           std::to_string(k));
        }
    }

    std::vector<StaticNetwork> flats;
    if (options.mode == AlignmentMode::static_graphs) {
        flats.reserve(networks.size());
        for (const DynamicNetwork& net : networks) flats.push_back(flatten(net));
    }

    std::vector<ScoredPair> scored;
    for (std::size_t i = 0; i < networks.size(); ++i) {
        for (std::size_t j = i + 1; j < networks.size(); ++j) {
            ObjectiveInputs in;
            in.mode = options.mode;
            in.alpha = options.alpha;
            SimilarityMatrix sim;
            if (options.mode == AlignmentMode::dynamic_events) {
                in.net1 = &networks[i];
                in.net2 = &networks[j];
                if (options.alpha < 1.0) {
                    sim = dgdv_similarity(networks[i], networks[j]);
                    in.similarity = &sim;
                }
            } else {
                in.graph1 = &flats[i];
                in.graph2 = &flats[j];
                if (options.alpha < 1.0) {
                    sim = gdv_similarity(flats[i], flats[j]);
                    in.similarity = &sim;
                }
            }
            SearchConfig cfg = options.search;
            cfg.alpha = options.alpha;
            cfg.seed = derive_seed(options.seed, i * networks.size() + j,
                                   options.mode == AlignmentMode::dynamic_events ? 0xd1u : 0x5au);
            SearchTrace trace = run_search(cfg, in);

            DiscriminationPair pair;
            pair.first = i;
            pair.second = j;
            pair.similar = model_of[i] == model_of[j];
            pair.quality = trace.best_value.total;
            result.pairs.push_back(pair);
            scored.push_back(ScoredPair{pair.quality, pair.similar});
        }
    }
    result.summary = pr_roc(scored);
    return result;
}

}  // namespace dynalign

#endif  // DYNALIGN_EVALUATION_HPP
