// Command-line toolkit for temporal network alignment: align two networks,
// randomize a network for noise experiments, run noise sweeps and network
// discrimination protocols, evaluate alignments, convert formats, and dump
// graphlet signatures. Every run leaves an experiment record naming its
// inputs by digest so results can be reproduced bit for bit.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dynalign/conservation.hpp"
#include "dynalign/core.hpp"
#include "dynalign/evaluation.hpp"
#include "dynalign/experiment.hpp"
#include "dynalign/io.hpp"
#include "dynalign/objective.hpp"
#include "dynalign/randomize.hpp"
#include "dynalign/rng.hpp"
#include "dynalign/search.hpp"
#include "dynalign/similarity.hpp"

namespace fs = std::filesystem;
using namespace dynalign;

namespace {

std::string fmt(double x) { return detail::format_number(x); }

// NaN marks a column that was not computed (e.g. search skipped); emit an
// empty CSV field for it.
std::string fmt_opt(double x) { return std::isnan(x) ? std::string() : fmt(x); }

std::string level_tag(double level) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", level);
    return buf;
}

DynamicNetwork load_dynamic(const std::string& path, const std::string& format) {
    if (format == "events") return load_event_list_file(path);
    if (format == "snapshots") return from_snapshots(load_snapshots_file(path));
    throw DataError("dynamic networks require --input-format events or snapshots");
}

StaticNetwork load_static(const std::string& path, const std::string& format) {
    if (format == "edges") return load_edge_list_file(path);
    return flatten(load_dynamic(path, format));
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw DataError("cannot create output directory '" + dir + "'");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    return out;
}

struct SearchFlags {
    double alpha = 0.5;
    std::size_t population = 2000;
    std::size_t max_generations = 10000;
    double elite_fraction = 0.5;
    double stop_epsilon = 0.0001;
    std::size_t stop_window = 500;
    std::uint64_t seed = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "Objective blend: alpha*edge + (1-alpha)*node")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_option("--population", population, "Population size")->capture_default_str();
        cmd->add_option("--max-generations", max_generations, "Generation budget")
            ->capture_default_str();
        cmd->add_option("--elite-fraction", elite_fraction, "Fraction kept each generation")
            ->capture_default_str();
        cmd->add_option("--stop-epsilon", stop_epsilon, "Minimum improvement per stop window")
            ->capture_default_str();
        cmd->add_option("--stop-window", stop_window, "Stall window in generations")
            ->capture_default_str();
        cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
        cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
    }

    SearchConfig to_config() const {
        SearchConfig cfg;
        cfg.alpha = alpha;
        cfg.population_size = population;
        cfg.max_generations = max_generations;
        cfg.elite_fraction = elite_fraction;
        cfg.stop_epsilon = stop_epsilon;
        cfg.stop_window = stop_window;
        cfg.seed = seed;
        cfg.threads = threads;
        return cfg;
    }

    nlohmann::json to_json() const {
        return {{"alpha", alpha},
                {"population", population},
                {"max_generations", max_generations},
                {"elite_fraction", elite_fraction},
                {"stop_epsilon", stop_epsilon},
                {"stop_window", stop_window},
                {"seed", seed},
                {"threads", threads}};
    }
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// ---- align --------------------------------------------------------------

struct AlignArgs {
    std::string net1_path, net2_path;
    std::string mode = "dynamic";
    std::string input_format = "events";
    std::string similarity_path;
    std::string out_dir = ".";
    SearchFlags search;
};

int cmd_align(const AlignArgs& args) {
    Timer timer;
    ensure_dir(args.out_dir);

    ExperimentRecord record;
    record.subcommand = "align";
    record.add_input(args.net1_path);
    record.add_input(args.net2_path);
    if (!args.similarity_path.empty()) record.add_input(args.similarity_path);
    record.seed = args.search.seed;
    record.threads = args.search.threads;
    record.config = args.search.to_json();
    record.config["mode"] = args.mode;
    record.config["input_format"] = args.input_format;
    record.config["similarity_file"] = args.similarity_path;

    SearchConfig cfg = args.search.to_config();
    ObjectiveInputs inputs;
    inputs.alpha = cfg.alpha;

    DynamicNetwork h1, h2;
    StaticNetwork g1, g2;
    SimilarityMatrix sim;

    auto check_sizes = [](std::size_t n1, std::size_t n2) {
        if (n1 > n2)
            throw DataError("the first network must be the smaller one; swap the arguments");
    };

    if (args.mode == "dynamic") {
        h1 = load_dynamic(args.net1_path, args.input_format);
        h2 = load_dynamic(args.net2_path, args.input_format);
        check_sizes(h1.num_nodes(), h2.num_nodes());
        inputs.mode = AlignmentMode::dynamic_events;
        inputs.net1 = &h1;
        inputs.net2 = &h2;
        if (cfg.alpha < 1.0) {
            if (!args.similarity_path.empty()) {
                std::ifstream in(args.similarity_path);
                if (!in) throw DataError("cannot open '" + args.similarity_path + "'");
                sim = parse_similarity(in, h1, h2);
            } else {
                std::cerr << "computing dynamic graphlet similarities\n";
                sim = dgdv_similarity(h1, h2);
            }
            inputs.similarity = &sim;
        }
    } else {
        g1 = load_static(args.net1_path, args.input_format);
        g2 = load_static(args.net2_path, args.input_format);
        check_sizes(g1.num_nodes(), g2.num_nodes());
        inputs.mode = AlignmentMode::static_graphs;
        inputs.graph1 = &g1;
        inputs.graph2 = &g2;
        if (cfg.alpha < 1.0) {
            if (!args.similarity_path.empty()) {
                std::ifstream in(args.similarity_path);
                if (!in) throw DataError("cannot open '" + args.similarity_path + "'");
                sim = parse_similarity(in, g1, g2);
            } else {
                sim = gdv_similarity(g1, g2);
            }
            inputs.similarity = &sim;
        }
    }
    if (cfg.alpha >= 1.0) std::cerr << "alpha = 1: node conservation not evaluated\n";

    SearchTrace trace = run_search(cfg, inputs);

    const std::string alignment_path = args.out_dir + "/alignment.txt";
    const std::string scores_path = args.out_dir + "/scores.txt";
    const std::string trace_path = args.out_dir + "/trace.csv";
    {
        auto out = open_out(alignment_path);
        if (args.mode == "dynamic") {
            write_alignment(trace.best_alignment, h1, h2, out);
        } else {
            write_alignment(trace.best_alignment, g1, g2, out);
        }
    }
    {
        auto out = open_out(scores_path);
        out << "objective " << fmt(trace.best_value.total) << '\n';
        out << "edge_term " << fmt(trace.best_value.edge_term) << '\n';
        out << "node_term " << fmt(trace.best_value.node_term) << '\n';
        out << "alpha " << fmt(cfg.alpha) << '\n';
        out << "mode " << args.mode << '\n';
        out << "generations " << trace.generations_run() << '\n';
        out << "stop_reason "
            << (trace.stop_reason == StopReason::converged ? "converged" : "max_generations") << '\n';
    }
    {
        auto out = open_out(trace_path);
        out << "generation,best,mean\n";
        for (std::size_t g = 0; g < trace.generations.size(); ++g) {
            out << g << ',' << fmt(trace.generations[g].best) << ',' << fmt(trace.generations[g].mean)
                << '\n';
        }
    }

    record.outputs = {alignment_path, scores_path, trace_path};
    record.wall_seconds = timer.seconds();
    record.write(args.out_dir + "/record.json");

    std::cout << "objective " << fmt(trace.best_value.total) << " (edge " << fmt(trace.best_value.edge_term)
              << ", node " << fmt(trace.best_value.node_term) << ") after " << trace.generations_run()
              << " generations\n";
    return 0;
}

// ---- randomize ------------------------------------------------------------

struct RandomizeArgs {
    std::string net_path;
    std::string scheme = "time-swap";
    std::vector<double> levels = default_noise_grid();
    int replicates = 5;
    std::uint64_t seed = 0;
    std::string input_format = "events";
    std::string out_dir = ".";
};

int cmd_randomize(const RandomizeArgs& args) {
    Timer timer;
    ensure_dir(args.out_dir);
    DynamicNetwork net = load_dynamic(args.net_path, args.input_format);
    NoiseScheme scheme = args.scheme == "rewire" ? NoiseScheme::rewire : NoiseScheme::time_swap;

    ExperimentRecord record;
    record.subcommand = "randomize";
    record.add_input(args.net_path);
    record.seed = args.seed;
    record.config = {{"scheme", args.scheme},
                     {"levels", args.levels},
                     {"replicates", args.replicates},
                     {"seed", args.seed},
                     {"input_format", args.input_format}};

    const std::string stem = fs::path(args.net_path).stem().string();
    for (std::size_t li = 0; li < args.levels.size(); ++li) {
        double level = args.levels[li];
        if (level < 0.0 || level > 1.0) throw DataError("noise level must lie in [0, 1]");
        for (int rep = 0; rep < args.replicates; ++rep) {
            Rng rng(derive_seed(args.seed, li, static_cast<std::uint64_t>(rep)));
            NoiseStats stats;
            DynamicNetwork noisy = apply_noise(net, scheme, level, rng, &stats);
            std::string path = args.out_dir + "/" + stem + "_" + args.scheme + "_L" +
                               level_tag(level) + "_r" + std::to_string(rep) + ".ev";
            auto out = open_out(path);
            write_event_list(noisy, out);
            record.outputs.push_back(path);
            if (stats.skipped > 0) {
                std::cerr << path << ": " << stats.skipped << " of " << stats.selected
                          << " perturbations skipped after retries\n";
            }
        }
    }
    record.wall_seconds = timer.seconds();
    record.write(args.out_dir + "/record.json");
    std::cout << "wrote " << record.outputs.size() << " noisy networks to " << args.out_dir << '\n';
    return 0;
}

// ---- convert ----------------------------------------------------------------

struct ConvertArgs {
    std::string in_path, out_path;
    std::string from = "events";
    std::string to = "events";
    double extend = 0.0;
};

int cmd_convert(const ConvertArgs& args) {
    Timer timer;
    ExperimentRecord record;
    record.subcommand = "convert";
    record.add_input(args.in_path);
    record.config = {{"from", args.from}, {"to", args.to}, {"extend", args.extend}};

    DynamicNetwork net = load_dynamic(args.in_path, args.from);
    if (args.extend > 0.0) net = extend_durations(net, args.extend);

    auto out = open_out(args.out_path);
    if (args.to == "events") {
        write_event_list(net, out);
    } else {
        write_edge_list(flatten(net), out);
    }
    record.outputs = {args.out_path};
    record.wall_seconds = timer.seconds();
    record.write(args.out_path + ".record.json");
    return 0;
}

// ---- eval ---------------------------------------------------------------------

struct EvalArgs {
    std::string net1_path, net2_path, alignment_path;
    std::string mode = "dynamic";
    std::string input_format = "events";
    std::string similarity_path;
    std::string truth_path;
    bool truth_identity = false;
    double alpha = 0.5;
    std::string out_dir;
};

int cmd_eval(const EvalArgs& args) {
    Timer timer;
    ExperimentRecord record;
    record.subcommand = "eval";
    record.add_input(args.net1_path);
    record.add_input(args.net2_path);
    record.add_input(args.alignment_path);
    record.config = {{"mode", args.mode},
                     {"alpha", args.alpha},
                     {"truth_identity", args.truth_identity},
                     {"truth_file", args.truth_path},
                     {"similarity_file", args.similarity_path}};

    ObjectiveInputs inputs;
    inputs.alpha = args.alpha;
    DynamicNetwork h1, h2;
    StaticNetwork g1, g2;
    SimilarityMatrix sim;
    Alignment f, truth;
    bool have_truth = false;

    auto read_alignment = [&](const std::string& path, const auto& n1, const auto& n2) {
        std::ifstream in(path);
        if (!in) throw DataError("cannot open '" + path + "'");
        return parse_alignment(in, n1, n2);
    };
    auto read_similarity = [&](const auto& n1, const auto& n2) {
        std::ifstream in(args.similarity_path);
        if (!in) throw DataError("cannot open '" + args.similarity_path + "'");
        return parse_similarity(in, n1, n2);
    };

    if (args.mode == "dynamic") {
        h1 = load_dynamic(args.net1_path, args.input_format);
        h2 = load_dynamic(args.net2_path, args.input_format);
        inputs.mode = AlignmentMode::dynamic_events;
        inputs.net1 = &h1;
        inputs.net2 = &h2;
        f = read_alignment(args.alignment_path, h1, h2);
        if (args.truth_identity) {
            truth = ground_truth_alignment(h1, h2);
            have_truth = true;
        } else if (!args.truth_path.empty()) {
            truth = read_alignment(args.truth_path, h1, h2);
            have_truth = true;
        }
        if (args.alpha < 1.0) {
            sim = args.similarity_path.empty() ? dgdv_similarity(h1, h2) : read_similarity(h1, h2);
            inputs.similarity = &sim;
        }
    } else {
        g1 = load_static(args.net1_path, args.input_format);
        g2 = load_static(args.net2_path, args.input_format);
        inputs.mode = AlignmentMode::static_graphs;
        inputs.graph1 = &g1;
        inputs.graph2 = &g2;
        f = read_alignment(args.alignment_path, g1, g2);
        if (args.truth_identity) {
            truth = ground_truth_alignment(g1, g2);
            have_truth = true;
        } else if (!args.truth_path.empty()) {
            truth = read_alignment(args.truth_path, g1, g2);
            have_truth = true;
        }
        if (args.alpha < 1.0) {
            sim = args.similarity_path.empty() ? gdv_similarity(g1, g2) : read_similarity(g1, g2);
            inputs.similarity = &sim;
        }
    }

    ObjectiveValue value = evaluate_objective(inputs, f);
    std::ostringstream report;
    report << "objective " << fmt(value.total) << '\n';
    report << "edge_term " << fmt(value.edge_term) << '\n';
    report << "node_term " << fmt(value.node_term) << '\n';
    if (have_truth) report << "node_correctness " << fmt(node_correctness(f, truth)) << '\n';
    std::cout << report.str();

    if (!args.out_dir.empty()) {
        ensure_dir(args.out_dir);
        const std::string eval_path = args.out_dir + "/eval.txt";
        auto out = open_out(eval_path);
        out << report.str();
        record.outputs = {eval_path};
        record.wall_seconds = timer.seconds();
        record.write(args.out_dir + "/record.json");
    }
    return 0;
}

// ---- sweep ---------------------------------------------------------------------

struct SweepArgs {
    std::string net_path;
    std::string scheme = "time-swap";
    std::vector<double> levels = default_noise_grid();
    int replicates = 5;
    std::string input_format = "events";
    std::string out_dir = ".";
    bool skip_search = false;
    SearchFlags search;
};

int cmd_sweep(const SweepArgs& args) {
    Timer timer;
    ensure_dir(args.out_dir);
    DynamicNetwork net = load_dynamic(args.net_path, args.input_format);

    SweepOptions options;
    options.scheme = args.scheme == "rewire" ? NoiseScheme::rewire : NoiseScheme::time_swap;
    options.levels = args.levels;
    options.replicates = args.replicates;
    options.seed = args.search.seed;
    options.alpha = args.search.alpha;
    options.run_searches = !args.skip_search;
    options.search = args.search.to_config();
    options.threads = args.search.threads;

    std::vector<SweepRow> rows = noise_sweep(net, options);

    ExperimentRecord record;
    record.subcommand = "sweep";
    record.add_input(args.net_path);
    record.seed = args.search.seed;
    record.threads = args.search.threads;
    record.config = args.search.to_json();
    record.config["scheme"] = args.scheme;
    record.config["levels"] = args.levels;
    record.config["replicates"] = args.replicates;
    record.config["skip_search"] = args.skip_search;

    const std::string rows_path = args.out_dir + "/sweep.csv";
    {
        auto out = open_out(rows_path);
        out << "level,replicate,ideal_dynamic_objective,static_truth_s3,dynamic_objective,"
               "dynamic_node_correctness,static_objective,static_node_correctness\n";
        for (const SweepRow& row : rows) {
            out << fmt(row.level) << ',' << row.replicate << ',' << fmt(row.ideal_dynamic_objective)
                << ',' << fmt(row.static_truth_s3) << ',' << fmt_opt(row.dynamic_objective) << ','
                << fmt_opt(row.dynamic_node_correctness) << ',' << fmt_opt(row.static_objective) << ','
                << fmt_opt(row.static_node_correctness) << '\n';
        }
    }
    const std::string summary_path = args.out_dir + "/sweep_summary.csv";
    {
        auto out = open_out(summary_path);
        out << "level,mean_ideal,mean_static_truth_s3,mean_dynamic_objective,"
               "mean_dynamic_node_correctness,mean_static_objective,mean_static_node_correctness\n";
        for (const SweepLevelSummary& s : summarize_sweep(rows)) {
            out << fmt(s.level) << ',' << fmt(s.mean_ideal) << ',' << fmt(s.mean_static_truth_s3) << ','
                << fmt_opt(s.mean_dynamic_objective) << ',' << fmt_opt(s.mean_dynamic_node_correctness) << ','
                << fmt_opt(s.mean_static_objective) << ',' << fmt_opt(s.mean_static_node_correctness) << '\n';
        }
    }

    record.outputs = {rows_path, summary_path};
    record.wall_seconds = timer.seconds();
    record.write(args.out_dir + "/record.json");
    std::cout << "sweep finished: " << rows.size() << " runs\n";
    return 0;
}

// ---- discriminate -----------------------------------------------------------------

struct DiscriminateArgs {
    std::vector<std::string> models = {"preferential", "geometric"};
    int per_model = 3;
    int nodes = 50;
    int snapshots = 10;
    std::string mode = "dynamic";
    std::string out_dir = ".";
    SearchFlags search;
};

int cmd_discriminate(const DiscriminateArgs& args) {
    Timer timer;
    ensure_dir(args.out_dir);

    DiscriminationOptions options;
    options.models.clear();
    for (const std::string& name : args.models) {
        if (name == "preferential") {
            options.models.push_back(SyntheticModel::preferential_attachment);
        } else if (name == "geometric") {
            options.models.push_back(SyntheticModel::random_geometric);
        } else {
            throw DataError("unknown model '" + name + "' (use preferential or geometric)");
        }
    }
    options.networks_per_model = args.per_model;
    options.nodes = args.nodes;
    options.snapshots = args.snapshots;
    options.seed = args.search.seed;
    options.mode = args.mode == "static" ? AlignmentMode::static_graphs : AlignmentMode::dynamic_events;
    options.alpha = args.search.alpha;
    options.search = args.search.to_config();

    DiscriminationResult result = discriminate(options);

    ExperimentRecord record;
    record.subcommand = "discriminate";
    record.seed = args.search.seed;
    record.threads = args.search.threads;
    record.config = args.search.to_json();
    record.config["models"] = args.models;
    record.config["per_model"] = args.per_model;
    record.config["nodes"] = args.nodes;
    record.config["snapshots"] = args.snapshots;
    record.config["mode"] = args.mode;

    const std::string pairs_path = args.out_dir + "/discriminate_pairs.csv";
    {
        auto out = open_out(pairs_path);
        out << "network_a,network_b,similar,quality\n";
        for (const DiscriminationPair& p : result.pairs) {
            out << result.network_names[p.first] << ',' << result.network_names[p.second] << ','
                << (p.similar ? 1 : 0) << ',' << fmt(p.quality) << '\n';
        }
    }
    const std::string curve_path = args.out_dir + "/discriminate_curve.csv";
    {
        auto out = open_out(curve_path);
        out << "threshold,precision,recall,fpr\n";
        for (const CurvePoint& pt : result.summary.points) {
            out << fmt(pt.threshold) << ',' << fmt(pt.precision) << ',' << fmt(pt.recall) << ','
                << fmt(pt.fpr) << '\n';
        }
    }
    const std::string summary_path = args.out_dir + "/discriminate_summary.csv";
    {
        auto out = open_out(summary_path);
        out << "aupr,f_cross,f_max,auroc\n";
        out << fmt(result.summary.aupr) << ',' << fmt(result.summary.f_cross) << ','
            << fmt(result.summary.f_max) << ',' << fmt(result.summary.auroc) << '\n';
    }

    record.outputs = {pairs_path, curve_path, summary_path};
    record.wall_seconds = timer.seconds();
    record.write(args.out_dir + "/record.json");
    std::cout << "AUPR " << fmt(result.summary.aupr) << "  AUROC " << fmt(result.summary.auroc) << '\n';
    return 0;
}

// ---- signatures -----------------------------------------------------------------

struct SignaturesArgs {
    std::string net_path;
    std::string kind = "gdv";
    std::string input_format = "events";
    double delta_t = 1.0;
    int max_nodes = 4;
    int max_events = 6;
    std::string out_path;
};

int cmd_signatures(const SignaturesArgs& args) {
    Timer timer;
    ExperimentRecord record;
    record.subcommand = "signatures";
    record.add_input(args.net_path);
    record.config = {{"kind", args.kind},
                     {"delta_t", args.delta_t},
                     {"max_nodes", args.max_nodes},
                     {"max_events", args.max_events}};

    std::ostringstream buffer;
    if (args.kind == "dgdv") {
        DynamicNetwork net = load_dynamic(args.net_path, args.input_format);
        DynamicGdvParams params;
        params.delta_t = args.delta_t;
        params.max_nodes = args.max_nodes;
        params.max_events = args.max_events;
        write_signatures(net, dynamic_gdv(net, params), buffer);
    } else {
        StaticNetwork net = load_static(args.net_path, args.input_format);
        write_signatures(net, static_gdv(net), buffer);
    }

    if (args.out_path.empty()) {
        std::cout << buffer.str();
    } else {
        auto out = open_out(args.out_path);
        out << buffer.str();
        record.outputs = {args.out_path};
        record.wall_seconds = timer.seconds();
        record.write(args.out_path + ".record.json");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynalign: temporal network alignment toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    AlignArgs align_args;
    CLI::App* align_cmd = app.add_subcommand("align", "Align two networks with the genetic search");
    align_cmd->add_option("net1", align_args.net1_path, "Smaller network file")->required();
    align_cmd->add_option("net2", align_args.net2_path, "Larger network file")->required();
    align_cmd->add_option("--mode", align_args.mode, "dynamic or static")
        ->check(CLI::IsMember({"dynamic", "static"}))
        ->capture_default_str();
    align_cmd->add_option("--input-format", align_args.input_format, "events, snapshots or edges")
        ->check(CLI::IsMember({"events", "snapshots", "edges"}))
        ->capture_default_str();
    align_cmd->add_option("--similarity", align_args.similarity_path,
                          "Pairwise node similarity file (u v s)");
    align_cmd->add_option("--out-dir", align_args.out_dir, "Output directory")->capture_default_str();
    align_args.search.attach(align_cmd);

    RandomizeArgs randomize_args;
    CLI::App* randomize_cmd = app.add_subcommand("randomize", "Write randomized (noisy) versions");
    randomize_cmd->add_option("net", randomize_args.net_path, "Network file")->required();
    randomize_cmd->add_option("--scheme", randomize_args.scheme, "time-swap or rewire")
        ->check(CLI::IsMember({"time-swap", "rewire"}))
        ->capture_default_str();
    randomize_cmd->add_option("--levels", randomize_args.levels, "Noise levels in [0,1]")
        ->delimiter(',');
    randomize_cmd->add_option("--reps", randomize_args.replicates, "Replicates per level")
        ->capture_default_str();
    randomize_cmd->add_option("--seed", randomize_args.seed, "Random seed")->capture_default_str();
    randomize_cmd
        ->add_option("--input-format", randomize_args.input_format, "events or snapshots")
        ->check(CLI::IsMember({"events", "snapshots"}))
        ->capture_default_str();
    randomize_cmd->add_option("--out-dir", randomize_args.out_dir, "Output directory")
        ->capture_default_str();

    ConvertArgs convert_args;
    CLI::App* convert_cmd = app.add_subcommand("convert", "Convert network file formats");
    convert_cmd->add_option("input", convert_args.in_path, "Input file")->required();
    convert_cmd->add_option("output", convert_args.out_path, "Output file")->required();
    convert_cmd->add_option("--from", convert_args.from, "events or snapshots")
        ->check(CLI::IsMember({"events", "snapshots"}))
        ->capture_default_str();
    convert_cmd->add_option("--to", convert_args.to, "events or flatten")
        ->check(CLI::IsMember({"events", "flatten"}))
        ->capture_default_str();
    convert_cmd->add_option("--extend", convert_args.extend,
                            "Extend every event duration by this amount first")
        ->capture_default_str();

    EvalArgs eval_args;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Score an existing alignment");
    eval_cmd->add_option("net1", eval_args.net1_path, "Smaller network file")->required();
    eval_cmd->add_option("net2", eval_args.net2_path, "Larger network file")->required();
    eval_cmd->add_option("alignment", eval_args.alignment_path, "Alignment file (u v lines)")
        ->required();
    eval_cmd->add_option("--mode", eval_args.mode, "dynamic or static")
        ->check(CLI::IsMember({"dynamic", "static"}))
        ->capture_default_str();
    eval_cmd->add_option("--input-format", eval_args.input_format, "events, snapshots or edges")
        ->check(CLI::IsMember({"events", "snapshots", "edges"}))
        ->capture_default_str();
    eval_cmd->add_option("--alpha", eval_args.alpha, "Objective blend")->capture_default_str();
    eval_cmd->add_option("--similarity", eval_args.similarity_path, "Similarity file");
    eval_cmd->add_option("--truth", eval_args.truth_path, "Ground-truth alignment file");
    eval_cmd->add_flag("--truth-identity", eval_args.truth_identity,
                       "Ground truth maps equal labels to each other");
    eval_cmd->add_option("--out-dir", eval_args.out_dir, "Optional output directory");

    SweepArgs sweep_args;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Noise sweep with ideal and searched quality");
    sweep_cmd->add_option("net", sweep_args.net_path, "Network file")->required();
    sweep_cmd->add_option("--scheme", sweep_args.scheme, "time-swap or rewire")
        ->check(CLI::IsMember({"time-swap", "rewire"}))
        ->capture_default_str();
    sweep_cmd->add_option("--levels", sweep_args.levels, "Noise levels")->delimiter(',');
    sweep_cmd->add_option("--reps", sweep_args.replicates, "Replicates per level")
        ->capture_default_str();
    sweep_cmd->add_option("--input-format", sweep_args.input_format, "events or snapshots")
        ->check(CLI::IsMember({"events", "snapshots"}))
        ->capture_default_str();
    sweep_cmd->add_option("--out-dir", sweep_args.out_dir, "Output directory")->capture_default_str();
    sweep_cmd->add_flag("--skip-search", sweep_args.skip_search,
                        "Only compute ground-truth (ideal) qualities");
    sweep_args.search.attach(sweep_cmd);

    DiscriminateArgs discriminate_args;
    CLI::App* discriminate_cmd =
        app.add_subcommand("discriminate", "Network discrimination over synthetic models");
    discriminate_cmd->add_option("--models", discriminate_args.models, "preferential,geometric")
        ->delimiter(',');
    discriminate_cmd->add_option("--per-model", discriminate_args.per_model, "Networks per model")
        ->capture_default_str();
    discriminate_cmd->add_option("--nodes", discriminate_args.nodes, "Nodes per network")
        ->capture_default_str();
    discriminate_cmd->add_option("--snapshots", discriminate_args.snapshots, "Snapshots per network")
        ->capture_default_str();
    discriminate_cmd->add_option("--mode", discriminate_args.mode, "dynamic or static")
        ->check(CLI::IsMember({"dynamic", "static"}))
        ->capture_default_str();
    discriminate_cmd->add_option("--out-dir", discriminate_args.out_dir, "Output directory")
        ->capture_default_str();
    discriminate_args.search.attach(discriminate_cmd);

    SignaturesArgs signatures_args;
    CLI::App* signatures_cmd = app.add_subcommand("signatures", "Dump GDV or DGDV vectors");
    signatures_cmd->add_option("net", signatures_args.net_path, "Network file")->required();
    signatures_cmd->add_option("--kind", signatures_args.kind, "gdv or dgdv")
        ->check(CLI::IsMember({"gdv", "dgdv"}))
        ->capture_default_str();
    signatures_cmd
        ->add_option("--input-format", signatures_args.input_format, "events, snapshots or edges")
        ->check(CLI::IsMember({"events", "snapshots", "edges"}))
        ->capture_default_str();
    signatures_cmd->add_option("--delta-t", signatures_args.delta_t, "Temporal adjacency window")
        ->capture_default_str();
    signatures_cmd->add_option("--max-nodes", signatures_args.max_nodes, "Graphlet node limit")
        ->capture_default_str();
    signatures_cmd->add_option("--max-events", signatures_args.max_events, "Graphlet event limit")
        ->capture_default_str();
    signatures_cmd->add_option("--out", signatures_args.out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(align_cmd)) return cmd_align(align_args);
        if (app.got_subcommand(randomize_cmd)) return cmd_randomize(randomize_args);
        if (app.got_subcommand(convert_cmd)) return cmd_convert(convert_args);
        if (app.got_subcommand(eval_cmd)) return cmd_eval(eval_args);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(sweep_args);
        if (app.got_subcommand(discriminate_cmd)) return cmd_discriminate(discriminate_args);
        if (app.got_subcommand(signatures_cmd)) return cmd_signatures(signatures_args);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
