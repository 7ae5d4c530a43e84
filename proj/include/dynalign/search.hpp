#ifndef DYNALIGN_SEARCH_HPP
#define DYNALIGN_SEARCH_HPP

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dynalign/core.hpp"
#include "dynalign/objective.hpp"
#include "dynalign/parallel.hpp"
#include "dynalign/rng.hpp"

namespace dynalign {

struct SearchConfig {
    double alpha = 0.5;
    std::size_t population_size = 2000;   // the original method default is 15000
    std::size_t max_generations = 10000;
    double elite_fraction = 0.5;
    double stop_epsilon = 0.0001;
    std::size_t stop_window = 500;
    std::uint64_t seed = 0;
    unsigned threads = 1;

    void validate() const {
        if (alpha < 0.0 || alpha > 1.0) throw DataError("alpha must lie in [0, 1]");
        if (population_size < 2) throw DataError("population size must be at least 2");
        if (elite_fraction <= 0.0 || elite_fraction >= 1.0)
            throw DataError("elite fraction must lie strictly between 0 and 1");
        if (stop_window == 0) throw DataError("stop window must be positive");
    }
};

enum class StopReason { converged, max_generations };

struct GenerationStats {
    double best = 0;
    double mean = 0;
    double seconds = 0;  // cumulative wall time; not part of any serialized artifact
};

struct SearchTrace {
    std::vector<GenerationStats> generations;
    Alignment best_alignment;
    ObjectiveValue best_value;
    StopReason stop_reason = StopReason::max_generations;
    double wall_seconds = 0;

    std::size_t generations_run() const { return generations.size(); }
};

namespace detail {

using Perm = std::vector<NodeIndex>;

inline Perm random_perm(std::size_t n, Rng& rng) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    shuffle(p, rng);
    return p;
}

// Child of two permutations of the same target set. The relative permutation
// sigma = B o A^-1 decomposes into cycles over target values; the child applies
// roughly half of each cycle on top of A, so it agrees with both parents
// wherever they agree and stays a valid permutation. On a 2-cycle the single
// rounding bit selects one parent or the other.
inline void crossover_perm(const Perm& a, const Perm& b, Rng& rng, Perm& child,
                           std::vector<NodeIndex>& inv_scratch, std::vector<char>& visited_scratch) {
    const std::size_t n = a.size();
    inv_scratch.resize(n);
    for (NodeIndex pos = 0; pos < n; ++pos) inv_scratch[a[pos]] = pos;

    // tau starts as the identity and accumulates partial cycles of sigma.
    child.resize(n);
    std::vector<NodeIndex>& tau = child;
    std::iota(tau.begin(), tau.end(), 0);

    visited_scratch.assign(n, 0);
    std::vector<NodeIndex> cycle;
    for (NodeIndex start = 0; start < n; ++start) {
        if (visited_scratch[start]) continue;
        cycle.clear();
        NodeIndex x = start;
        do {
            visited_scratch[x] = 1;
            cycle.push_back(x);
            x = b[inv_scratch[x]];  // sigma(x)
        } while (x != start);
        const std::size_t len = cycle.size();
        if (len == 1) continue;
        std::size_t steps = (len - 1) / 2;
        if ((len - 1) % 2 != 0 && rng.next_bool()) ++steps;
        if (steps == 0) continue;
        for (std::size_t i = 0; i < steps; ++i) tau[cycle[i]] = cycle[i + 1];
        tau[cycle[steps]] = cycle[0];
    }

    // child = tau o A, computed in place over tau's own storage is unsafe, so
    // compose through a copy of tau.
    static thread_local Perm tau_copy;
    tau_copy = tau;
    for (std::size_t pos = 0; pos < n; ++pos) child[pos] = tau_copy[a[pos]];
}

inline bool is_injective(const Perm& p, std::size_t target_size) {
    std::vector<char> used(target_size, 0);
    for (NodeIndex x : p) {
        if (x >= target_size || used[x]) return false;
        used[x] = 1;
    }
    return true;
}

}  // namespace detail

// Uniformly random injective mapping of n1 source nodes into n2 targets.
inline Alignment random_alignment(std::size_t n1, std::size_t n2, Rng& rng) {
    if (n1 > n2) throw DataError("alignment source larger than target (|V1| must be <= |V2|)");
    detail::Perm p = detail::random_perm(n2, rng);
    return Alignment(std::vector<NodeIndex>(p.begin(), p.begin() + n1), n2);
}

// Crossover over alignments: both parents are extended to full permutations of
// the target set (unmapped targets appended in ascending order) and recombined
// cycle by cycle.
inline Alignment crossover(const Alignment& parent_a, const Alignment& parent_b, Rng& rng) {
    if (parent_a.size() != parent_b.size() || parent_a.target_size() != parent_b.target_size())
        throw DataError("crossover parents cover different node sets");
    const std::size_t n1 = parent_a.size();
    const std::size_t n2 = parent_a.target_size();

    auto extended = [n2](const Alignment& f) {
        detail::Perm p(f.mapping().begin(), f.mapping().end());
        std::vector<char> used(n2, 0);
        for (NodeIndex x : p) used[x] = 1;
        for (NodeIndex x = 0; x < n2; ++x)
            if (!used[x]) p.push_back(x);
        return p;
    };
    detail::Perm a = extended(parent_a);
    detail::Perm b = extended(parent_b);
    detail::Perm child;
    std::vector<NodeIndex> inv;
    std::vector<char> visited;
    detail::crossover_perm(a, b, rng, child, inv, visited);
    return Alignment(std::vector<NodeIndex>(child.begin(), child.begin() + n1), n2);
}

// Genetic search over alignments: keep the elite fraction each generation,
// refill the rest with crossover children of uniformly chosen parents, stop
// when the best objective stalls or the generation budget runs out. A fixed
// seed gives identical traces for any thread count because every population
// slot draws from its own (seed, generation, slot) rng stream.
inline SearchTrace run_search(const SearchConfig& cfg, const ObjectiveInputs& inputs) {
    cfg.validate();
    inputs.validate();
    const std::size_t n1 = inputs.source_size();
    const std::size_t n2 = inputs.target_size();
    const std::size_t pop_size = cfg.population_size;

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    std::vector<detail::Perm> population(pop_size);
    std::vector<double> scores(pop_size, 0.0);
    ScoreWorkspace serial_ws;

    auto evaluate_range = [&](std::size_t begin) {
        if (cfg.threads <= 1) {
            for (std::size_t s = begin; s < pop_size; ++s) {
                scores[s] = evaluate_objective(
                                inputs, std::span<const NodeIndex>(population[s].data(), n1), serial_ws)
                                .total;
            }
            return;
        }
        parallel_for(begin, pop_size, cfg.threads, [&](std::size_t s) {
            static thread_local ScoreWorkspace ws;
            scores[s] = evaluate_objective(inputs, std::span<const NodeIndex>(population[s].data(), n1), ws)
                            .total;
        });
    };

    for (std::size_t s = 0; s < pop_size; ++s) {
        Rng rng(derive_seed(cfg.seed, 0, s));
        population[s] = detail::random_perm(n2, rng);
    }
    evaluate_range(0);

    SearchTrace trace;
    trace.stop_reason = StopReason::max_generations;

    std::vector<std::size_t> order(pop_size);
    const std::size_t elite =
        std::clamp<std::size_t>(static_cast<std::size_t>(static_cast<double>(pop_size) * cfg.elite_fraction + 0.5),
                                1, pop_size - 1);

    std::vector<detail::Perm> next_population(pop_size);
    std::vector<double> next_scores(pop_size, 0.0);
    std::vector<NodeIndex> inv_scratch;
    std::vector<char> visited_scratch;

    for (std::size_t generation = 0;; ++generation) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return scores[x] > scores[y]; });
        {
            std::vector<detail::Perm> sorted(pop_size);
            std::vector<double> sorted_scores(pop_size);
            for (std::size_t i = 0; i < pop_size; ++i) {
                sorted[i] = std::move(population[order[i]]);
                sorted_scores[i] = scores[order[i]];
            }
            population = std::move(sorted);
            scores = std::move(sorted_scores);
        }

        KahanSum mean;
        for (double s : scores) mean.add(s);
        trace.generations.push_back(
            {scores[0], mean.value() / static_cast<double>(pop_size), elapsed()});

        const std::size_t g = trace.generations.size() - 1;
        if (g >= cfg.stop_window &&
            trace.generations[g].best - trace.generations[g - cfg.stop_window].best < cfg.stop_epsilon) {
            trace.stop_reason = StopReason::converged;
            break;
        }
        if (generation >= cfg.max_generations) break;

        for (std::size_t s = 0; s < elite; ++s) {
            next_population[s] = population[s];
            next_scores[s] = scores[s];
        }
        for (std::size_t s = elite; s < pop_size; ++s) {
            Rng rng(derive_seed(cfg.seed, generation + 1, s));
            const std::size_t i = static_cast<std::size_t>(rng.next_below(pop_size));
            const std::size_t j = static_cast<std::size_t>(rng.next_below(pop_size));
            detail::crossover_perm(population[i], population[j], rng, next_population[s], inv_scratch,
                                   visited_scratch);
            assert(detail::is_injective(next_population[s], n2));
        }
        population.swap(next_population);
        scores.swap(next_scores);
        evaluate_range(elite);
    }

    trace.best_alignment =
        Alignment(std::vector<NodeIndex>(population[0].begin(), population[0].begin() + n1), n2);
    ScoreWorkspace ws;
    trace.best_value = evaluate_objective(inputs, trace.best_alignment.mapping(), ws);
    trace.wall_seconds = elapsed();
    return trace;
}

}  // namespace dynalign

#endif  // DYNALIGN_SEARCH_HPP
