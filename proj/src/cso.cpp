#include "catswarm/cso.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "catswarm/text.hpp"

namespace catswarm {
namespace {

void check_finite_fitness(const Cat& cat, const Objective& objective) {
    if (!std::isfinite(cat.fitness))
        throw std::runtime_error("non-finite fitness from objective '" + objective.name +
                                 "' at position [" + text::join(cat.position, ';') + "]");
}

int seeking_evals_per_cat(const CsoParams& params) {
    return params.spc ? params.smp - 1 : params.smp;
}

}  // namespace

void CsoParams::validate() const {
    if (n_cats < 1) throw std::invalid_argument("n_cats must be >= 1");
    if (smp < 1) throw std::invalid_argument("smp must be >= 1");
    if (!(srd > 0.0 && srd <= 1.0)) throw std::invalid_argument("srd must be in (0,1]");
    if (!(cdc > 0.0 && cdc <= 1.0)) throw std::invalid_argument("cdc must be in (0,1]");
    if (!(mr >= 0.0 && mr <= 1.0)) throw std::invalid_argument("mr must be in [0,1]");
    if (!(c1 > 0.0)) throw std::invalid_argument("c1 must be positive");
    if (v_max && !(*v_max > 0.0 && std::isfinite(*v_max)))
        throw std::invalid_argument("v_max must be positive and finite");
    if (max_iters < 0) throw std::invalid_argument("max_iters must be >= 0");
}

double v_max_for_dim(const CsoParams& params, const Objective& objective, int d) {
    if (params.v_max) return *params.v_max;
    return 0.5 * (objective.upper[static_cast<std::size_t>(d)] -
                  objective.lower[static_cast<std::size_t>(d)]);
}

std::vector<Cat> init_population(const CsoParams& params, const Objective& objective, Rng& rng) {
    params.validate();
    objective.validate();
    const auto dim = static_cast<std::size_t>(objective.dim);
    std::vector<Cat> cats(static_cast<std::size_t>(params.n_cats));
    for (auto& cat : cats) {
        cat.position.resize(dim);
        cat.velocity.resize(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            cat.position[d] = rng.uniform(objective.lower[d], objective.upper[d]);
            const double vm = v_max_for_dim(params, objective, static_cast<int>(d));
            cat.velocity[d] = rng.uniform(-vm, vm);
        }
        cat.fitness = objective.evaluate(cat.position, rng);
        check_finite_fitness(cat, objective);
    }
    return cats;
}

int tracing_count(int n_cats, double mr) {
    return static_cast<int>(std::llround(mr * static_cast<double>(n_cats)));
}

void assign_modes(std::span<Cat> cats, double mr, Rng& rng) {
    const int n_trace = tracing_count(static_cast<int>(cats.size()), mr);
    for (auto& cat : cats) cat.mode = CatMode::Seeking;
    const auto chosen =
        rng.distinct_indices(static_cast<std::size_t>(n_trace), cats.size());
    for (std::size_t i : chosen) cats[i].mode = CatMode::Tracing;
}

std::vector<std::vector<double>> make_seeking_candidates(const Cat& cat, const CsoParams& params,
                                                         const Objective& objective, Rng& rng) {
    const std::size_t dim = cat.position.size();
    const int n_mutated = seeking_evals_per_cat(params);
    std::size_t n_change =
        static_cast<std::size_t>(std::max<long long>(1, std::llround(params.cdc * static_cast<double>(dim))));
    n_change = std::min(n_change, dim);

    std::vector<std::vector<double>> candidates;
    candidates.reserve(static_cast<std::size_t>(params.smp));
    if (params.spc) candidates.push_back(cat.position);
    for (int c = 0; c < n_mutated; ++c) {
        std::vector<double> x = cat.position;
        for (std::size_t d : rng.distinct_indices(n_change, dim)) {
            const double r = rng.uniform01();
            const double s = rng.sign();
            x[d] = std::clamp(seeking_mutation(x[d], params.srd, r, s), objective.lower[d],
                              objective.upper[d]);
        }
        candidates.push_back(std::move(x));
    }
    return candidates;
}

std::size_t select_candidate(std::span<const double> fitnesses, bool minimize, Rng& rng) {
    if (fitnesses.empty())
        throw std::invalid_argument("select_candidate: empty candidate list");
    const auto [lo_it, hi_it] = std::minmax_element(fitnesses.begin(), fitnesses.end());
    const double fs_min = *lo_it, fs_max = *hi_it;

    std::vector<double> weight(fitnesses.size(), 1.0);
    if (fs_max > fs_min) {
        const double fs_b = minimize ? fs_max : fs_min;
        for (std::size_t i = 0; i < fitnesses.size(); ++i)
            weight[i] = std::fabs(fitnesses[i] - fs_b) / (fs_max - fs_min);
    }

    double total = 0.0;
    for (double w : weight) total += w;
    const double u = rng.uniform01() * total;

    double cum = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) {
        if (weight[i] <= 0.0) continue;
        cum += weight[i];
        last_positive = i;
        if (u < cum) return i;
    }
    return last_positive;
}

void seeking_step(Cat& cat, const CsoParams& params, const Objective& objective, Rng& rng) {
    auto candidates = make_seeking_candidates(cat, params, objective, rng);
    std::vector<double> fitnesses(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        // the SPC copy keeps its cached fitness instead of re-evaluating
        fitnesses[i] = (params.spc && i == 0) ? cat.fitness
                                              : objective.evaluate(candidates[i], rng);
    }
    const std::size_t pick = select_candidate(fitnesses, /*minimize=*/true, rng);
    cat.position = std::move(candidates[pick]);
    cat.fitness = fitnesses[pick];
}

void tracing_step(Cat& cat, const BestRecord& best, const CsoParams& params,
                  const Objective& objective, Rng& rng, double inertia_w) {
    for (std::size_t d = 0; d < cat.position.size(); ++d) {
        const double r1 = rng.uniform01();
        const double vm = v_max_for_dim(params, objective, static_cast<int>(d));
        double v = traced_velocity(cat.velocity[d], inertia_w, r1, params.c1, best.position[d],
                                   cat.position[d]);
        v = std::clamp(v, -vm, vm);
        cat.velocity[d] = v;
        cat.position[d] = std::clamp(cat.position[d] + v, objective.lower[d], objective.upper[d]);
        assert(cat.position[d] >= objective.lower[d] && cat.position[d] <= objective.upper[d]);
        assert(std::fabs(cat.velocity[d]) <= vm);
    }
    cat.fitness = objective.evaluate(cat.position, rng);
}

std::uint64_t expected_evaluations(const CsoParams& params) {
    const int n_trace = tracing_count(params.n_cats, params.mr);
    const int n_seek = params.n_cats - n_trace;
    const auto per_iter = static_cast<std::uint64_t>(n_trace) +
                          static_cast<std::uint64_t>(n_seek) *
                              static_cast<std::uint64_t>(seeking_evals_per_cat(params));
    return static_cast<std::uint64_t>(params.n_cats) +
           static_cast<std::uint64_t>(params.max_iters) * per_iter;
}

RunResult run_with_inertia(const CsoParams& params, const Objective& objective,
                           std::uint64_t seed, const InertiaSchedule& inertia) {
    Rng rng(seed);
    auto cats = init_population(params, objective, rng);

    RunResult result;
    result.best.fitness = cats.front().fitness;
    result.best.position = cats.front().position;
    result.best.iteration_found = 0;
    for (const auto& cat : cats) {
        if (cat.fitness < result.best.fitness) {
            result.best.fitness = cat.fitness;
            result.best.position = cat.position;
        }
    }
    result.trace.reserve(static_cast<std::size_t>(params.max_iters) + 1);
    result.trace.push_back(result.best.fitness);

    for (int iter = 1; iter <= params.max_iters; ++iter) {
        assign_modes(cats, params.mr, rng);
        const double w = inertia ? inertia(iter) : 1.0;
        for (auto& cat : cats) {
            if (cat.mode == CatMode::Seeking)
                seeking_step(cat, params, objective, rng);
            else
                tracing_step(cat, result.best, params, objective, rng, w);
            check_finite_fitness(cat, objective);
        }
        for (const auto& cat : cats) {
            if (cat.fitness < result.best.fitness) {
                result.best.fitness = cat.fitness;
                result.best.position = cat.position;
                result.best.iteration_found = iter;
            }
        }
        result.trace.push_back(result.best.fitness);
    }
    result.evaluations = expected_evaluations(params);
    return result;
}

RunResult run(const CsoParams& params, const Objective& objective, std::uint64_t seed) {
    return run_with_inertia(params, objective, seed, InertiaSchedule{});
}

}  // namespace catswarm
