#include "catswarm/variants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace catswarm {

void AicsoParams::validate() const {
    base.validate();
    if (!(w_start > 0.0 && w_start <= 1.0) || !(w_end > 0.0 && w_end <= 1.0))
        throw std::invalid_argument("inertia weights must be in (0,1]");
    if (w_start < w_end) throw std::invalid_argument("w_start must be >= w_end");
}

void PcsoParams::validate() const {
    base.validate();
    if (n_groups < 2) throw std::invalid_argument("n_groups must be >= 2");
    if (n_groups > base.n_cats)
        throw std::invalid_argument("n_groups must not exceed n_cats");
    if (ech < 1) throw std::invalid_argument("ech must be >= 1");
}

double inertia_at(int iter, int max_iters, double w_start, double w_end) {
    return w_start - (w_start - w_end) * static_cast<double>(iter) / static_cast<double>(max_iters);
}

RunResult aicso_run(const AicsoParams& params, const Objective& objective, std::uint64_t seed) {
    params.validate();
    const int last = std::max(1, params.base.max_iters - 1);
    // iterations are 1-based in the engine; map so that the first iteration
    // uses exactly w_start and the final one exactly w_end
    auto schedule = [&params, last](int iter) {
        return inertia_at(iter - 1, last, params.w_start, params.w_end);
    };
    return run_with_inertia(params.base, objective, seed, schedule);
}

namespace {

struct Group {
    std::vector<std::size_t> members;  // indices into the population
    Cat local_best;                    // snapshot incl. velocity, for exchanges
    double local_best_fitness() const { return local_best.fitness; }
};

void refresh_local_best(Group& group, const std::vector<Cat>& cats) {
    for (std::size_t i : group.members) {
        if (cats[i].fitness < group.local_best.fitness) group.local_best = cats[i];
    }
}

std::size_t worst_member(const Group& group, const std::vector<Cat>& cats) {
    std::size_t worst = group.members.front();
    for (std::size_t i : group.members)
        if (cats[i].fitness > cats[worst].fitness) worst = i;  // ties keep lowest index
    return worst;
}

}  // namespace

RunResult pcso_run(const PcsoParams& params, const Objective& objective, std::uint64_t seed,
                   const PcsoObserver& observer) {
    params.validate();
    const CsoParams& base = params.base;

    Rng rng(seed);
    auto cats = init_population(base, objective, rng);

    // round-robin partition: cat i joins group i % G, so sizes differ by at
    // most one
    std::vector<Group> groups(static_cast<std::size_t>(params.n_groups));
    for (std::size_t i = 0; i < cats.size(); ++i)
        groups[i % groups.size()].members.push_back(i);
    for (auto& g : groups) {
        g.local_best = cats[g.members.front()];
        refresh_local_best(g, cats);
    }

    auto global_best = [&groups]() {
        const Group* best = &groups.front();
        for (const auto& g : groups)
            if (g.local_best_fitness() < best->local_best_fitness()) best = &g;
        return best;
    };

    RunResult result;
    {
        const Group* g = global_best();
        result.best.position = g->local_best.position;
        result.best.fitness = g->local_best.fitness;
        result.best.iteration_found = 0;
    }
    result.trace.reserve(static_cast<std::size_t>(base.max_iters) + 1);
    result.trace.push_back(result.best.fitness);

    for (int iter = 1; iter <= base.max_iters; ++iter) {
        for (auto& group : groups) {
            // each group runs the standard step against its own local best
            for (std::size_t i : group.members) cats[i].mode = CatMode::Seeking;
            const auto n_trace = static_cast<std::size_t>(
                tracing_count(static_cast<int>(group.members.size()), base.mr));
            for (std::size_t k : rng.distinct_indices(n_trace, group.members.size()))
                cats[group.members[k]].mode = CatMode::Tracing;

            BestRecord attractor;
            attractor.position = group.local_best.position;
            attractor.fitness = group.local_best.fitness;
            for (std::size_t i : group.members) {
                if (cats[i].mode == CatMode::Seeking)
                    seeking_step(cats[i], base, objective, rng);
                else
                    tracing_step(cats[i], attractor, base, objective, rng, 1.0);
            }
            refresh_local_best(group, cats);
        }

        bool exchanged = false;
        if (iter % params.ech == 0 && groups.size() > 1) {
            exchanged = true;
            // every group's worst cat becomes a copy of a random other
            // group's local best; replacement, so the population size is
            // conserved
            for (std::size_t g = 0; g < groups.size(); ++g) {
                std::size_t donor = rng.below(groups.size() - 1);
                if (donor >= g) ++donor;
                const Cat& source = groups[donor].local_best;
                Cat& target = cats[worst_member(groups[g], cats)];
                target.position = source.position;
                target.velocity = source.velocity;
                target.fitness = source.fitness;
            }
            for (auto& group : groups) refresh_local_best(group, cats);
        }

        const Group* g = global_best();
        if (g->local_best_fitness() < result.best.fitness) {
            result.best.fitness = g->local_best.fitness;
            result.best.position = g->local_best.position;
            result.best.iteration_found = iter;
        }
        result.trace.push_back(result.best.fitness);
        if (observer) observer(iter, cats, exchanged);
    }

    // same structural accounting as the base engine, applied per group
    std::uint64_t evals = static_cast<std::uint64_t>(base.n_cats);
    for (const auto& group : groups) {
        CsoParams per_group = base;
        per_group.n_cats = static_cast<int>(group.members.size());
        evals += expected_evaluations(per_group) - static_cast<std::uint64_t>(per_group.n_cats);
    }
    result.evaluations = evals;
    return result;
}

}  // namespace catswarm
