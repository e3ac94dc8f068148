#ifndef CATSWARM_VARIANTS_HPP
#define CATSWARM_VARIANTS_HPP

#include <cstdint>

#include "catswarm/cso.hpp"

namespace catswarm {

/// Average-inertia weighted variant: the tracing velocity update gets a
/// linearly decaying inertia weight, 0.9 down to 0.4 by default.
struct AicsoParams {
    CsoParams base;
    double w_start = 0.9;
    double w_end = 0.4;

    void validate() const;
};

/// Parallel variant: the population is split into subgroups whose tracing
/// cats chase their group's local best; every `ech` iterations each group's
/// worst cat is replaced by a copy of another group's local best.
struct PcsoParams {
    CsoParams base;
    int n_groups = 2;
    int ech = 20;

    void validate() const;
};

/// Linear inertia schedule: w_start - (w_start - w_end) * iter / max_iters.
double inertia_at(int iter, int max_iters, double w_start, double w_end);

/// Identical to run() except that tracing uses the decaying inertia weight;
/// the first iteration uses exactly w_start and the last exactly w_end.
/// With w_start == w_end == 1 the run is bit-identical to the original
/// algorithm under the same seed.
RunResult aicso_run(const AicsoParams& params, const Objective& objective, std::uint64_t seed);

/// Called after each pcso iteration with the full population and whether an
/// information exchange happened this iteration.
using PcsoObserver = std::function<void(int iteration, std::span<const Cat> cats, bool exchanged)>;

RunResult pcso_run(const PcsoParams& params, const Objective& objective, std::uint64_t seed,
                   const PcsoObserver& observer = {});

}  // namespace catswarm

#endif
