#ifndef CATSWARM_HARNESS_HPP
#define CATSWARM_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "catswarm/cso.hpp"
#include "catswarm/objective.hpp"
#include "catswarm/variants.hpp"

namespace catswarm {

/// Variant selector plus every knob any built-in optimizer reads. The
/// population size and iteration budget live in `base`.
struct AlgoConfig {
    std::string algorithm = "cso";  // cso | aicso | pcso | random
    CsoParams base;
    double w_start = 0.9;  // aicso
    double w_end = 0.4;    // aicso
    int n_groups = 2;      // pcso
    int ech = 20;          // pcso

    AicsoParams aicso() const { return {base, w_start, w_end}; }
    PcsoParams pcso() const { return {base, n_groups, ech}; }
};

/// One (algorithm, function, run) outcome. A failed trial (optimizer threw)
/// carries NaN fitness, empty position and empty trace; downstream
/// statistics treat such cells as missing.
struct TrialResult {
    std::string algorithm;
    std::string function;
    int run_index = 0;
    std::uint64_t seed = 0;
    double best_fitness = 0.0;
    std::vector<double> best_position;
    std::uint64_t evaluations_used = 0;
    std::vector<double> trace;

    bool failed() const;
};

bool same_trial(const TrialResult& a, const TrialResult& b);  // NaN-tolerant equality

/// An optimizer that can join comparisons: continuous box-bounded
/// minimization, deterministic under a fixed seed.
struct OptimizerPlugin {
    std::string id;
    std::string capability = "continuous box-bounded minimization";
    std::function<RunResult(const AlgoConfig&, const Objective&, std::uint64_t)> run;
};

void register_optimizer(OptimizerPlugin plugin);  // replaces an existing id
const OptimizerPlugin* find_optimizer(const std::string& id);
std::vector<std::string> optimizer_ids();
/// Registers cso, aicso, pcso and random. Idempotent.
void register_builtin_optimizers();

/// Uniform sampling over the box: n_cats samples per iteration for
/// max_iters iterations, best tracked. The second optimizer of the harness,
/// so ranking and signed-rank paths can be exercised without external
/// algorithms.
RunResult baseline_random_search(const AlgoConfig& config, const Objective& objective,
                                 std::uint64_t seed);

/// The evaluation protocol: which algorithms run on which functions, how
/// often, and under which master seed.
struct Protocol {
    int n_runs = 30;
    int n_agents = 30;
    int max_iters = 500;
    std::vector<std::string> functions;   // registry ids
    std::vector<std::string> algorithms;  // optimizer ids
    std::uint64_t master_seed = 0;
    int workers = 0;  // 0: CATSWARM_WORKERS env var, else hardware concurrency
    std::map<std::string, AlgoConfig> algo_configs;  // optional per-algorithm overrides

    void validate() const;
    AlgoConfig config_for(const std::string& algorithm) const;
};

/// Stable per-trial seed: hash of (scheme version, master, algorithm,
/// function, run index). Distinct triples give distinct seeds with
/// overwhelming probability.
std::uint64_t derive_seed(std::uint64_t master, const std::string& algorithm,
                          const std::string& function, int run_index);

/// Runs the full |algorithms| x |functions| x n_runs grid. Trials execute
/// concurrently; the returned order is always (algorithm, function,
/// run_index) in protocol order, independent of worker count. A trial whose
/// optimizer throws becomes a failed cell; the suite never aborts.
std::vector<TrialResult> run_suite(const Protocol& protocol);

/// Largest evaluations_used any conforming trial of this protocol may
/// report.
std::uint64_t evaluation_budget_bound(const Protocol& protocol);

}  // namespace catswarm

#endif
