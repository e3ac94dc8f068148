#include "catswarm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "catswarm/suite.hpp"
#include "catswarm/version.hpp"

namespace catswarm {
namespace {

std::uint64_t fnv1a64(std::uint64_t h, const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Registry {
    std::mutex mutex;
    std::vector<OptimizerPlugin> plugins;
};

Registry& registry() {
    static Registry r;
    return r;
}

int default_workers() {
    if (const char* env = std::getenv("CATSWARM_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

bool TrialResult::failed() const { return std::isnan(best_fitness); }

bool same_trial(const TrialResult& a, const TrialResult& b) {
    auto same_d = [](double x, double y) {
        return (std::isnan(x) && std::isnan(y)) || x == y;
    };
    auto same_v = [&](const std::vector<double>& x, const std::vector<double>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!same_d(x[i], y[i])) return false;
        return true;
    };
    return a.algorithm == b.algorithm && a.function == b.function &&
           a.run_index == b.run_index && a.seed == b.seed &&
           same_d(a.best_fitness, b.best_fitness) && same_v(a.best_position, b.best_position) &&
           a.evaluations_used == b.evaluations_used && same_v(a.trace, b.trace);
}

void register_optimizer(OptimizerPlugin plugin) {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    for (auto& existing : reg.plugins) {
        if (existing.id == plugin.id) {
            existing = std::move(plugin);
            return;
        }
    }
    reg.plugins.push_back(std::move(plugin));
}

const OptimizerPlugin* find_optimizer(const std::string& id) {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    for (const auto& p : reg.plugins)
        if (p.id == id) return &p;
    return nullptr;
}

std::vector<std::string> optimizer_ids() {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    std::vector<std::string> ids;
    ids.reserve(reg.plugins.size());
    for (const auto& p : reg.plugins) ids.push_back(p.id);
    return ids;
}

RunResult baseline_random_search(const AlgoConfig& config, const Objective& objective,
                                 std::uint64_t seed) {
    objective.validate();
    const CsoParams& base = config.base;
    if (base.n_cats < 1 || base.max_iters < 1)
        throw std::invalid_argument("random search needs n_cats >= 1 and max_iters >= 1");

    Rng rng(seed);
    RunResult result;
    result.best.fitness = std::numeric_limits<double>::infinity();
    result.trace.reserve(static_cast<std::size_t>(base.max_iters));
    std::vector<double> x(static_cast<std::size_t>(objective.dim));
    for (int iter = 0; iter < base.max_iters; ++iter) {
        for (int a = 0; a < base.n_cats; ++a) {
            for (std::size_t d = 0; d < x.size(); ++d)
                x[d] = rng.uniform(objective.lower[d], objective.upper[d]);
            const double f = objective.evaluate(x, rng);
            if (f < result.best.fitness) {
                result.best.fitness = f;
                result.best.position = x;
                result.best.iteration_found = iter;
            }
        }
        result.trace.push_back(result.best.fitness);
    }
    result.evaluations =
        static_cast<std::uint64_t>(base.n_cats) * static_cast<std::uint64_t>(base.max_iters);
    return result;
}

void register_builtin_optimizers() {
    register_optimizer({"cso", "continuous box-bounded minimization",
                        [](const AlgoConfig& c, const Objective& o, std::uint64_t s) {
                            return run(c.base, o, s);
                        }});
    register_optimizer({"aicso", "continuous box-bounded minimization",
                        [](const AlgoConfig& c, const Objective& o, std::uint64_t s) {
                            return aicso_run(c.aicso(), o, s);
                        }});
    register_optimizer({"pcso", "continuous box-bounded minimization",
                        [](const AlgoConfig& c, const Objective& o, std::uint64_t s) {
                            return pcso_run(c.pcso(), o, s);
                        }});
    register_optimizer({"random", "continuous box-bounded minimization",
                        baseline_random_search});
}

void Protocol::validate() const {
    if (n_runs < 1) throw std::invalid_argument("n_runs must be >= 1");
    if (n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (functions.empty()) throw std::invalid_argument("no functions selected");
    if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
    for (const auto& f : functions) lookup(f);  // throws for unknown ids
    for (const auto& a : algorithms)
        if (!find_optimizer(a))
            throw std::invalid_argument("unknown algorithm '" + a + "'");
}

AlgoConfig Protocol::config_for(const std::string& algorithm) const {
    AlgoConfig config;
    if (auto it = algo_configs.find(algorithm); it != algo_configs.end()) config = it->second;
    config.algorithm = algorithm;
    config.base.n_cats = n_agents;
    config.base.max_iters = max_iters;
    return config;
}

std::uint64_t derive_seed(std::uint64_t master, const std::string& algorithm,
                          const std::string& function, int run_index) {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV offset basis
    h = fnv1a64(h, kSeedScheme.data(), kSeedScheme.size());
    h = fnv1a64(h, &master, sizeof master);
    h = fnv1a64(h, algorithm.data(), algorithm.size());
    h = fnv1a64(h, "\x1f", 1);
    h = fnv1a64(h, function.data(), function.size());
    h = fnv1a64(h, "\x1f", 1);
    const auto run = static_cast<std::uint64_t>(run_index);
    h = fnv1a64(h, &run, sizeof run);
    return splitmix64(h);
}

std::vector<TrialResult> run_suite(const Protocol& protocol) {
    protocol.validate();

    struct Job {
        std::string algorithm, function;
        int run_index;
    };
    std::vector<Job> jobs;
    jobs.reserve(protocol.algorithms.size() * protocol.functions.size() *
                 static_cast<std::size_t>(protocol.n_runs));
    for (const auto& algo : protocol.algorithms)
        for (const auto& fn : protocol.functions)
            for (int r = 0; r < protocol.n_runs; ++r) jobs.push_back({algo, fn, r});

    std::vector<TrialResult> results(jobs.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const Job& job = jobs[i];
            TrialResult& out = results[i];
            out.algorithm = job.algorithm;
            out.function = job.function;
            out.run_index = job.run_index;
            out.seed = derive_seed(protocol.master_seed, job.algorithm, job.function, job.run_index);
            try {
                const Objective objective = make_objective(job.function);
                const AlgoConfig config = protocol.config_for(job.algorithm);
                const OptimizerPlugin* plugin = find_optimizer(job.algorithm);
                RunResult run_result = plugin->run(config, objective, out.seed);
                out.best_fitness = run_result.best.fitness;
                out.best_position = std::move(run_result.best.position);
                out.evaluations_used = run_result.evaluations;
                out.trace = std::move(run_result.trace);
            } catch (const std::exception&) {
                // failed cell: recorded, never aborts the suite
                out.best_fitness = std::numeric_limits<double>::quiet_NaN();
                out.best_position.clear();
                out.trace.clear();
                out.evaluations_used = 0;
            }
        }
    };

    int n_workers = protocol.workers > 0 ? protocol.workers : default_workers();
    n_workers = std::min<int>(n_workers, static_cast<int>(jobs.size()));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(n_workers));
        for (int t = 0; t < n_workers; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return results;
}

std::uint64_t evaluation_budget_bound(const Protocol& protocol) {
    // worst case: every cat seeks with a full candidate pool each iteration
    int max_smp = 1;
    for (const auto& algo : protocol.algorithms)
        max_smp = std::max(max_smp, protocol.config_for(algo).base.smp);
    return static_cast<std::uint64_t>(protocol.n_agents) +
           static_cast<std::uint64_t>(protocol.max_iters) *
               static_cast<std::uint64_t>(protocol.n_agents) *
               static_cast<std::uint64_t>(max_smp);
}

}  // namespace catswarm
