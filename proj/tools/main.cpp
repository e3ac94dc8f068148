// Command line front end: single runs, full suites, statistical comparison
// and report rendering.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "catswarm/harness.hpp"
#include "catswarm/report.hpp"
#include "catswarm/results_io.hpp"
#include "catswarm/suite.hpp"
#include "catswarm/text.hpp"
#include "catswarm/version.hpp"

namespace {

using namespace catswarm;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct CoreFlags {
    std::optional<int> smp;
    std::optional<double> srd, cdc, mr, c1, vmax;
    std::optional<bool> spc;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--smp", smp, "Seeking memory pool (candidates per seeking cat)");
        cmd.add_option("--srd", srd, "Seeking range of the selected dimension, (0,1]");
        cmd.add_option("--cdc", cdc, "Fraction of dimensions to change, (0,1]");
        cmd.add_option("--spc", spc, "Self-position considering (true/false)");
        cmd.add_option("--mr", mr, "Mixture ratio: fraction of cats in tracing mode");
        cmd.add_option("--c1", c1, "Tracing acceleration constant");
        cmd.add_option("--vmax", vmax, "Absolute velocity cap (default: half the box width)");
    }
    void apply(CsoParams& params) const {
        if (smp) params.smp = *smp;
        if (srd) params.srd = *srd;
        if (cdc) params.cdc = *cdc;
        if (spc) params.spc = *spc;
        if (mr) params.mr = *mr;
        if (c1) params.c1 = *c1;
        if (vmax) params.v_max = *vmax;
    }
};

struct VariantFlags {
    std::optional<double> w_start, w_end;
    std::optional<int> groups, ech;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--w-start", w_start, "aicso: initial inertia weight");
        cmd.add_option("--w-end", w_end, "aicso: final inertia weight");
        cmd.add_option("--groups", groups, "pcso: number of subgroups");
        cmd.add_option("--ech", ech, "pcso: iterations between information exchanges");
    }
    /// Variant flags are only meaningful for their variant; anything else is
    /// a usage error.
    void check_against(const std::string& algo) const {
        auto reject = [&](const char* flag) {
            throw std::invalid_argument(std::string(flag) + " is not valid with --algo " + algo);
        };
        if (algo != "aicso") {
            if (w_start) reject("--w-start");
            if (w_end) reject("--w-end");
        }
        if (algo != "pcso") {
            if (groups) reject("--groups");
            if (ech) reject("--ech");
        }
    }
    void apply(AlgoConfig& config) const {
        if (w_start) config.w_start = *w_start;
        if (w_end) config.w_end = *w_end;
        if (groups) config.n_groups = *groups;
        if (ech) config.ech = *ech;
    }
};

std::vector<std::string> parse_function_list(const std::string& spec) {
    std::vector<std::string> out;
    auto push_range = [&out](int lo, int hi) {
        for (int i = lo; i <= hi; ++i) out.push_back("F" + std::to_string(i));
    };
    for (auto raw : text::split(spec, ',')) {
        const std::string token(text::trim(raw));
        if (token.empty()) continue;
        if (token == "all") {
            push_range(1, 23);
            continue;
        }
        const auto dots = token.find("..");
        const auto dash = token.find('-', 1);
        if (dots != std::string::npos || dash != std::string::npos) {
            const bool use_dots = dots != std::string::npos;
            const std::string lhs = token.substr(0, use_dots ? dots : dash);
            const std::string rhs = token.substr(use_dots ? dots + 2 : dash + 1);
            const auto& lo = lookup(std::string(text::trim(lhs)));
            const auto& hi = lookup(std::string(text::trim(rhs)));
            push_range(std::stoi(lo.id.substr(1)), std::stoi(hi.id.substr(1)));
            continue;
        }
        out.push_back(lookup(token).id);  // throws for unknown ids
    }
    if (out.empty()) throw std::invalid_argument("empty function list");
    return out;
}

std::vector<std::string> parse_algo_list(const std::string& spec) {
    std::vector<std::string> out;
    for (auto raw : text::split(spec, ',')) {
        const std::string token(text::trim(raw));
        if (token.empty()) continue;
        if (!find_optimizer(token))
            throw std::invalid_argument("unknown algorithm '" + token + "'");
        out.push_back(token);
    }
    if (out.empty()) throw std::invalid_argument("empty algorithm list");
    return out;
}

void echo_config(std::ostream& os, const AlgoConfig& c, const Objective& obj, std::uint64_t seed) {
    os << "algorithm = " << c.algorithm << "\n";
    os << "function = " << obj.name << "\n";
    os << "dim = " << obj.dim << "\n";
    os << "cats = " << c.base.n_cats << "\n";
    os << "iters = " << c.base.max_iters << "\n";
    os << "seed = " << seed << "\n";
    os << "smp = " << c.base.smp << "\n";
    os << "srd = " << text::format_double(c.base.srd) << "\n";
    os << "cdc = " << text::format_double(c.base.cdc) << "\n";
    os << "spc = " << (c.base.spc ? "true" : "false") << "\n";
    os << "mr = " << text::format_double(c.base.mr) << "\n";
    os << "c1 = " << text::format_double(c.base.c1) << "\n";
    os << "vmax = "
       << (c.base.v_max ? text::format_double(*c.base.v_max) : std::string("0.5*range")) << "\n";
    if (c.algorithm == "aicso")
        os << "w_start = " << text::format_double(c.w_start)
           << "\nw_end = " << text::format_double(c.w_end) << "\n";
    if (c.algorithm == "pcso")
        os << "groups = " << c.n_groups << "\nech = " << c.ech << "\n";
}

int cmd_run(const std::string& algo, const std::string& function, int dim, int cats, int iters,
            std::uint64_t seed, const std::string& out_path, const CoreFlags& core,
            const VariantFlags& variant) {
    variant.check_against(algo);
    const OptimizerPlugin* plugin = find_optimizer(algo);
    if (!plugin) throw std::invalid_argument("unknown algorithm '" + algo + "'");

    const Objective objective = make_objective(function, dim);
    AlgoConfig config;
    config.algorithm = algo;
    config.base.n_cats = cats;
    config.base.max_iters = iters;
    core.apply(config.base);
    variant.apply(config);

    echo_config(std::cout, config, objective, seed);
    const RunResult result = plugin->run(config, objective, seed);
    std::cout << "best_fitness = " << text::format_sci6(result.best.fitness) << "\n";
    std::cout << "best_position = " << text::join(result.best.position, ';') << "\n";
    std::cout << "evaluations = " << result.evaluations << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write trace file: " + out_path);
        out << "algorithm,function,run_index,iteration,best_fitness\n";
        for (std::size_t i = 0; i < result.trace.size(); ++i)
            out << algo << ',' << objective.name << ",0," << i << ','
                << text::format_double(result.trace[i]) << "\n";
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + out_path);
    }
    return kExitOk;
}

int cmd_suite(const std::string& algos, const std::string& functions, int runs, int cats,
              int iters, std::uint64_t seed, int workers, const std::string& out_path,
              const CoreFlags& core, const VariantFlags& variant) {
    Protocol protocol;
    protocol.algorithms = parse_algo_list(algos);
    protocol.functions = parse_function_list(functions);
    protocol.n_runs = runs;
    protocol.n_agents = cats;
    protocol.max_iters = iters;
    protocol.master_seed = seed;
    protocol.workers = workers;
    for (const auto& algo : protocol.algorithms) {
        AlgoConfig config;
        config.algorithm = algo;
        core.apply(config.base);
        variant.apply(config);
        protocol.algo_configs[algo] = config;
    }

    ResultsFile results;
    results.metadata = protocol_metadata(protocol);
    results.trials = run_suite(protocol);
    write_results(results, out_path);

    std::size_t failed = 0;
    for (const auto& t : results.trials) failed += t.failed() ? 1 : 0;
    std::cout << "wrote " << results.trials.size() << " trials to " << out_path;
    if (failed) std::cout << " (" << failed << " failed)";
    std::cout << "\n";
    return kExitOk;
}

int cmd_compare(const std::string& in_path, const std::string& baseline,
                const std::string& format) {
    const ResultsFile results = load_results(in_path);
    const ComparisonReport report = build_comparison(results, baseline);
    const ReportFormat fmt = format == "csv" ? ReportFormat::Csv : ReportFormat::Markdown;
    std::cout << render_comparison(report, fmt);
    return kExitOk;
}

int cmd_report(const std::string& in_path) {
    const ResultsFile results = load_results(in_path);
    std::cout << render_summary_report(results);
    return kExitOk;
}

int cmd_functions(const std::string& out_path) {
    const std::string csv = registry_csv();
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write: " + out_path);
        out << csv;
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + out_path);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    register_builtin_optimizers();

    CLI::App app{"Cat swarm optimization library and benchmark harness"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    auto* run_cmd = app.add_subcommand("run", "Execute one trial and print the best fitness");
    std::string run_algo = "cso", run_function, run_out;
    int run_dim = 0, run_cats = 30, run_iters = 500;
    std::uint64_t run_seed = 0;
    CoreFlags run_core;
    VariantFlags run_variant;
    run_cmd->add_option("--algo", run_algo, "Algorithm: cso | aicso | pcso | random")
        ->check(CLI::IsMember({"cso", "aicso", "pcso", "random"}));
    run_cmd->add_option("--function", run_function, "Benchmark function id, F1..F23")->required();
    run_cmd->add_option("--dim", run_dim, "Dimension override (scalable functions only)");
    run_cmd->add_option("--cats", run_cats, "Population size");
    run_cmd->add_option("--iters", run_iters, "Iteration budget");
    run_cmd->add_option("--seed", run_seed, "RNG seed");
    run_cmd->add_option("--out", run_out, "Write the convergence trace CSV here");
    run_core.add_to(*run_cmd);
    run_variant.add_to(*run_cmd);
    run_cmd->set_config("--config", "", "Config file with key = value lines");

    auto* suite_cmd = app.add_subcommand("suite", "Run the full evaluation protocol grid");
    std::string suite_algos = "cso", suite_functions = "all", suite_out;
    int suite_runs = 30, suite_cats = 30, suite_iters = 500, suite_workers = 0;
    std::uint64_t suite_seed = 0;
    CoreFlags suite_core;
    VariantFlags suite_variant;
    suite_cmd->add_option("--algos", suite_algos, "Comma list: cso,aicso,pcso,random");
    suite_cmd->add_option("--functions", suite_functions,
                          "Comma list and ranges, e.g. F1-F7 or F1,F9,F14 (default all)");
    suite_cmd->add_option("--runs", suite_runs, "Independent runs per cell (default 30)");
    suite_cmd->add_option("--cats", suite_cats, "Search agents per run (default 30)");
    suite_cmd->add_option("--iters", suite_iters, "Iterations per run (default 500)");
    suite_cmd->add_option("--seed", suite_seed, "Master seed; per-trial seeds derive from it");
    suite_cmd->add_option("--workers", suite_workers, "Concurrent trials (0 = auto)")
        ->envname("CATSWARM_WORKERS");
    suite_cmd->add_option("--out", suite_out, "Results CSV path")->required();
    suite_core.add_to(*suite_cmd);
    suite_variant.add_to(*suite_cmd);
    suite_cmd->set_config("--config", "", "Config file with key = value lines");

    auto* compare_cmd =
        app.add_subcommand("compare", "Mean/std, ranking and signed-rank tables from results");
    std::string compare_in, compare_baseline, compare_format = "md";
    compare_cmd->add_option("--in", compare_in, "Results CSV")->required();
    compare_cmd->add_option("--baseline", compare_baseline,
                            "Baseline algorithm for the signed-rank tests (default: first)");
    compare_cmd->add_option("--format", compare_format, "md | csv")
        ->check(CLI::IsMember({"md", "csv"}));

    auto* report_cmd = app.add_subcommand("report", "Convergence and gap-to-optimum summary");
    std::string report_in;
    report_cmd->add_option("--in", report_in, "Results CSV")->required();

    auto* functions_cmd = app.add_subcommand("functions", "Dump the benchmark registry as CSV");
    std::string functions_out;
    functions_cmd->add_option("--out", functions_out, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed())
            return cmd_run(run_algo, run_function, run_dim, run_cats, run_iters, run_seed,
                           run_out, run_core, run_variant);
        if (suite_cmd->parsed())
            return cmd_suite(suite_algos, suite_functions, suite_runs, suite_cats, suite_iters,
                             suite_seed, suite_workers, suite_out, suite_core, suite_variant);
        if (compare_cmd->parsed()) return cmd_compare(compare_in, compare_baseline, compare_format);
        if (report_cmd->parsed()) return cmd_report(report_in);
        if (functions_cmd->parsed()) return cmd_functions(functions_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
