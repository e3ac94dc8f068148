// Python bindings for the core operations: benchmark registry, the four
// optimizers, seed derivation and the comparison statistics.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "catswarm/cso.hpp"
#include "catswarm/harness.hpp"
#include "catswarm/stats.hpp"
#include "catswarm/suite.hpp"
#include "catswarm/variants.hpp"
#include "catswarm/version.hpp"

namespace py = pybind11;
using namespace catswarm;

namespace {

py::dict run_result_to_dict(const RunResult& r) {
    py::dict d;
    d["best_fitness"] = r.best.fitness;
    d["best_position"] = r.best.position;
    d["iteration_found"] = r.best.iteration_found;
    d["trace"] = r.trace;
    d["evaluations"] = r.evaluations;
    return d;
}

py::dict run_algorithm(const std::string& algorithm, const std::string& function, int dim,
                       std::uint64_t seed, const CsoParams& params, double w_start, double w_end,
                       int groups, int ech) {
    register_builtin_optimizers();
    const OptimizerPlugin* plugin = find_optimizer(algorithm);
    if (!plugin) throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
    AlgoConfig config;
    config.algorithm = algorithm;
    config.base = params;
    config.w_start = w_start;
    config.w_end = w_end;
    config.n_groups = groups;
    config.ech = ech;
    const Objective objective = make_objective(function, dim);
    return run_result_to_dict(plugin->run(config, objective, seed));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cat swarm optimization: engines, benchmark suite and comparison statistics";
    m.attr("__version__") = std::string(kVersion);

    py::class_<CsoParams>(m, "CsoParams")
        .def(py::init<>())
        .def_readwrite("n_cats", &CsoParams::n_cats)
        .def_readwrite("smp", &CsoParams::smp)
        .def_readwrite("srd", &CsoParams::srd)
        .def_readwrite("cdc", &CsoParams::cdc)
        .def_readwrite("spc", &CsoParams::spc)
        .def_readwrite("mr", &CsoParams::mr)
        .def_readwrite("c1", &CsoParams::c1)
        .def_readwrite("v_max", &CsoParams::v_max)
        .def_readwrite("max_iters", &CsoParams::max_iters)
        .def_readwrite("rng_seed", &CsoParams::rng_seed);

    m.def("list_functions", [] {
        py::list out;
        for (const auto& e : suite()) {
            py::dict d;
            d["id"] = e.id;
            d["name"] = e.name;
            d["dim"] = e.default_dim;
            d["scalable"] = e.scalable;
            d["lower"] = e.lower;
            d["upper"] = e.upper;
            d["f_min"] = e.f_min_at(e.default_dim);
            d["best_known"] = e.best_known;
            out.append(d);
        }
        return out;
    });

    m.def(
        "evaluate",
        [](const std::string& id, const std::vector<double>& x, std::uint64_t noise_seed) {
            Rng rng(noise_seed);
            return evaluate(lookup(id), x, rng);
        },
        py::arg("function"), py::arg("x"), py::arg("noise_seed") = 0,
        "Evaluate a benchmark function; the seed only matters for F7's noise term.");
    m.def(
        "evaluate_noiseless",
        [](const std::string& id, const std::vector<double>& x) {
            return evaluate_noiseless(lookup(id), x);
        },
        py::arg("function"), py::arg("x"));

    m.def("run", &run_algorithm, py::arg("algorithm"), py::arg("function"), py::arg("dim") = 0,
          py::arg("seed") = 0, py::arg("params") = CsoParams{}, py::arg("w_start") = 0.9,
          py::arg("w_end") = 0.4, py::arg("groups") = 2, py::arg("ech") = 20,
          "One optimization trial; algorithm is cso, aicso, pcso or random.");

    m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("algorithm"),
          py::arg("function"), py::arg("run_index"));

    m.def("inertia_at", &inertia_at, py::arg("iter"), py::arg("max_iters"),
          py::arg("w_start") = 0.9, py::arg("w_end") = 0.4);

    m.def(
        "summarize",
        [](const std::vector<double>& xs) {
            const auto s = stats::summarize(xs);
            return py::make_tuple(s.mean, s.stddev);
        },
        py::arg("values"), "Mean and sample standard deviation.");

    m.def(
        "rank_row",
        [](const std::vector<std::optional<double>>& values, bool minimize) {
            return stats::rank_row(values, minimize);
        },
        py::arg("values"), py::arg("minimize") = true,
        "Average-tie ranks; None ranks after every present value.");

    m.def(
        "friedman_statistic",
        [](const std::vector<double>& totals, int n_functions, int k) {
            return stats::friedman_statistic(totals, n_functions, k);
        },
        py::arg("rank_totals"), py::arg("n_functions"), py::arg("k"));

    m.def(
        "wilcoxon_signed_rank",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            const auto r = stats::wilcoxon_signed_rank(a, b);
            py::dict d;
            d["n_effective"] = r.n_effective;
            d["w_statistic"] = r.w_statistic;
            d["p_value"] = r.p_value;
            d["method"] = stats::to_string(r.method);
            return d;
        },
        py::arg("a"), py::arg("b"),
        "Two-sided matched-pairs signed-rank test on a[i] - b[i].");
}
