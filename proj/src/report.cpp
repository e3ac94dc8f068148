#include "catswarm/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "catswarm/suite.hpp"
#include "catswarm/text.hpp"

namespace catswarm {
namespace {

struct CellData {
    std::vector<double> bests;            // successful runs only
    std::map<int, double> best_by_run;    // run_index -> best, for pairing
    int n_failed = 0;
    int dim_hint = 0;
};

using Grid = std::map<std::pair<std::size_t, std::size_t>, CellData>;

std::size_t index_of(std::vector<std::string>& order, const std::string& value) {
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == value) return i;
    order.push_back(value);
    return order.size() - 1;
}

/// Rank key for one cell: distance to the registered optimum when the
/// function is known, raw mean otherwise.
double rank_key(const std::string& function, double mean, int dim_hint) {
    if (const SuiteEntry* entry = find(function)) {
        const int dim = dim_hint > 0 && entry->scalable ? dim_hint : entry->default_dim;
        return std::fabs(mean - entry->f_min_at(dim));
    }
    return mean;
}

std::string md_row(const std::vector<std::string>& fields) {
    std::string out = "|";
    for (const auto& f : fields) {
        out += ' ';
        out += f;
        out += " |";
    }
    out += '\n';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

class TableWriter {
public:
    TableWriter(std::ostringstream& out, ReportFormat format) : out_(out), format_(format) {}

    void title(const std::string& t) {
        if (format_ == ReportFormat::Markdown)
            out_ << "## " << t << "\n\n";
        else
            out_ << "# " << t << "\n";
    }
    void header(const std::vector<std::string>& fields) {
        if (format_ == ReportFormat::Markdown) {
            out_ << md_row(fields);
            std::vector<std::string> rule(fields.size(), "---");
            out_ << md_row(rule);
        } else {
            out_ << csv_row(fields);
        }
    }
    void row(const std::vector<std::string>& fields) {
        out_ << (format_ == ReportFormat::Markdown ? md_row(fields) : csv_row(fields));
    }
    void blank() { out_ << "\n"; }

private:
    std::ostringstream& out_;
    ReportFormat format_;
};

std::string fmt_rank(double r) {
    // ranks are integers unless tied; print 7.5 rather than 7.50000E+00
    if (r == std::floor(r)) return std::to_string(static_cast<long long>(r));
    return text::format_double(r);
}

}  // namespace

ComparisonReport build_comparison(const ResultsFile& results, const std::string& baseline) {
    ComparisonReport report;
    report.warnings = results.warnings;

    Grid grid;
    for (const auto& t : results.trials) {
        const std::size_t a = index_of(report.algorithms, t.algorithm);
        const std::size_t f = index_of(report.functions, t.function);
        CellData& cell = grid[{f, a}];
        if (t.failed()) {
            ++cell.n_failed;
        } else {
            cell.bests.push_back(t.best_fitness);
            cell.best_by_run.emplace(t.run_index, t.best_fitness);
            if (cell.dim_hint == 0 && !t.best_position.empty())
                cell.dim_hint = static_cast<int>(t.best_position.size());
        }
    }
    if (report.algorithms.empty()) throw std::runtime_error("no trials");
    if (report.algorithms.size() < 2)
        report.warnings.push_back("only one algorithm present; ranks are trivial");

    const std::size_t n_algos = report.algorithms.size();
    const std::size_t n_funcs = report.functions.size();

    report.cells.assign(n_funcs, std::vector<ComparisonCell>(n_algos));
    report.ranks.algorithms = report.algorithms;
    report.ranks.functions = report.functions;

    for (std::size_t f = 0; f < n_funcs; ++f) {
        std::vector<std::optional<double>> keys(n_algos);
        for (std::size_t a = 0; a < n_algos; ++a) {
            const auto it = grid.find({f, a});
            ComparisonCell& cell = report.cells[f][a];
            if (it == grid.end() || it->second.bests.empty()) {
                cell.missing = true;
                if (it != grid.end() && it->second.n_failed > 0)
                    report.warnings.push_back("missing cell (failed trials): " +
                                              report.algorithms[a] + " on " + report.functions[f]);
                else
                    report.warnings.push_back("missing cell: " + report.algorithms[a] + " on " +
                                              report.functions[f]);
                continue;
            }
            const auto summary = stats::summarize(it->second.bests);
            cell.mean = summary.mean;
            cell.stddev = summary.stddev;
            cell.n_runs = static_cast<int>(it->second.bests.size());
            cell.missing = false;
            keys[a] = rank_key(report.functions[f], cell.mean, it->second.dim_hint);
        }
        report.ranks.per_function_ranks.push_back(
            stats::rank_row(keys, /*minimize=*/true));
    }

    report.aggregate = stats::aggregate_ranks(report.ranks);
    report.friedman = stats::friedman_statistic(report.aggregate.totals,
                                                static_cast<int>(n_funcs),
                                                static_cast<int>(n_algos));

    report.baseline = baseline.empty() ? report.algorithms.front() : baseline;
    const auto base_it =
        std::find(report.algorithms.begin(), report.algorithms.end(), report.baseline);
    if (base_it == report.algorithms.end())
        throw std::invalid_argument("baseline algorithm '" + report.baseline +
                                    "' not present in results");
    const std::size_t base_idx = static_cast<std::size_t>(base_it - report.algorithms.begin());

    for (std::size_t a = 0; a < n_algos; ++a)
        if (a != base_idx) report.non_baseline.push_back(report.algorithms[a]);

    report.wilcoxon.assign(n_funcs, {});
    for (std::size_t f = 0; f < n_funcs; ++f) {
        for (std::size_t a = 0; a < n_algos; ++a) {
            if (a == base_idx) continue;
            const auto bi = grid.find({f, base_idx});
            const auto oi = grid.find({f, a});
            std::optional<stats::WilcoxonResult> value;
            if (bi != grid.end() && oi != grid.end()) {
                std::vector<double> lhs, rhs;
                for (const auto& [run, best] : bi->second.best_by_run) {
                    const auto match = oi->second.best_by_run.find(run);
                    if (match == oi->second.best_by_run.end()) continue;
                    lhs.push_back(best);
                    rhs.push_back(match->second);
                }
                if (!lhs.empty()) value = stats::wilcoxon_signed_rank(lhs, rhs);
            }
            report.wilcoxon[f].push_back(value);
        }
    }
    return report;
}

std::string render_comparison(const ComparisonReport& report, ReportFormat format) {
    std::ostringstream out;
    TableWriter table(out, format);

    table.title("Mean and standard deviation of best fitness");
    {
        std::vector<std::string> head{"function"};
        for (const auto& a : report.algorithms) {
            head.push_back(a + " mean");
            head.push_back(a + " std");
        }
        table.header(head);
        for (std::size_t f = 0; f < report.functions.size(); ++f) {
            std::vector<std::string> row{report.functions[f]};
            for (const auto& cell : report.cells[f]) {
                if (cell.missing) {
                    row.push_back("NA");
                    row.push_back("NA");
                } else {
                    row.push_back(text::format_sci6(cell.mean));
                    row.push_back(text::format_sci6(cell.stddev));
                }
            }
            table.row(row);
        }
        table.blank();
    }

    table.title("Ranking (distance to known optimum; missing cells rank last)");
    {
        std::vector<std::string> head{"function"};
        for (const auto& a : report.algorithms) head.push_back(a);
        table.header(head);
        for (std::size_t f = 0; f < report.functions.size(); ++f) {
            std::vector<std::string> row{report.functions[f]};
            for (double r : report.ranks.per_function_ranks[f]) row.push_back(fmt_rank(r));
            table.row(row);
        }
        std::vector<std::string> total{"TOTAL"};
        for (double t : report.aggregate.totals) total.push_back(fmt_rank(t));
        table.row(total);
        std::vector<std::string> overall{"OVERALL RANKING"};
        for (double v : report.aggregate.averages) overall.push_back(text::format_sci6(v));
        table.row(overall);
        for (const auto& block : report.aggregate.blocks) {
            std::vector<std::string> sub{block.label + " SUBTOTAL"};
            for (double t : block.totals) sub.push_back(fmt_rank(t));
            table.row(sub);
            std::vector<std::string> avg{block.label + " RANKING"};
            for (double v : block.averages) avg.push_back(text::format_sci6(v));
            table.row(avg);
        }
        table.blank();
    }

    out << (format == ReportFormat::Markdown ? "**Friedman statistic**: " : "# friedman_statistic,")
        << text::format_sci6(report.friedman) << "\n\n";

    table.title("Wilcoxon matched-pairs signed-rank test vs. " + report.baseline);
    if (!report.non_baseline.empty()) {
        std::vector<std::string> head{"function"};
        for (const auto& a : report.non_baseline) {
            head.push_back(report.baseline + " vs. " + a + " p");
            head.push_back("method");
        }
        table.header(head);
        for (std::size_t f = 0; f < report.functions.size(); ++f) {
            std::vector<std::string> row{report.functions[f]};
            for (const auto& cell : report.wilcoxon[f]) {
                if (!cell) {
                    row.push_back("NA");
                    row.push_back("NA");
                } else {
                    row.push_back(text::format_sci6(cell->p_value));
                    row.push_back(stats::to_string(cell->method));
                }
            }
            table.row(row);
        }
        table.blank();
    }

    if (!report.warnings.empty()) {
        table.title("Warnings");
        for (const auto& w : report.warnings) out << "- " << w << "\n";
    }
    return out.str();
}

std::string render_summary_report(const ResultsFile& results) {
    if (results.trials.empty()) throw std::runtime_error("no trials");

    std::ostringstream out;
    TableWriter table(out, ReportFormat::Markdown);

    struct Key {
        std::string algorithm, function;
        bool operator<(const Key& o) const {
            return algorithm != o.algorithm ? algorithm < o.algorithm : function < o.function;
        }
    };
    struct Agg {
        std::vector<double> bests;
        std::vector<const TrialResult*> trials;
        int n_failed = 0;
    };
    std::map<Key, Agg> cells;
    std::vector<Key> order;
    for (const auto& t : results.trials) {
        Key key{t.algorithm, t.function};
        auto [it, inserted] = cells.try_emplace(key);
        if (inserted) order.push_back(key);
        if (t.failed()) {
            ++it->second.n_failed;
            continue;
        }
        it->second.bests.push_back(t.best_fitness);
        it->second.trials.push_back(&t);
    }
    std::stable_sort(order.begin(), order.end());

    table.title("Best-fitness summary and gap to known optimum");
    table.header({"algorithm", "function", "runs", "failed", "mean", "std", "min", "f_min", "gap"});
    for (const auto& key : order) {
        const Agg& agg = cells.at(key);
        std::vector<std::string> row{key.algorithm, key.function,
                                     std::to_string(agg.bests.size()),
                                     std::to_string(agg.n_failed)};
        if (agg.bests.empty()) {
            row.insert(row.end(), {"NA", "NA", "NA", "NA", "NA"});
        } else {
            const auto summary = stats::summarize(agg.bests);
            const double min_best = *std::min_element(agg.bests.begin(), agg.bests.end());
            row.push_back(text::format_sci6(summary.mean));
            row.push_back(text::format_sci6(summary.stddev));
            row.push_back(text::format_sci6(min_best));
            if (const SuiteEntry* entry = find(key.function)) {
                int dim = entry->default_dim;
                if (entry->scalable && !agg.trials.front()->best_position.empty())
                    dim = static_cast<int>(agg.trials.front()->best_position.size());
                const double f_min = entry->f_min_at(dim);
                row.push_back(text::format_sci6(f_min));
                row.push_back(text::format_sci6(summary.mean - f_min));
            } else {
                row.push_back("NA");
                row.push_back("NA");
            }
        }
        table.row(row);
    }
    table.blank();

    bool any_trace = false;
    for (const auto& t : results.trials) any_trace = any_trace || !t.trace.empty();
    if (any_trace) {
        table.title("Convergence (mean best-so-far at trace milestones)");
        table.header({"algorithm", "function", "0%", "25%", "50%", "75%", "100%"});
        for (const auto& key : order) {
            const Agg& agg = cells.at(key);
            std::vector<const TrialResult*> traced;
            for (const auto* t : agg.trials)
                if (!t->trace.empty()) traced.push_back(t);
            if (traced.empty()) continue;
            std::vector<std::string> row{key.algorithm, key.function};
            for (const double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                double sum = 0.0;
                for (const auto* t : traced) {
                    const auto last = t->trace.size() - 1;
                    const auto idx = static_cast<std::size_t>(
                        std::llround(frac * static_cast<double>(last)));
                    sum += t->trace[idx];
                }
                row.push_back(text::format_sci6(sum / static_cast<double>(traced.size())));
            }
            table.row(row);
        }
        table.blank();
    }

    if (!results.warnings.empty()) {
        table.title("Warnings");
        for (const auto& w : results.warnings) out << "- " << w << "\n";
    }
    return out.str();
}

}  // namespace catswarm
