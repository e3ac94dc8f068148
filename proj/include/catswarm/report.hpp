#ifndef CATSWARM_REPORT_HPP
#define CATSWARM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "catswarm/results_io.hpp"
#include "catswarm/stats.hpp"

namespace catswarm {

struct ComparisonCell {
    double mean = 0.0;
    double stddev = 0.0;
    int n_runs = 0;
    bool missing = true;
};

struct ComparisonReport {
    std::vector<std::string> algorithms;  // order of first appearance
    std::vector<std::string> functions;
    std::vector<std::vector<ComparisonCell>> cells;  // [function][algorithm]
    stats::RankTable ranks;
    stats::RankAggregate aggregate;
    double friedman = 0.0;
    std::string baseline;
    /// [function][non-baseline algorithm]; nullopt when either side has no
    /// usable runs.
    std::vector<std::vector<std::optional<stats::WilcoxonResult>>> wilcoxon;
    std::vector<std::string> non_baseline;
    std::vector<std::string> warnings;
};

/// Builds the three comparison tables from raw trials: per-cell mean/std,
/// per-function ranks with totals/averages/subtotals, the Friedman statistic
/// over the rank sums, and pairwise signed-rank tests against `baseline`
/// (default: the first algorithm in the file).
///
/// Ranking follows the reference tables: cells are ranked by the distance
/// |mean - f_min| to the function's registered optimum (reducing to
/// rank-by-mean wherever means cannot dip below f_min); functions absent
/// from the registry rank by raw mean. Missing cells rank strictly last.
ComparisonReport build_comparison(const ResultsFile& results, const std::string& baseline = "");

enum class ReportFormat { Markdown, Csv };

/// Renders the mean/std table, the rank table with TOTAL/OVERALL and
/// subtotal rows, the Friedman statistic and the pairwise signed-rank
/// table. Same numbers in both formats.
std::string render_comparison(const ComparisonReport& report, ReportFormat format);

/// Per-function convergence summary and gap-to-optimum table for one results
/// file. Throws std::runtime_error("no trials") on an empty file.
std::string render_summary_report(const ResultsFile& results);

}  // namespace catswarm

#endif
