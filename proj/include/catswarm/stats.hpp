#ifndef CATSWARM_STATS_HPP
#define CATSWARM_STATS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace catswarm::stats {

struct Summary {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, divisor n-1; 0 when n == 1
};

/// Arithmetic mean and sample standard deviation. Throws on empty input.
Summary summarize(std::span<const double> values);

/// Competition ranks for one table row: rank 1 is the smallest value (or the
/// largest when minimize is false), ties get the average of the ranks they
/// span, and missing cells rank strictly after every present cell.
std::vector<double> rank_row(std::span<const std::optional<double>> values, bool minimize = true);

/// Tie-averaged ranks (1-based) of a plain value sequence, smallest first.
std::vector<double> average_ranks(std::span<const double> values);

struct RankTable {
    std::vector<std::string> algorithms;
    std::vector<std::string> functions;
    std::vector<std::vector<double>> per_function_ranks;  // [function][algorithm]
};

struct RankAggregate {
    std::vector<double> totals;    // per algorithm
    std::vector<double> averages;  // totals / n_functions
    struct Block {
        std::string label;
        int n_functions = 0;
        std::vector<double> totals;
        std::vector<double> averages;
    };
    std::vector<Block> blocks;  // F1-F7, F8-F23, CEC, in that order, when present
};

/// Column sums and averages plus the per-group subtotals (unimodal F1-F7,
/// multimodal F8-F23, CEC block) when those function ids are present.
RankAggregate aggregate_ranks(const RankTable& table);

/// Friedman chi-squared over rank sums:
///   (12 / (N k (k+1))) * sum R_j^2 - 3 N (k+1).
double friedman_statistic(std::span<const double> rank_totals, int n_functions, int k);

enum class WilcoxonMethod { Exact, NormalApprox, Degenerate };

struct WilcoxonResult {
    int n_effective = 0;       // pairs with a nonzero difference
    double w_statistic = 0.0;  // min(W+, W-)
    double p_value = 1.0;      // two-sided
    WilcoxonMethod method = WilcoxonMethod::Degenerate;
};

/// Matched-pairs signed-rank test on a[i] - b[i]. Zero differences are
/// dropped; absolute differences get tie-averaged ranks. Exact two-sided p
/// over all sign assignments for n_effective <= 25 (computed by
/// rank-sum counting, which equals full enumeration), normal approximation
/// with continuity and tie correction above, p = 1 when every difference is
/// zero.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);

const char* to_string(WilcoxonMethod method);

}  // namespace catswarm::stats

#endif
