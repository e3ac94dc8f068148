#include "catswarm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace catswarm::stats {
namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

/// Is the function id part of a named block of the comparison tables?
int block_index(const std::string& id) {
    auto is_cec = [](const std::string& s) {
        return s.size() >= 3 && (s[0] == 'C' || s[0] == 'c') && (s[1] == 'E' || s[1] == 'e') &&
               (s[2] == 'C' || s[2] == 'c');
    };
    if (is_cec(id)) return 2;
    if (id.size() >= 2 && (id[0] == 'F' || id[0] == 'f')) {
        int n = 0;
        for (std::size_t i = 1; i < id.size(); ++i) {
            if (id[i] < '0' || id[i] > '9') return -1;
            n = n * 10 + (id[i] - '0');
        }
        if (n >= 1 && n <= 7) return 0;
        if (n >= 8 && n <= 23) return 1;
    }
    return -1;
}

}  // namespace

Summary summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty sample");
    const auto n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double stddev = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    return {mean, stddev};
}

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg = static_cast<double>(i + j + 2) / 2.0;  // ranks are 1-based
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = avg;
        i = j + 1;
    }
    return ranks;
}

std::vector<double> rank_row(std::span<const std::optional<double>> values, bool minimize) {
    if (values.size() < 2) throw std::invalid_argument("rank_row: need at least two cells");
    std::vector<double> keys(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].has_value())
            keys[i] = std::numeric_limits<double>::infinity();  // missing sorts last
        else
            keys[i] = minimize ? *values[i] : -*values[i];
    }
    return average_ranks(keys);
}

RankAggregate aggregate_ranks(const RankTable& table) {
    const std::size_t k = table.algorithms.size();
    if (table.per_function_ranks.size() != table.functions.size())
        throw std::invalid_argument("aggregate_ranks: row count != function count");
    RankAggregate agg;
    agg.totals.assign(k, 0.0);

    static const char* kBlockLabels[3] = {"F1-F7", "F8-F23", "CEC"};
    std::vector<double> block_totals[3];
    int block_counts[3] = {0, 0, 0};
    for (auto& bt : block_totals) bt.assign(k, 0.0);

    for (std::size_t f = 0; f < table.functions.size(); ++f) {
        const auto& row = table.per_function_ranks[f];
        if (row.size() != k)
            throw std::invalid_argument("aggregate_ranks: ragged rank row for " + table.functions[f]);
        const int b = block_index(table.functions[f]);
        for (std::size_t a = 0; a < k; ++a) {
            agg.totals[a] += row[a];
            if (b >= 0) block_totals[b][a] += row[a];
        }
        if (b >= 0) ++block_counts[b];
    }

    const auto n = static_cast<double>(table.functions.size());
    agg.averages.resize(k);
    for (std::size_t a = 0; a < k; ++a) agg.averages[a] = agg.totals[a] / n;

    for (int b = 0; b < 3; ++b) {
        if (block_counts[b] == 0) continue;
        RankAggregate::Block block;
        block.label = kBlockLabels[b];
        block.n_functions = block_counts[b];
        block.totals = block_totals[b];
        block.averages.resize(k);
        for (std::size_t a = 0; a < k; ++a)
            block.averages[a] = block_totals[b][a] / static_cast<double>(block_counts[b]);
        agg.blocks.push_back(std::move(block));
    }
    return agg;
}

double friedman_statistic(std::span<const double> rank_totals, int n_functions, int k) {
    if (k < 2 || n_functions < 1)
        throw std::invalid_argument("friedman_statistic: need k >= 2 and n >= 1");
    if (static_cast<int>(rank_totals.size()) != k)
        throw std::invalid_argument("friedman_statistic: totals size != k");
    const double n = n_functions;
    double ssq = 0.0;
    for (double r : rank_totals) ssq += r * r;
    return 12.0 / (n * k * (k + 1)) * ssq - 3.0 * n * (k + 1);
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("wilcoxon_signed_rank: samples must be paired (equal length)");
    if (a.empty()) throw std::invalid_argument("wilcoxon_signed_rank: empty samples");

    std::vector<double> abs_diff;
    std::vector<bool> positive;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d == 0.0) continue;  // zero differences are dropped
        abs_diff.push_back(std::fabs(d));
        positive.push_back(d > 0.0);
    }

    WilcoxonResult res;
    res.n_effective = static_cast<int>(abs_diff.size());
    if (abs_diff.empty()) {
        res.method = WilcoxonMethod::Degenerate;
        res.w_statistic = 0.0;
        res.p_value = 1.0;
        return res;
    }

    const auto ranks = average_ranks(abs_diff);
    double w_plus = 0.0, total = 0.0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        total += ranks[i];
        if (positive[i]) w_plus += ranks[i];
    }
    const double w_minus = total - w_plus;
    res.w_statistic = std::min(w_plus, w_minus);

    const int n = res.n_effective;
    if (n <= 25) {
        // Exact null distribution of W+. Tie-averaged ranks can be
        // half-integers, so count over doubled ranks; the counts stay below
        // 2^25 and are exactly representable. This equals brute-force
        // enumeration of all 2^n sign assignments.
        std::vector<std::int64_t> r2(ranks.size());
        std::int64_t s2 = 0;
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            r2[i] = std::llround(2.0 * ranks[i]);
            s2 += r2[i];
        }
        std::vector<double> count(static_cast<std::size_t>(s2) + 1, 0.0);
        count[0] = 1.0;
        std::int64_t reach = 0;
        for (std::int64_t r : r2) {
            reach += r;
            for (std::int64_t s = reach; s >= r; --s)
                count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - r)];
        }
        const auto w2 = std::llround(2.0 * w_plus);
        double c_le = 0.0, c_ge = 0.0;
        for (std::int64_t s = 0; s <= s2; ++s) {
            if (s <= w2) c_le += count[static_cast<std::size_t>(s)];
            if (s >= w2) c_ge += count[static_cast<std::size_t>(s)];
        }
        const double denom = std::ldexp(1.0, n);  // 2^n
        res.p_value = std::min(1.0, 2.0 * std::min(c_le, c_ge) / denom);
        res.method = WilcoxonMethod::Exact;
        return res;
    }

    // Normal approximation with continuity correction; ties reduce the
    // variance by sum(t^3 - t)/48.
    const double dn = n;
    const double mean = dn * (dn + 1.0) / 4.0;
    double tie_term = 0.0;
    {
        std::vector<double> sorted(abs_diff);
        std::sort(sorted.begin(), sorted.end());
        std::size_t i = 0;
        while (i < sorted.size()) {
            std::size_t j = i;
            while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
            const double t = static_cast<double>(j - i + 1);
            tie_term += t * t * t - t;
            i = j + 1;
        }
    }
    const double var = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 - tie_term / 48.0;
    if (var <= 0.0) {
        res.p_value = 1.0;
        res.method = WilcoxonMethod::NormalApprox;
        return res;
    }
    const double z = (res.w_statistic - mean + 0.5) / std::sqrt(var);
    res.p_value = std::min(1.0, 2.0 * normal_cdf(z));
    res.method = WilcoxonMethod::NormalApprox;
    return res;
}

const char* to_string(WilcoxonMethod method) {
    switch (method) {
        case WilcoxonMethod::Exact: return "exact";
        case WilcoxonMethod::NormalApprox: return "normal-approx";
        case WilcoxonMethod::Degenerate: return "degenerate";
    }
    return "unknown";
}

}  // namespace catswarm::stats
