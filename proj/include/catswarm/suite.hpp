#ifndef CATSWARM_SUITE_HPP
#define CATSWARM_SUITE_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catswarm/objective.hpp"

namespace catswarm {

enum class Family { Unimodal, Multimodal, FixedDimMultimodal };

/// One registered benchmark function (F1..F23).
///
/// `f_min` is the optimum value as printed in the reference comparison table;
/// for a few fixed-dimension entries that column is rounded to 3-4 digits
/// (e.g. F14 prints 1 while the function's true minimum is 0.998004).
/// `best_known` carries the full-precision minimum and `argmin` a minimizer,
/// where one is known; validation tests use those.
struct SuiteEntry {
    std::string id;
    std::string name;
    Family family = Family::Unimodal;
    int default_dim = 30;
    bool scalable = false;  // F1..F13 accept any dim; F14..F23 are fixed
    std::vector<double> lower;  // size 1 when scalable (same bound every dim)
    std::vector<double> upper;
    double f_min = 0.0;
    bool f_min_scales_with_dim = false;  // F8: f_min = -418.9829 * dim
    double best_known = 0.0;
    std::vector<double> argmin;  // empty when no minimizer is registered
    bool noisy = false;          // F7: additive uniform [0,1) noise
    std::function<double(std::span<const double>)> base;  // deterministic part

    int resolve_dim(int requested = 0) const;
    double f_min_at(int dim) const;
};

/// All 23 entries in id order.
const std::vector<SuiteEntry>& suite();

/// Entry by id ("F1".."F23"). Throws std::out_of_range for unknown ids.
const SuiteEntry& lookup(const std::string& id);

/// nullptr for unknown ids, no throw.
const SuiteEntry* find(const std::string& id);

/// Deterministic value of an entry with the noise term (if any) forced to
/// zero. Throws std::invalid_argument on a dimension mismatch.
double evaluate_noiseless(const SuiteEntry& entry, std::span<const double> x);

/// Value including the noise term, drawn from `rng`.
double evaluate(const SuiteEntry& entry, std::span<const double> x, Rng& rng);

/// Concrete Objective for the optimizer engines. `dim` of 0 means the
/// entry's default; fixed-dimension entries reject any other value.
Objective make_objective(const SuiteEntry& entry, int dim = 0);
Objective make_objective(const std::string& id, int dim = 0);

/// Registry metadata as CSV: id,family,dim,lower,upper,f_min.
std::string registry_csv();

}  // namespace catswarm

#endif
