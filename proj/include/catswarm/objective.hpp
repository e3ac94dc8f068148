#ifndef CATSWARM_OBJECTIVE_HPP
#define CATSWARM_OBJECTIVE_HPP

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "catswarm/rng.hpp"

namespace catswarm {

/// A box-bounded minimization problem. `evaluate` must return a finite value
/// for any point inside (or slightly outside) the box; keeping iterates in
/// bounds is the optimizer's job, not the objective's. The Rng argument
/// exists for objectives whose definition includes a noise term (F7); pure
/// objectives ignore it.
struct Objective {
    std::string name;
    int dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    double f_min = 0.0;
    std::function<double(std::span<const double>, Rng&)> evaluate;

    void validate() const {
        if (dim < 1)
            throw std::invalid_argument("objective '" + name + "': dim must be >= 1");
        if (static_cast<int>(lower.size()) != dim || static_cast<int>(upper.size()) != dim)
            throw std::invalid_argument("objective '" + name + "': bounds size != dim");
        for (int d = 0; d < dim; ++d) {
            if (!std::isfinite(lower[d]) || !std::isfinite(upper[d]))
                throw std::invalid_argument("objective '" + name + "': non-finite bounds");
            if (lower[d] > upper[d])
                throw std::invalid_argument("objective '" + name + "': lower > upper");
        }
        if (!evaluate)
            throw std::invalid_argument("objective '" + name + "': missing evaluator");
    }
};

}  // namespace catswarm

#endif
