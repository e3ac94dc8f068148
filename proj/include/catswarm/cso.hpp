#ifndef CATSWARM_CSO_HPP
#define CATSWARM_CSO_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "catswarm/objective.hpp"
#include "catswarm/rng.hpp"

namespace catswarm {

enum class CatMode { Seeking, Tracing };

/// One candidate solution: a position with per-dimension velocity, the mode
/// flag deciding its next move, and the fitness cached from the last
/// evaluation of `position`.
struct Cat {
    std::vector<double> position;
    std::vector<double> velocity;
    CatMode mode = CatMode::Seeking;
    double fitness = 0.0;
};

/// All engine tunables. Defaults follow the evaluation protocol (30 cats,
/// 500 iterations); the seeking/tracing knobs use the calibrated values
/// recorded in the README (every one overridable, all echoed into results
/// metadata).
struct CsoParams {
    int n_cats = 30;
    int smp = 5;         // candidate positions per seeking cat
    double srd = 0.84;   // max relative mutation of a selected dimension
    double cdc = 0.8;    // fraction of dimensions mutated per candidate
    bool spc = true;     // current position counts as one candidate
    double mr = 0.02;    // fraction of the population sent to tracing mode
    double c1 = 2.0;     // tracing acceleration constant
    std::optional<double> v_max;  // absolute velocity cap; default 0.5*(upper-lower) per dim
    int max_iters = 500;
    std::uint64_t rng_seed = 0;

    void validate() const;  // throws std::invalid_argument
};

/// Best-so-far memory of a run.
struct BestRecord {
    std::vector<double> position;
    double fitness = 0.0;
    int iteration_found = 0;
};

struct RunResult {
    BestRecord best;
    /// Best-so-far fitness after each iteration; entry 0 is the initial
    /// population's best, entry i the state after iteration i.
    std::vector<double> trace;
    std::uint64_t evaluations = 0;
};

/// Velocity cap for dimension d: explicit v_max if set, else half the box
/// width.
double v_max_for_dim(const CsoParams& params, const Objective& objective, int d);

/// Eq. 1 with an explicit sign: x' = (1 + s*r*srd) * x.
constexpr double seeking_mutation(double x, double srd, double r, double s) {
    return (1.0 + s * r * srd) * x;
}

/// Eq. 3 before clamping: v' = w*v + r1*c1*(x_best - x).
constexpr double traced_velocity(double v, double inertia_w, double r1, double c1,
                                 double x_best, double x) {
    return inertia_w * v + r1 * c1 * (x_best - x);
}

/// N cats spread uniformly over the box, velocities uniform in
/// [-v_max, +v_max], fitness evaluated. Modes are left at their default and
/// are assigned by assign_modes before the first step.
std::vector<Cat> init_population(const CsoParams& params, const Objective& objective, Rng& rng);

/// Sends exactly round(mr*N) cats (half away from zero) to tracing mode,
/// chosen uniformly without replacement; the rest seek.
void assign_modes(std::span<Cat> cats, double mr, Rng& rng);

/// Number of cats assign_modes sends to tracing.
int tracing_count(int n_cats, double mr);

/// Candidate positions for one seeking cat. With SPC the first candidate is
/// the unmodified current position and SMP-1 mutated copies follow; without
/// it, SMP mutated copies. Each mutated copy changes max(1, round(cdc*D))
/// distinct dimensions by Eq. 1 and is clamped to the box.
std::vector<std::vector<double>> make_seeking_candidates(const Cat& cat, const CsoParams& params,
                                                         const Objective& objective, Rng& rng);

/// Roulette-wheel pick over Eq. 2 weights
///   P_i = |FS_i - FS_b| / (FS_max - FS_min),
/// FS_b = FS_max when minimizing. All-equal fitnesses get weight 1 each.
/// A zero-weight candidate is never selected.
std::size_t select_candidate(std::span<const double> fitnesses, bool minimize, Rng& rng);

/// One seeking-mode move: generate candidates, evaluate them (the SPC copy
/// reuses the cached fitness), roulette-select, move. Velocity is untouched.
void seeking_step(Cat& cat, const CsoParams& params, const Objective& objective, Rng& rng);

/// One tracing-mode move per Eq. 3/4: per-dimension velocity update toward
/// `best` with one r1 draw per dimension, velocity clamped to +-v_max,
/// position clamped to the box, fitness re-evaluated. The original
/// algorithm uses inertia_w = 1; AICSO passes its schedule value.
void tracing_step(Cat& cat, const BestRecord& best, const CsoParams& params,
                  const Objective& objective, Rng& rng, double inertia_w = 1.0);

/// Inertia weight for a given 1-based iteration; the original algorithm's
/// schedule is constantly 1.
using InertiaSchedule = std::function<double(int iteration)>;

/// Full run of the original algorithm: init, then max_iters iterations of
/// (assign modes, step every cat, update best-so-far). Throws
/// std::runtime_error naming the offending position if the objective
/// produces a non-finite fitness.
RunResult run(const CsoParams& params, const Objective& objective, std::uint64_t seed);

/// run() with a custom inertia schedule for the tracing update. The
/// original algorithm is the constant-1 schedule; both entry points share
/// one code path, so equal schedules give bit-identical runs.
RunResult run_with_inertia(const CsoParams& params, const Objective& objective,
                           std::uint64_t seed, const InertiaSchedule& inertia);

/// Objective evaluations one run consumes: N for the initial population plus
/// per iteration one evaluation per tracing cat and smp (smp-1 with SPC,
/// zero when that leaves no mutated copy) per seeking cat.
std::uint64_t expected_evaluations(const CsoParams& params);

}  // namespace catswarm

#endif
