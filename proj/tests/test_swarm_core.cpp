#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <vector>

#include "catswarm/cso.hpp"
#include "catswarm/suite.hpp"

using namespace catswarm;

namespace {

Objective box_sphere(int dim, double lo, double hi) {
    Objective obj;
    obj.name = "sphere-box";
    obj.dim = dim;
    obj.lower.assign(static_cast<std::size_t>(dim), lo);
    obj.upper.assign(static_cast<std::size_t>(dim), hi);
    obj.evaluate = [](std::span<const double> x, Rng&) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    };
    return obj;
}

}  // namespace

TEST_CASE("init_population: degenerate zero-width bounds force the origin") {
    CsoParams p;
    p.n_cats = 1;
    const Objective obj = box_sphere(2, 0.0, 0.0);
    Rng rng(3);
    const auto cats = init_population(p, obj, rng);
    REQUIRE(cats.size() == 1);
    CHECK(cats[0].position == std::vector<double>{0.0, 0.0});
    CHECK(cats[0].fitness == 0.0);
}

TEST_CASE("init_population: positions within bounds, velocities within the cap") {
    CsoParams p;
    p.n_cats = 10;
    const Objective obj = make_objective("F1", 8);
    Rng rng(11);
    const auto cats = init_population(p, obj, rng);
    REQUIRE(cats.size() == 10);
    for (const auto& cat : cats) {
        REQUIRE(cat.position.size() == 8);
        REQUIRE(cat.velocity.size() == 8);
        for (std::size_t d = 0; d < 8; ++d) {
            CHECK(cat.position[d] >= obj.lower[d]);
            CHECK(cat.position[d] <= obj.upper[d]);
            CHECK(std::fabs(cat.velocity[d]) <= v_max_for_dim(p, obj, static_cast<int>(d)));
        }
    }
}

TEST_CASE("init_population: bit-identical under a fixed seed") {
    CsoParams p;
    const Objective obj = make_objective("F1");
    Rng r1(42), r2(42);
    const auto a = init_population(p, obj, r1);
    const auto b = init_population(p, obj, r2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].position == b[i].position);
        CHECK(a[i].velocity == b[i].velocity);
        CHECK(a[i].fitness == b[i].fitness);
    }
}

TEST_CASE("init_population rejects non-finite bounds") {
    CsoParams p;
    Objective obj = box_sphere(2, -1.0, 1.0);
    obj.upper[1] = std::numeric_limits<double>::infinity();
    Rng rng(0);
    CHECK_THROWS_AS(init_population(p, obj, rng), std::invalid_argument);
}

TEST_CASE("assign_modes census") {
    Rng rng(17);
    auto census = [&rng](int n, double mr) {
        std::vector<Cat> cats(static_cast<std::size_t>(n));
        assign_modes(cats, mr, rng);
        int tracing = 0;
        for (const auto& c : cats) tracing += c.mode == CatMode::Tracing ? 1 : 0;
        return tracing;
    };
    CHECK(census(10, 0.2) == 2);
    CHECK(census(10, 0.0) == 0);
    CHECK(census(7, 0.5) == 4);  // round half away from zero
    CHECK(census(10, 1.0) == 10);
    for (int n : {1, 5, 12, 30, 31}) {
        for (double mr : {0.0, 0.1, 0.25, 0.5, 0.77, 1.0}) {
            CHECK(census(n, mr) == tracing_count(n, mr));
            CHECK(tracing_count(n, mr) == static_cast<int>(std::llround(mr * n)));
        }
    }
}

TEST_CASE("seeking mutation arithmetic") {
    CHECK(seeking_mutation(1.0, 0.2, 0.5, +1.0) == doctest::Approx(1.1));
    CHECK(seeking_mutation(1.0, 0.2, 0.5, -1.0) == doctest::Approx(0.9));
    CHECK(seeking_mutation(0.0, 0.9, 1.0, +1.0) == 0.0);
}

TEST_CASE("make_seeking_candidates: SPC keeps the current position as one candidate") {
    CsoParams p;
    p.smp = 5;
    p.spc = true;
    const Objective obj = make_objective("F1", 6);
    Cat cat;
    cat.position.assign(6, 10.0);
    cat.velocity.assign(6, 0.0);
    Rng rng(8);
    const auto cands = make_seeking_candidates(cat, p, obj, rng);
    REQUIRE(cands.size() == 5);
    CHECK(cands[0] == cat.position);
    const auto m = static_cast<std::size_t>(std::llround(p.cdc * 6));
    for (std::size_t c = 1; c < cands.size(); ++c) {
        std::size_t changed = 0;
        for (std::size_t d = 0; d < 6; ++d) {
            if (cands[c][d] != cat.position[d]) ++changed;
            CHECK(cands[c][d] >= obj.lower[d]);
            CHECK(cands[c][d] <= obj.upper[d]);
        }
        CHECK(changed == m);
    }
}

TEST_CASE("make_seeking_candidates: without SPC all SMP candidates are mutated") {
    CsoParams p;
    p.smp = 3;
    p.spc = false;
    p.cdc = 0.4;  // round(0.4*5) = 2 dimensions
    const Objective obj = make_objective("F1", 5);
    Cat cat;
    cat.position.assign(5, -7.5);
    cat.velocity.assign(5, 0.0);
    Rng rng(21);
    const auto cands = make_seeking_candidates(cat, p, obj, rng);
    REQUIRE(cands.size() == 3);
    for (const auto& cand : cands) {
        std::size_t changed = 0;
        for (std::size_t d = 0; d < 5; ++d) changed += cand[d] != cat.position[d] ? 1 : 0;
        CHECK(changed == 2);
    }
}

TEST_CASE("make_seeking_candidates mutates at least one dimension") {
    CsoParams p;
    p.smp = 2;
    p.spc = false;
    p.cdc = 0.01;  // would round to zero dimensions without the floor
    const Objective obj = make_objective("F1", 4);
    Cat cat;
    cat.position.assign(4, 5.0);
    cat.velocity.assign(4, 0.0);
    Rng rng(4);
    for (const auto& cand : make_seeking_candidates(cat, p, obj, rng)) {
        std::size_t changed = 0;
        for (std::size_t d = 0; d < 4; ++d) changed += cand[d] != cat.position[d] ? 1 : 0;
        CHECK(changed == 1);
    }
}

TEST_CASE("select_candidate: weights follow the fitness-distance rule") {
    Rng rng(33);
    // FS = [2,4,6] minimizing -> P = [1.0, 0.5, 0.0]: index 2 unreachable,
    // index 0 picked twice as often as index 1
    const std::vector<double> fs{2.0, 4.0, 6.0};
    int counts[3] = {0, 0, 0};
    const int n = 60000;
    for (int i = 0; i < n; ++i) ++counts[select_candidate(fs, true, rng)];
    CHECK(counts[2] == 0);
    CHECK(static_cast<double>(counts[0]) / n == doctest::Approx(2.0 / 3.0).epsilon(0.02));
    CHECK(static_cast<double>(counts[1]) / n == doctest::Approx(1.0 / 3.0).epsilon(0.04));
}

TEST_CASE("select_candidate: all-equal fitnesses select uniformly") {
    Rng rng(14);
    const std::vector<double> fs{5.0, 5.0, 5.0};
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < 30000; ++i) ++counts[select_candidate(fs, true, rng)];
    for (int c : counts)
        CHECK(static_cast<double>(c) / 30000.0 == doctest::Approx(1.0 / 3.0).epsilon(0.05));
}

TEST_CASE("select_candidate: zero-mass candidate is never drawn") {
    Rng rng(2);
    const std::vector<double> fs{0.0, 10.0};
    for (int i = 0; i < 2000; ++i) CHECK(select_candidate(fs, true, rng) == 0);
    // maximization flips the target
    for (int i = 0; i < 2000; ++i) CHECK(select_candidate(fs, false, rng) == 1);
}

TEST_CASE("select_candidate rejects an empty candidate list") {
    Rng rng(1);
    CHECK_THROWS_AS(select_candidate({}, true, rng), std::invalid_argument);
}

TEST_CASE("seeking_step: SMP=1 with SPC is the identity") {
    CsoParams p;
    p.smp = 1;
    p.spc = true;
    const Objective obj = make_objective("F1", 4);
    Cat cat;
    cat.position = {1.0, -2.0, 3.0, -4.0};
    cat.velocity.assign(4, 0.5);
    Rng dummy(0);
    cat.fitness = obj.evaluate(cat.position, dummy);
    Cat before = cat;
    Rng rng(5);
    seeking_step(cat, p, obj, rng);
    CHECK(cat.position == before.position);
    CHECK(cat.fitness == before.fitness);
    CHECK(cat.velocity == before.velocity);
}

TEST_CASE("seeking_step: degenerate bounds keep the cat at the origin") {
    CsoParams p;
    const Objective obj = box_sphere(3, 0.0, 0.0);
    Cat cat;
    cat.position.assign(3, 0.0);
    cat.velocity.assign(3, 0.0);
    cat.fitness = 0.0;
    Rng rng(6);
    seeking_step(cat, p, obj, rng);
    CHECK(cat.position == std::vector<double>(3, 0.0));
    CHECK(cat.fitness == 0.0);
}

TEST_CASE("seeking_step picks one of its own candidates") {
    CsoParams p;
    p.smp = 5;
    p.spc = false;
    const Objective obj = make_objective("F1", 2);
    Cat cat;
    cat.position = {3.0, -4.0};
    cat.velocity = {0.0, 0.0};
    cat.fitness = 25.0;
    Rng probe(1234);  // same stream as the step consumes
    Rng rng(1234);
    const auto cands = make_seeking_candidates(cat, p, obj, probe);
    std::vector<double> fitnesses;
    Rng noise(0);
    for (const auto& c : cands) fitnesses.push_back(obj.evaluate(c, noise));
    seeking_step(cat, p, obj, rng);
    CHECK(std::count(fitnesses.begin(), fitnesses.end(), cat.fitness) > 0);
    CHECK(cat.fitness <= *std::max_element(fitnesses.begin(), fitnesses.end()));
    CHECK(cat.fitness >= *std::min_element(fitnesses.begin(), fitnesses.end()));
    CHECK(cat.velocity == std::vector<double>{0.0, 0.0});  // seeking leaves velocity alone
}

TEST_CASE("traced velocity arithmetic and clamping") {
    CHECK(traced_velocity(0.5, 1.0, 0.5, 2.0, 3.0, 1.0) == doctest::Approx(2.5));
    // velocity cap and the resulting move
    CsoParams p;
    p.v_max = 2.0;
    Objective obj = box_sphere(1, -100.0, 100.0);
    Cat cat;
    cat.position = {1.0};
    cat.velocity = {0.5};
    cat.fitness = 1.0;
    BestRecord best;
    best.position = {3.0};
    best.fitness = 9.0;
    // single dimension: the only r1 draw scales the pull; with r1 drawn the
    // unclamped velocity is 0.5 + 2*r1*2; force the clamp by any r1 > 0.375
    Rng rng(100);
    tracing_step(cat, best, p, obj, rng, 1.0);
    CHECK(std::fabs(cat.velocity[0]) <= 2.0);
    CHECK(cat.position[0] == doctest::Approx(1.0 + cat.velocity[0]));
}

TEST_CASE("tracing_step: a cat sitting on the best with zero velocity stays") {
    CsoParams p;
    const Objective obj = make_objective("F1", 3);
    Cat cat;
    cat.position = {2.0, 2.0, 2.0};
    cat.velocity = {0.0, 0.0, 0.0};
    BestRecord best;
    best.position = cat.position;
    best.fitness = 12.0;
    Rng rng(9);
    tracing_step(cat, best, p, obj, rng, 1.0);
    CHECK(cat.position == best.position);
    CHECK(cat.velocity == std::vector<double>(3, 0.0));
}

TEST_CASE("tracing_step respects bounds and velocity caps everywhere") {
    CsoParams p;
    p.v_max = 3.0;
    const Objective obj = make_objective("F9", 5);
    Rng rng(77);
    Cat cat;
    cat.position.assign(5, 5.0);
    cat.velocity.assign(5, 3.0);
    BestRecord best;
    best.position.assign(5, -5.0);
    best.fitness = 0.0;
    for (int i = 0; i < 200; ++i) {
        tracing_step(cat, best, p, obj, rng, 1.0);
        for (std::size_t d = 0; d < 5; ++d) {
            CHECK(cat.position[d] >= obj.lower[d]);
            CHECK(cat.position[d] <= obj.upper[d]);
            CHECK(std::fabs(cat.velocity[d]) <= 3.0);
        }
    }
}

TEST_CASE("run: zero iterations returns the best of the initial population") {
    CsoParams p;
    p.n_cats = 12;
    p.max_iters = 0;
    const Objective obj = make_objective("F1", 6);
    const auto result = run(p, obj, 31);

    Rng rng(31);
    const auto cats = init_population(p, obj, rng);
    double expected = cats[0].fitness;
    for (const auto& c : cats) expected = std::min(expected, c.fitness);

    CHECK(result.best.fitness == expected);
    CHECK(result.best.iteration_found == 0);
    REQUIRE(result.trace.size() == 1);
    CHECK(result.trace[0] == expected);
    CHECK(result.evaluations == 12);
}

TEST_CASE("run: identical trace across two invocations with the same seed") {
    CsoParams p;
    p.max_iters = 60;
    const Objective obj = make_objective("F9", 10);
    const auto a = run(p, obj, 2024);
    const auto b = run(p, obj, 2024);
    CHECK(a.trace == b.trace);
    CHECK(a.best.position == b.best.position);
    CHECK(a.best.fitness == b.best.fitness);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("run: best-so-far trace is monotone and ends at the best fitness") {
    CsoParams p;
    p.max_iters = 120;
    for (const char* fn : {"F1", "F10", "F16"}) {
        const auto result = run(p, make_objective(fn), 5);
        REQUIRE(result.trace.size() == 121);
        for (std::size_t i = 1; i < result.trace.size(); ++i)
            CHECK(result.trace[i] <= result.trace[i - 1]);
        CHECK(result.trace.back() == result.best.fitness);
    }
}

TEST_CASE("run: evaluation accounting matches an instrumented objective") {
    CsoParams p;
    p.n_cats = 9;
    p.max_iters = 25;
    p.mr = 0.3;
    std::atomic<std::uint64_t> calls{0};
    Objective obj = make_objective("F9", 6);
    auto inner = obj.evaluate;
    obj.evaluate = [&calls, inner](std::span<const double> x, Rng& rng) {
        ++calls;
        return inner(x, rng);
    };
    const auto result = run(p, obj, 8);
    CHECK(result.evaluations == expected_evaluations(p));
    CHECK(calls.load() == expected_evaluations(p));

    // the SPC copy never re-evaluates: smp=1 spc=true costs nothing
    CsoParams cheap = p;
    cheap.smp = 1;
    cheap.mr = 0.0;
    calls = 0;
    run(cheap, obj, 8);
    CHECK(calls.load() == 9);
}

TEST_CASE("run aborts with a diagnostic on non-finite fitness") {
    CsoParams p;
    p.n_cats = 3;
    p.max_iters = 5;
    Objective obj = box_sphere(2, -1.0, 1.0);
    obj.evaluate = [](std::span<const double> x, Rng&) {
        return x[0] > 0.0 ? std::numeric_limits<double>::infinity() : x[0];
    };
    CHECK_THROWS_WITH_AS(run(p, obj, 1), doctest::Contains("non-finite fitness"),
                         std::runtime_error);
}

TEST_CASE("run: F1 at defaults lands below 1e-6 in at least 28 of 30 seeded runs") {
    CsoParams p;  // defaults: 30 cats, 500 iterations
    const Objective obj = make_objective("F1");
    int hits = 0;
    for (int r = 0; r < 30; ++r) {
        const auto result = run(p, obj, 9000 + static_cast<std::uint64_t>(r) * 131);
        if (result.best.fitness < 1e-6) ++hits;
    }
    CHECK(hits >= 28);
}

TEST_CASE("params validation rejects out-of-range values") {
    const Objective obj = make_objective("F1", 2);
    Rng rng(0);
    auto expect_throw = [&](auto mutate) {
        CsoParams p;
        mutate(p);
        CHECK_THROWS_AS(init_population(p, obj, rng), std::invalid_argument);
    };
    expect_throw([](CsoParams& p) { p.n_cats = 0; });
    expect_throw([](CsoParams& p) { p.smp = 0; });
    expect_throw([](CsoParams& p) { p.srd = 0.0; });
    expect_throw([](CsoParams& p) { p.srd = 1.5; });
    expect_throw([](CsoParams& p) { p.cdc = 0.0; });
    expect_throw([](CsoParams& p) { p.mr = -0.1; });
    expect_throw([](CsoParams& p) { p.mr = 1.1; });
    expect_throw([](CsoParams& p) { p.c1 = 0.0; });
    expect_throw([](CsoParams& p) { p.v_max = 0.0; });
    expect_throw([](CsoParams& p) { p.max_iters = -1; });
}
