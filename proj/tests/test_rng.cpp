#include <doctest.h>

#include <algorithm>
#include <set>

#include "catswarm/rng.hpp"

using catswarm::Rng;

TEST_CASE("rng streams are reproducible under a fixed seed") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(124);
    bool all_equal = true;
    Rng a2(123);
    for (int i = 0; i < 16; ++i) all_equal = all_equal && (a2.next_u64() == c.next_u64());
    CHECK_FALSE(all_equal);
}

TEST_CASE("uniform01 stays in [0,1) and uniform respects the interval") {
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.uniform(-3.5, 2.25);
        CHECK(v >= -3.5);
        CHECK(v < 2.25);
    }
    CHECK(rng.uniform(1.5, 1.5) == 1.5);
}

TEST_CASE("below is bounded and sign is two-valued") {
    Rng rng(99);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 5000; ++i) {
        const auto v = rng.below(7);
        CHECK(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
    bool plus = false, minus = false;
    for (int i = 0; i < 100; ++i) {
        const double s = rng.sign();
        CHECK((s == 1.0 || s == -1.0));
        plus = plus || s > 0;
        minus = minus || s < 0;
    }
    CHECK(plus);
    CHECK(minus);
}

TEST_CASE("distinct_indices draws k distinct values in range") {
    Rng rng(5);
    for (std::size_t k : {0u, 1u, 3u, 10u}) {
        const auto idx = rng.distinct_indices(k, 10);
        CHECK(idx.size() == k);
        std::set<std::size_t> unique(idx.begin(), idx.end());
        CHECK(unique.size() == k);
        for (auto i : idx) CHECK(i < 10);
    }
    // every index reachable
    std::set<std::size_t> seen;
    for (int rep = 0; rep < 200; ++rep) {
        for (auto i : rng.distinct_indices(2, 6)) seen.insert(i);
    }
    CHECK(seen.size() == 6);
}
