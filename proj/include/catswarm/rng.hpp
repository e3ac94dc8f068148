#ifndef CATSWARM_RNG_HPP
#define CATSWARM_RNG_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace catswarm {

/// Seeded random source with distribution code that is bit-stable across
/// platforms. std::mt19937_64 output is fully specified by the standard;
/// the distributions below avoid the implementation-defined stdlib ones so
/// that a (seed, params) pair always produces the same stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi). Returns lo when the range is empty.
    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

    /// Uniform integer in [0, n). n must be nonzero. Unbiased (rejection).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    /// +1 or -1 with equal probability.
    double sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

    /// k distinct indices drawn uniformly from [0, n), k <= n.
    /// Partial Fisher-Yates; order of the returned indices is part of the
    /// deterministic stream contract.
    std::vector<std::size_t> distinct_indices(std::size_t k, std::size_t n) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace catswarm

#endif
