#ifndef STOPSET_RANDOM_HH
#define STOPSET_RANDOM_HH

#include <cstdint>
#include <random>

namespace stopset
{
    // std::*_distribution output is implementation-defined; these are not, so
    // seeded runs are bit-reproducible across standard libraries.

    using Rng = std::mt19937_64;

    auto make_rng(std::uint64_t seed, std::uint64_t stream = 0) -> Rng;

    /// Uniform in [0, bound), by rejection. bound must be positive.
    auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t;

    /// Uniform double in [0, 1) with 53 random bits.
    auto uniform_unit(Rng & rng) -> double;

    auto bernoulli(Rng & rng, double p) -> bool;
}

#endif
