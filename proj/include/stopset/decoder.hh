#ifndef STOPSET_DECODER_HH
#define STOPSET_DECODER_HH

#include <stopset/graphs.hh>
#include <stopset/var_set.hh>

#include <cstdint>

namespace stopset
{
    struct PeelResult
    {
        VarSet residual;
        /// Number of parallel peeling waves that resolved at least one erasure.
        std::size_t rounds = 0;
        bool success = false;
    };

    /**
     * Erasure peeling: a check with exactly one erased neighbor recovers it,
     * repeated to a fixpoint with a FIFO queue of solvable checks. Only
     * positions are tracked. The residual is the largest stopping set inside
     * `erased` and does not depend on the resolution order.
     */
    auto peel(const TannerGraph & t, const VarSet & erased) -> PeelResult;

    struct FailureRate
    {
        std::uint64_t trials = 0;
        std::uint64_t failures = 0;
        double rate = 0.0;
        unsigned shards = 1;
    };

    /**
     * Monte Carlo peeling failure rate with i.i.d. erasures of probability
     * `epsilon`. Trials are split over `shards`, each with its own generator
     * seeded from (seed, shard index); the result depends on the shard count
     * but never on `workers`. Throws InputError on epsilon outside [0, 1],
     * zero trials, or zero shards.
     */
    auto mc_failure_rate(const TannerGraph & t, double epsilon, std::uint64_t trials, std::uint64_t seed,
        unsigned shards = 1, unsigned workers = 1) -> FailureRate;
}

#endif
