#include <stopset/decoder.hh>
#include <stopset/errors.hh>
#include <stopset/random.hh>
#include <stopset/stopping.hh>

#include <thread>

using namespace stopset;

using std::size_t;
using std::uint64_t;
using std::vector;

auto stopset::peel(const TannerGraph & t, const VarSet & erased) -> PeelResult
{
    if (erased.universe_size() != t.var_count())
        throw InputError("erasure set over universe " + std::to_string(erased.universe_size()) + " does not match Tanner graph with "
                + std::to_string(t.var_count()) + " variables");

    vector<bool> is_erased(t.var_count(), false);
    vector<unsigned> erased_degree(t.check_count(), 0);
    for (auto v : erased.members()) {
        is_erased[v] = true;
        for (auto c : t.var_neighbors(v))
            ++erased_degree[c];
    }

    // Waves: `current` holds the checks that were solvable when the wave began.
    vector<size_t> current, next;
    for (size_t c = 0 ; c < t.check_count() ; ++c)
        if (erased_degree[c] == 1)
            current.push_back(c);

    PeelResult result;
    while (! current.empty()) {
        bool resolved_any = false;
        for (auto c : current) {
            if (erased_degree[c] != 1)
                continue;
            for (auto v : t.check_neighbors(c))
                if (is_erased[v]) {
                    is_erased[v] = false;
                    resolved_any = true;
                    for (auto d : t.var_neighbors(v))
                        if (--erased_degree[d] == 1)
                            next.push_back(d);
                    break;
                }
        }
        if (resolved_any)
            ++result.rounds;
        current.swap(next);
        next.clear();
    }

    result.residual = VarSet(t.var_count());
    for (size_t v = 0 ; v < is_erased.size() ; ++v)
        if (is_erased[v])
            result.residual.insert(v);
    result.success = result.residual.empty();

    if (! is_stopping_set(t, result.residual))
        throw InvariantViolation("peeling residual is not a stopping set");
    return result;
}

auto stopset::mc_failure_rate(const TannerGraph & t, double epsilon, uint64_t trials, uint64_t seed,
        unsigned shards, unsigned workers) -> FailureRate
{
    if (! (epsilon >= 0.0 && epsilon <= 1.0))
        throw InputError("epsilon must lie in [0, 1]");
    if (trials == 0)
        throw InputError("trials must be at least 1");
    if (shards == 0)
        throw InputError("shards must be at least 1");

    vector<uint64_t> failures(shards, 0);
    auto run_shard = [&] (unsigned shard) {
        auto rng = make_rng(seed, shard);
        auto count = trials / shards + (shard < trials % shards ? 1 : 0);
        for (uint64_t trial = 0 ; trial < count ; ++trial) {
            VarSet erased(t.var_count());
            for (size_t v = 0 ; v < t.var_count() ; ++v)
                if (bernoulli(rng, epsilon))
                    erased.insert(v);
            if (! peel(t, erased).success)
                ++failures[shard];
        }
    };

    workers = std::max(1u, std::min(workers, shards));
    if (workers == 1)
        for (unsigned shard = 0 ; shard < shards ; ++shard)
            run_shard(shard);
    else {
        vector<std::thread> threads;
        for (unsigned w = 0 ; w < workers ; ++w)
            threads.emplace_back([&, w] {
                for (auto shard = w ; shard < shards ; shard += workers)
                    run_shard(shard);
            });
        for (auto & thread : threads)
            thread.join();
    }

    FailureRate result;
    result.trials = trials;
    result.shards = shards;
    for (auto f : failures)
        result.failures += f;
    result.rate = static_cast<double>(result.failures) / static_cast<double>(trials);
    return result;
}
