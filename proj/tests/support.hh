#ifndef STOPSET_TESTS_SUPPORT_HH
#define STOPSET_TESTS_SUPPORT_HH

// Test-only oracles. These restate the definitions directly (nested loops over
// a dense incidence matrix, plain subset scans) and share no code with the
// search, enumeration or peeling paths they are used to check.

#include <stopset/generate.hh>
#include <stopset/graphs.hh>
#include <stopset/random.hh>
#include <stopset/var_set.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace stopset::testing
{
    using Dense = std::vector<std::vector<bool>>; // [check][var]

    inline auto dense_of(const TannerGraph & t) -> Dense
    {
        Dense h(t.check_count(), std::vector<bool>(t.var_count(), false));
        for (std::size_t c = 0 ; c < t.check_count() ; ++c)
            for (auto v : t.check_neighbors(c))
                h[c][v] = true;
        return h;
    }

    /// For every check touching s, at least two neighbors lie in s.
    inline auto definitional_stopping(const Dense & h, std::size_t n_vars, std::uint64_t s) -> bool
    {
        for (auto & row : h) {
            int inside = 0;
            for (std::size_t v = 0 ; v < n_vars ; ++v)
                if (row[v] && ((s >> v) & 1))
                    ++inside;
            if (inside == 1)
                return false;
        }
        return true;
    }

    inline auto to_mask(const VarSet & s) -> std::uint64_t
    {
        std::uint64_t mask = 0;
        for (auto v : s.members())
            mask |= std::uint64_t{ 1 } << v;
        return mask;
    }

    inline auto from_mask(std::size_t universe, std::uint64_t mask) -> VarSet
    {
        VarSet s(universe);
        for (std::size_t v = 0 ; v < universe ; ++v)
            if ((mask >> v) & 1)
                s.insert(v);
        return s;
    }

    /// All nonempty stopping sets as masks, by plain subset scan.
    inline auto brute_stopping_sets(const TannerGraph & t) -> std::vector<std::uint64_t>
    {
        auto h = dense_of(t);
        std::vector<std::uint64_t> result;
        for (std::uint64_t s = 1 ; s < (std::uint64_t{ 1 } << t.var_count()) ; ++s)
            if (definitional_stopping(h, t.var_count(), s))
                result.push_back(s);
        return result;
    }

    inline auto brute_stopping_distance(const TannerGraph & t) -> std::optional<std::size_t>
    {
        std::optional<std::size_t> best;
        for (auto s : brute_stopping_sets(t)) {
            auto size = static_cast<std::size_t>(__builtin_popcountll(s));
            if (! best || size < *best)
                best = size;
        }
        return best;
    }

    inline auto brute_min_cover_size(const Graph & g) -> std::size_t
    {
        auto n = g.vertex_count();
        std::size_t best = n;
        for (std::uint64_t s = 0 ; s < (std::uint64_t{ 1 } << n) ; ++s) {
            bool covers = true;
            for (auto & [u, v] : g.edges())
                if (! ((s >> u) & 1) && ! ((s >> v) & 1))
                    covers = false;
            if (covers)
                best = std::min<std::size_t>(best, __builtin_popcountll(s));
        }
        return best;
    }

    /// Peeling that resolves one uniformly chosen solvable check at a time.
    inline auto peel_random_order(const TannerGraph & t, const VarSet & erased, Rng & rng) -> VarSet
    {
        auto h = dense_of(t);
        auto residual = erased;
        while (true) {
            std::vector<std::size_t> solvable;
            for (std::size_t c = 0 ; c < h.size() ; ++c) {
                int count = 0;
                for (std::size_t v = 0 ; v < t.var_count() ; ++v)
                    if (h[c][v] && residual.contains(v))
                        ++count;
                if (count == 1)
                    solvable.push_back(c);
            }
            if (solvable.empty())
                return residual;
            auto c = solvable[uniform_below(rng, solvable.size())];
            for (std::size_t v = 0 ; v < t.var_count() ; ++v)
                if (h[c][v] && residual.contains(v))
                    residual.erase(v);
        }
    }

    /// Random Tanner graph with 1..max_vars variables and a random density.
    inline auto random_small_tanner(Rng & rng, std::size_t max_vars, std::size_t max_checks) -> TannerGraph
    {
        auto n = 1 + uniform_below(rng, max_vars);
        auto m = uniform_below(rng, max_checks + 1);
        auto density = 0.1 + 0.5 * uniform_unit(rng);
        return random_tanner_graph(n, m, density, rng());
    }

    inline auto random_connected_graph(Rng & rng, std::size_t min_n, std::size_t max_n, std::size_t max_m) -> Graph
    {
        auto n = min_n + uniform_below(rng, max_n - min_n + 1);
        auto most = std::min(max_m, n * (n - 1) / 2);
        auto m = (n - 1) + uniform_below(rng, most - (n - 1) + 1);
        return random_graph(n, m, rng(), true).graph;
    }

    inline auto triangle() -> Graph
    {
        return Graph(3, { { 0, 1 }, { 1, 2 }, { 0, 2 } });
    }

    inline auto single_edge() -> Graph
    {
        return Graph(2, { { 0, 1 } });
    }

    inline auto path4() -> Graph
    {
        return Graph(4, { { 0, 1 }, { 1, 2 }, { 2, 3 } });
    }
}

#endif
