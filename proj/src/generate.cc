#include <stopset/errors.hh>
#include <stopset/generate.hh>
#include <stopset/random.hh>

#include <algorithm>
#include <numeric>
#include <set>

using namespace stopset;

using std::size_t;
using std::vector;

namespace
{
    template <typename T>
    auto shuffle(vector<T> & values, Rng & rng) -> void
    {
        for (size_t i = values.size() ; i > 1 ; --i)
            std::swap(values[i - 1], values[uniform_below(rng, i)]);
    }
}

auto stopset::random_graph(size_t n, size_t m, std::uint64_t seed, bool connected) -> GeneratedGraph
{
    auto max_edges = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (m > max_edges)
        throw InputError("a simple graph on " + std::to_string(n) + " vertices has at most " + std::to_string(max_edges) + " edges");
    if (connected && n > 0 && m < n - 1)
        throw InputError("a connected graph on " + std::to_string(n) + " vertices needs at least " + std::to_string(n - 1) + " edges");

    auto rng = make_rng(seed);
    std::set<Edge> chosen;
    std::string method = "uniform";

    if (connected && n > 1) {
        vector<size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        shuffle(order, rng);
        for (size_t i = 1 ; i < n ; ++i) {
            auto u = order[i], v = order[uniform_below(rng, i)];
            chosen.emplace(std::min(u, v), std::max(u, v));
        }
        method = "random-spanning-tree+uniform-fill";
    }

    vector<Edge> remaining;
    for (size_t u = 0 ; u < n ; ++u)
        for (size_t v = u + 1 ; v < n ; ++v)
            if (! chosen.count({ u, v }))
                remaining.emplace_back(u, v);
    shuffle(remaining, rng);
    for (size_t i = 0 ; chosen.size() < m ; ++i)
        chosen.insert(remaining[i]);

    return GeneratedGraph{ Graph(n, vector<Edge>(chosen.begin(), chosen.end())), method };
}

auto stopset::random_tanner_graph(size_t n_vars, size_t n_checks, double density, std::uint64_t seed) -> TannerGraph
{
    if (density < 0.0 || density > 1.0)
        throw InputError("density must lie in [0, 1]");
    auto rng = make_rng(seed);
    vector<vector<size_t>> checks(n_checks);
    for (auto & check : checks)
        for (size_t v = 0 ; v < n_vars ; ++v)
            if (bernoulli(rng, density))
                check.push_back(v);
    return TannerGraph(n_vars, std::move(checks));
}
