#ifndef STOPSET_GENERATE_HH
#define STOPSET_GENERATE_HH

#include <stopset/graphs.hh>

#include <cstdint>
#include <string>

namespace stopset
{
    struct GeneratedGraph
    {
        Graph graph;
        /// How the edge set was drawn; written into the file header by the CLI.
        std::string method;
    };

    /**
     * Seeded random simple graph with n vertices and m edges. When `connected`,
     * a random spanning tree is drawn first (random attachment over a shuffled
     * vertex order) and the rest is filled uniformly from the remaining pairs.
     * Throws InputError if m exceeds n(n-1)/2, or if connected and m < n-1.
     */
    auto random_graph(std::size_t n, std::size_t m, std::uint64_t seed, bool connected) -> GeneratedGraph;

    /// Seeded random Tanner graph; each (check, variable) pair is an edge with probability `density`.
    auto random_tanner_graph(std::size_t n_vars, std::size_t n_checks, double density, std::uint64_t seed) -> TannerGraph;
}

#endif
