#ifndef STOPSET_ORACLES_HH
#define STOPSET_ORACLES_HH

#include <stopset/graphs.hh>
#include <stopset/var_set.hh>

#include <optional>

namespace stopset
{
    struct CoverOutcome
    {
        bool found = false;
        std::size_t size = 0;
        std::optional<VarSet> witness;
        bool exhaustive = true;
    };

    /// Throws InputError if `s` is not over g's vertex universe.
    auto is_vertex_cover(const Graph & g, const VarSet & s) -> bool;

    /**
     * Minimum vertex cover by branching on the endpoints of the first
     * uncovered edge. Exponential in the cover size; fine up to about
     * twenty vertices. With `canonical`, the witness is the
     * lexicographically smallest minimum cover.
     */
    auto min_vertex_cover(const Graph & g, bool canonical = false) -> CoverOutcome;

    /// Independent oracle: scans all 2^n subsets (n <= 30) and returns the
    /// lexicographically smallest minimum cover.
    auto min_vertex_cover_by_enumeration(const Graph & g) -> CoverOutcome;

    /**
     * A cover of exactly t vertices exists iff tau <= t <= n, since adding
     * vertices to a cover keeps it a cover. The witness is the minimum cover
     * padded with the lowest-index non-members. Throws InputError if t > n.
     */
    auto has_vertex_cover_of_size(const Graph & g, std::size_t t) -> CoverOutcome;
}

#endif
