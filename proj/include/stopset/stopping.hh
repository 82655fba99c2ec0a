#ifndef STOPSET_STOPPING_HH
#define STOPSET_STOPPING_HH

#include <stopset/graphs.hh>
#include <stopset/var_set.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace stopset
{
    /// Checks adjacent to at least one member of `s`, as a set over the check universe.
    auto neighborhood(const TannerGraph & t, const VarSet & s) -> VarSet;

    /// Every check adjacent to `s` has at least two neighbors in `s`. Linear in the edge count.
    auto is_stopping_set(const TannerGraph & t, const VarSet & s) -> bool;

    /// Largest variable count enumerate_stopping_sets accepts.
    inline constexpr std::size_t max_enumeration_vars = 30;

    /**
     * Every nonempty stopping set of size <= max_size, each once, ordered by
     * size and then lexicographically. Scans all 2^n subsets, so this is an
     * oracle for small graphs only; throws InputError above
     * max_enumeration_vars.
     */
    auto enumerate_stopping_sets(const TannerGraph & t, std::size_t max_size) -> std::vector<VarSet>;

    /// Streaming form of the above; same order.
    auto for_each_stopping_set(const TannerGraph & t, std::size_t max_size,
        const std::function<void (const VarSet &)> & callback) -> void;

    enum class SearchStatus
    {
        found,
        none_within_budget
    };

    auto to_string(SearchStatus status) -> std::string;

    struct SearchOutcome
    {
        SearchStatus status = SearchStatus::none_within_budget;
        std::size_t size = 0;
        std::optional<VarSet> witness;
        std::uint64_t nodes_explored = 0;
        /// True iff the search ran to completion, so `status` and `size` are proven.
        bool exhaustive = false;
    };

    struct SearchOptions
    {
        /// Largest stopping-set size considered by stopping_distance.
        std::optional<std::size_t> max_size;

        /// Abort after this many search nodes; the outcome is then non-exhaustive.
        std::optional<std::uint64_t> node_limit;

        /// Return the lexicographically smallest witness of the optimal size.
        bool canonical = false;

        /// Number of threads splitting the top-level branches. Sizes and
        /// statuses never depend on this; witnesses may, unless canonical.
        unsigned workers = 1;
    };

    /**
     * Smallest nonempty stopping set, by depth-first branch and bound over
     * in/out/undecided variable states with unit propagation on checks. The
     * witness is re-verified before returning.
     */
    auto stopping_distance(const TannerGraph & t, const SearchOptions & options = { }) -> SearchOutcome;

    /**
     * Stopping set of exactly `size` members. Size 0 always succeeds with the
     * empty set. Throws InputError unless size <= var_count().
     */
    auto has_stopping_set_of_size(const TannerGraph & t, std::size_t size, const SearchOptions & options = { }) -> SearchOutcome;
}

#endif
