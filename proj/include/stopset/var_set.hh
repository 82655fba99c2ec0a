#ifndef STOPSET_VAR_SET_HH
#define STOPSET_VAR_SET_HH

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace stopset
{
    /**
     * A subset of a fixed universe [0, universe_size), stored as a bitset.
     * Used for variable sets of a Tanner graph, check sets, and vertex sets
     * of a plain graph. Iteration is always in increasing index order.
     */
    class VarSet
    {
    public:
        VarSet() = default;
        explicit VarSet(std::size_t universe_size);
        VarSet(std::size_t universe_size, std::initializer_list<std::size_t> members);

        static auto from_indices(std::size_t universe_size, const std::vector<std::size_t> & members) -> VarSet;
        static auto full(std::size_t universe_size) -> VarSet;

        /// Parses "0,3,7"; the empty string is the empty set. Rejects out-of-range indices.
        static auto parse(std::string_view text, std::size_t universe_size) -> VarSet;

        auto universe_size() const -> std::size_t { return _universe; }
        auto size() const -> std::size_t;
        auto empty() const -> bool;

        auto contains(std::size_t i) const -> bool;
        auto insert(std::size_t i) -> void;
        auto erase(std::size_t i) -> void;

        auto unite(const VarSet & other) const -> VarSet;
        auto intersect(const VarSet & other) const -> VarSet;
        auto complement() const -> VarSet;
        auto is_subset_of(const VarSet & other) const -> bool;

        /// Sorted member list.
        auto members() const -> std::vector<std::size_t>;

        /// Comma-separated sorted indices, e.g. "0,3,7".
        auto to_string() const -> std::string;

        /// Size first, then lexicographic on the sorted member lists.
        static auto size_lex_less(const VarSet & a, const VarSet & b) -> bool;

        auto operator==(const VarSet & other) const -> bool = default;

    private:
        auto check_index(std::size_t i) const -> void;
        auto check_universe(const VarSet & other) const -> void;

        std::size_t _universe = 0;
        std::vector<std::uint64_t> _words;
    };
}

#endif
