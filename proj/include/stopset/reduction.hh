#ifndef STOPSET_REDUCTION_HH
#define STOPSET_REDUCTION_HH

#include <stopset/graphs.hh>
#include <stopset/stopping.hh>
#include <stopset/var_set.hh>

#include <optional>
#include <string>
#include <vector>

namespace stopset
{
    enum class Side
    {
        left,
        right
    };

    enum class TagKind
    {
        vertex, ///< u in V; layers L_1..L_{m+1} and R_2..R_{m+1}
        edge,   ///< canonical edge index; layers L_0 and R_1
        chain   ///< z_i with i in [1, m-1]; layer R_0
    };

    struct LayerLabel
    {
        Side side = Side::left;
        std::size_t layer = 0;
        TagKind kind = TagKind::vertex;
        std::size_t tag = 0;

        auto operator==(const LayerLabel &) const -> bool = default;
    };

    /// "v3", "e0" or "z1".
    auto tag_string(const LayerLabel & label) -> std::string;
    auto to_string(Side side) -> std::string;

    /**
     * The gadget graph built from a connected graph G with n vertices and
     * m >= 1 edges. Variables are laid out layer-major as L_0 (edges in
     * canonical order) then L_1..L_{m+1} (vertices), checks as R_0 (z_1..z_{m-1}),
     * R_1 (edges), then R_2..R_{m+1} (vertices).
     *
     * Stopping sets of size t(m+1)+m correspond to vertex covers of size t.
     */
    class ReductionInstance
    {
    public:
        explicit ReductionInstance(Graph source);

        auto source() const -> const Graph & { return _source; }
        auto product() const -> const TannerGraph & { return _product; }
        auto n() const -> std::size_t { return _n; }
        auto m() const -> std::size_t { return _m; }

        auto var_label(std::size_t index) const -> const LayerLabel & { return _var_labels[index]; }
        auto check_label(std::size_t index) const -> const LayerLabel & { return _check_labels[index]; }

        /// Variable index of e in L_0.
        auto edge_var(std::size_t edge) const -> std::size_t { return edge; }
        /// Variable index of u_i^l, 1 <= layer <= m+1.
        auto vertex_var(std::size_t vertex, std::size_t layer) const -> std::size_t;
        /// Check index of z_i, 1 <= i <= m-1.
        auto chain_check(std::size_t i) const -> std::size_t { return i - 1; }
        /// Check index of e in R_1.
        auto edge_check(std::size_t edge) const -> std::size_t { return _m - 1 + edge; }
        /// Check index of u_j^r, 2 <= layer <= m+1.
        auto vertex_check(std::size_t vertex, std::size_t layer) const -> std::size_t;

        /// All of L_0 as a variable set.
        auto l0() const -> VarSet;

    private:
        Graph _source;
        std::size_t _n;
        std::size_t _m;
        TannerGraph _product;
        std::vector<LayerLabel> _var_labels;
        std::vector<LayerLabel> _check_labels;
    };

    /// Throws InputError if g is disconnected or has no edges.
    auto build_reduction(const Graph & g) -> ReductionInstance;

    /// t(m+1)+m. Throws InputError unless 1 <= t <= n-1.
    auto target_size(std::size_t t, const ReductionInstance & inst) -> std::size_t;

    /**
     * L_0 together with every copy u_i^l of every cover vertex. Throws
     * InputError if `cover` misses an edge or has a size outside [1, n-1].
     */
    auto cover_to_stopping_set(const ReductionInstance & inst, const VarSet & cover) -> VarSet;

    /**
     * Vertices with at least one copy in `s`. Requires a stopping set with
     * 0 < |s| < n(m+1); the result is checked to be a vertex cover of size t
     * with |s| = t(m+1)+m, and InvariantViolation is thrown otherwise.
     */
    auto stopping_set_to_cover(const ReductionInstance & inst, const VarSet & s) -> VarSet;

    struct StructureReport
    {
        /// For each vertex, its copies in s are all-or-nothing across L_1..L_{m+1}.
        bool columns_consistent = false;
        /// s contains all of L_0 or none of it.
        bool l0_all_or_nothing = false;
        bool l0_contained = false;
        /// |s ∩ L_i| is the same for every i >= 1.
        bool equal_layer_counts = false;
        std::vector<std::size_t> layer_counts; ///< index i-1 holds |s ∩ L_i|

        auto holds() const -> bool { return columns_consistent && l0_all_or_nothing && equal_layer_counts; }
    };

    /// Throws InputError if `s` is not a stopping set of the product graph.
    auto check_structure(const ReductionInstance & inst, const VarSet & s) -> StructureReport;

    struct VerificationRow
    {
        std::size_t t = 0;
        bool cover_exists = false;
        bool stopping_set_exists = false;
        bool equivalent = false;
    };

    struct VerificationReport
    {
        std::size_t tau = 0;
        std::size_t distance = 0;
        std::size_t expected_distance = 0;
        bool oracles_agree = true;
        std::vector<VerificationRow> rows;
        bool pass = false;
        /// Edge-list text of the source graph, set when the verdict is FAIL.
        std::optional<std::string> counterexample;
    };

    /**
     * Checks both directions of the reduction on one graph: for every t in
     * [1, n-1], a t-cover exists iff G'' has a stopping set of size t(m+1)+m,
     * and the stopping distance of G'' equals tau(m+1)+m. `workers` evaluates
     * rows concurrently; row order is always by t.
     */
    auto verify_corollaries(const Graph & g, unsigned workers = 1) -> VerificationReport;
}

#endif
