#ifndef STOPSET_GRAPHS_HH
#define STOPSET_GRAPHS_HH

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stopset
{
    using Edge = std::pair<std::size_t, std::size_t>;

    /**
     * Undirected simple graph. Edges are kept in canonical order: every pair
     * stored as (min, max) and the list sorted lexicographically. That order
     * is what the reduction uses to number edges e_1..e_m.
     */
    class Graph
    {
    public:
        Graph() = default;

        /// Canonicalizes `edges`; duplicates are collapsed. Throws InputError on
        /// self-loops or out-of-range endpoints.
        Graph(std::size_t n, std::vector<Edge> edges);

        auto vertex_count() const -> std::size_t { return _n; }
        auto edge_count() const -> std::size_t { return _edges.size(); }
        auto edges() const -> const std::vector<Edge> & { return _edges; }

        /// Number of duplicate pairs dropped while canonicalizing.
        auto collapsed_duplicates() const -> std::size_t { return _collapsed; }

        auto adjacency() const -> std::vector<std::vector<std::size_t>>;

        auto operator==(const Graph & other) const -> bool
        {
            return _n == other._n && _edges == other._edges;
        }

    private:
        std::size_t _n = 0;
        std::vector<Edge> _edges;
        std::size_t _collapsed = 0;
    };

    /// One connected component; n <= 1 counts as connected.
    auto is_connected(const Graph & g) -> bool;

    /**
     * Edge-list text: one "u v" pair per line, '#' starts a comment, and an
     * optional header "p <n> <m>" before the first edge. Without a header,
     * n is max index + 1. With one, any index >= n and any mismatch between
     * m and the number of edge lines is an error.
     */
    auto parse_graph(std::string_view text) -> Graph;

    /// Emits the header form, which parse_graph reads back to an equal graph.
    auto emit_graph(const Graph & g) -> std::string;

    /**
     * Bipartite graph with variables (left) and checks (right). Both adjacency
     * views are built once at construction and kept sorted.
     */
    class TannerGraph
    {
    public:
        TannerGraph() = default;

        /// `check_neighbors[c]` lists the variables adjacent to check c. Throws
        /// InputError on out-of-range or repeated variable indices.
        TannerGraph(std::size_t n_vars, std::vector<std::vector<std::size_t>> check_neighbors);

        auto var_count() const -> std::size_t { return _n_vars; }
        auto check_count() const -> std::size_t { return _check_adj.size(); }
        auto edge_count() const -> std::size_t { return _n_edges; }

        auto check_neighbors(std::size_t c) const -> const std::vector<std::size_t> & { return _check_adj[c]; }
        auto var_neighbors(std::size_t v) const -> const std::vector<std::size_t> & { return _var_adj[v]; }

        auto operator==(const TannerGraph & other) const -> bool
        {
            return _n_vars == other._n_vars && _check_adj == other._check_adj;
        }

    private:
        std::size_t _n_vars = 0;
        std::size_t _n_edges = 0;
        std::vector<std::vector<std::size_t>> _check_adj;
        std::vector<std::vector<std::size_t>> _var_adj;
    };

    /// Dense binary matrix; row j is check c_j, column i is variable x_i.
    class ParityCheckMatrix
    {
    public:
        ParityCheckMatrix() = default;
        ParityCheckMatrix(std::size_t rows, std::size_t cols);

        auto rows() const -> std::size_t { return _rows; }
        auto cols() const -> std::size_t { return _cols; }

        auto at(std::size_t row, std::size_t col) const -> bool { return _bits[row * _cols + col] != 0; }
        auto set(std::size_t row, std::size_t col, bool value) -> void { _bits[row * _cols + col] = value ? 1 : 0; }

        auto operator==(const ParityCheckMatrix & other) const -> bool = default;

    private:
        std::size_t _rows = 0;
        std::size_t _cols = 0;
        std::vector<std::uint8_t> _bits;
    };

    /// Vertices become variables, edges become checks of degree two, in canonical edge order.
    auto incidence_graph(const Graph & g) -> TannerGraph;

    auto tanner_from_matrix(const ParityCheckMatrix & h) -> TannerGraph;
    auto matrix_from_tanner(const TannerGraph & t) -> ParityCheckMatrix;

    /**
     * MacKay alist. Line 1 is "n m" (columns, rows), line 2 the max column and
     * row weights, then the column weights, the row weights, one 1-based
     * index list per column, and one per row. Zero padding in index lists is
     * accepted. The column and row lists must describe the same matrix.
     */
    auto parse_alist(std::string_view text) -> ParityCheckMatrix;
    auto emit_alist(const ParityCheckMatrix & h) -> std::string;

    /// Header "rows cols", then one line per row of space-separated 0/1 entries.
    auto parse_dense(std::string_view text) -> ParityCheckMatrix;
    auto emit_dense(const ParityCheckMatrix & h) -> std::string;
}

#endif
