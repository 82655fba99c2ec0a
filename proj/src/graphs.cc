#include <stopset/errors.hh>
#include <stopset/graphs.hh>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <queue>

using namespace stopset;

using std::optional;
using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace
{
    /// Splits on '\n', keeps 1-based line numbers, drops '#' comments and blank lines.
    struct Line
    {
        size_t number;
        vector<string_view> tokens;
    };

    auto tokenize(string_view line) -> vector<string_view>
    {
        vector<string_view> tokens;
        size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            auto start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
                ++pos;
            if (pos > start)
                tokens.push_back(line.substr(start, pos - start));
        }
        return tokens;
    }

    auto split_lines(string_view text, bool strip_comments) -> vector<Line>
    {
        vector<Line> result;
        size_t number = 0, pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            auto line = text.substr(pos, nl == string_view::npos ? string_view::npos : nl - pos);
            ++number;
            if (strip_comments)
                if (auto hash = line.find('#') ; hash != string_view::npos)
                    line = line.substr(0, hash);
            auto tokens = tokenize(line);
            if (! tokens.empty())
                result.push_back(Line{ number, std::move(tokens) });
            if (nl == string_view::npos)
                break;
            pos = nl + 1;
        }
        return result;
    }

    auto parse_index(string_view token, size_t line) -> size_t
    {
        size_t value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{ } || end != token.data() + token.size())
            throw ParseError("expected a non-negative integer, got '" + string(token) + "'", line);
        return value;
    }
}

Graph::Graph(size_t n, vector<Edge> edges) :
    _n(n)
{
    for (auto & [u, v] : edges) {
        if (u == v)
            throw InputError("self-loop at vertex " + to_string(u));
        if (u >= n || v >= n)
            throw InputError("edge (" + to_string(u) + "," + to_string(v) + ") out of range for n=" + to_string(n));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    _collapsed = static_cast<size_t>(edges.end() - last);
    edges.erase(last, edges.end());
    _edges = std::move(edges);
}

auto Graph::adjacency() const -> vector<vector<size_t>>
{
    vector<vector<size_t>> adj(_n);
    for (auto & [u, v] : _edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto & a : adj)
        std::sort(a.begin(), a.end());
    return adj;
}

auto stopset::is_connected(const Graph & g) -> bool
{
    auto n = g.vertex_count();
    if (n <= 1)
        return true;

    auto adj = g.adjacency();
    vector<bool> seen(n, false);
    std::queue<size_t> queue;
    queue.push(0);
    seen[0] = true;
    size_t reached = 1;
    while (! queue.empty()) {
        auto u = queue.front();
        queue.pop();
        for (auto v : adj[u])
            if (! seen[v]) {
                seen[v] = true;
                ++reached;
                queue.push(v);
            }
    }
    return reached == n;
}

auto stopset::parse_graph(string_view text) -> Graph
{
    optional<size_t> header_n, header_m;
    vector<Edge> edges;
    size_t max_index = 0;
    bool any_edge = false;

    for (auto & line : split_lines(text, true)) {
        if (line.tokens[0] == "p") {
            if (header_n)
                throw ParseError("duplicate header", line.number);
            if (any_edge)
                throw ParseError("header must precede the edges", line.number);
            if (line.tokens.size() != 3)
                throw ParseError("header must be 'p <n> <m>'", line.number);
            header_n = parse_index(line.tokens[1], line.number);
            header_m = parse_index(line.tokens[2], line.number);
            continue;
        }

        if (line.tokens.size() != 2)
            throw ParseError("expected 'u v', got " + to_string(line.tokens.size()) + " tokens", line.number);
        auto u = parse_index(line.tokens[0], line.number);
        auto v = parse_index(line.tokens[1], line.number);
        if (u == v)
            throw ParseError("self-loop at vertex " + to_string(u), line.number);
        if (header_n && (u >= *header_n || v >= *header_n))
            throw ParseError("vertex index out of range for n=" + to_string(*header_n), line.number);
        max_index = std::max({ max_index, u, v });
        any_edge = true;
        edges.emplace_back(u, v);
    }

    if (header_m && *header_m != edges.size())
        throw ParseError("header declares " + to_string(*header_m) + " edges but " + to_string(edges.size()) + " were given");

    auto n = header_n ? *header_n : (any_edge ? max_index + 1 : 0);
    return Graph(n, std::move(edges));
}

auto stopset::emit_graph(const Graph & g) -> string
{
    string result = "p " + to_string(g.vertex_count()) + " " + to_string(g.edge_count()) + "\n";
    for (auto & [u, v] : g.edges())
        result += to_string(u) + " " + to_string(v) + "\n";
    return result;
}

TannerGraph::TannerGraph(size_t n_vars, vector<vector<size_t>> check_neighbors) :
    _n_vars(n_vars),
    _check_adj(std::move(check_neighbors)),
    _var_adj(n_vars)
{
    for (size_t c = 0 ; c < _check_adj.size() ; ++c) {
        auto & adj = _check_adj[c];
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw InputError("check " + to_string(c) + " lists a variable twice");
        if (! adj.empty() && adj.back() >= n_vars)
            throw InputError("check " + to_string(c) + " references variable " + to_string(adj.back())
                    + " out of range for " + to_string(n_vars) + " variables");
        for (auto v : adj)
            _var_adj[v].push_back(c);
        _n_edges += adj.size();
    }
}

ParityCheckMatrix::ParityCheckMatrix(size_t rows, size_t cols) :
    _rows(rows),
    _cols(cols),
    _bits(rows * cols, 0)
{
}

auto stopset::incidence_graph(const Graph & g) -> TannerGraph
{
    vector<vector<size_t>> checks;
    checks.reserve(g.edge_count());
    for (auto & [u, v] : g.edges())
        checks.push_back({ u, v });
    return TannerGraph(g.vertex_count(), std::move(checks));
}

auto stopset::tanner_from_matrix(const ParityCheckMatrix & h) -> TannerGraph
{
    vector<vector<size_t>> checks(h.rows());
    for (size_t j = 0 ; j < h.rows() ; ++j)
        for (size_t i = 0 ; i < h.cols() ; ++i)
            if (h.at(j, i))
                checks[j].push_back(i);
    return TannerGraph(h.cols(), std::move(checks));
}

auto stopset::matrix_from_tanner(const TannerGraph & t) -> ParityCheckMatrix
{
    ParityCheckMatrix h(t.check_count(), t.var_count());
    for (size_t j = 0 ; j < t.check_count() ; ++j)
        for (auto i : t.check_neighbors(j))
            h.set(j, i, true);
    return h;
}

namespace
{
    class LineCursor
    {
    public:
        explicit LineCursor(vector<Line> lines) : _lines(std::move(lines)) { }

        auto next(const char * what) -> const Line &
        {
            if (_pos >= _lines.size())
                throw ParseError(string("unexpected end of input while reading ") + what);
            return _lines[_pos++];
        }

        auto at_end() const -> bool { return _pos >= _lines.size(); }
        auto peek_number() const -> size_t { return _lines[_pos].number; }

    private:
        vector<Line> _lines;
        size_t _pos = 0;
    };

    auto expect_counts(const Line & line, size_t count, const char * what) -> vector<size_t>
    {
        if (line.tokens.size() != count)
            throw ParseError(string("expected ") + to_string(count) + " values for " + what + ", got "
                    + to_string(line.tokens.size()), line.number);
        vector<size_t> values;
        for (auto token : line.tokens)
            values.push_back(parse_index(token, line.number));
        return values;
    }

    auto read_index_list(const Line & line, size_t weight, size_t max_weight, size_t bound, const char * what) -> vector<size_t>
    {
        vector<size_t> indices;
        for (auto token : line.tokens) {
            auto value = parse_index(token, line.number);
            if (value == 0)
                continue;
            if (value > bound)
                throw ParseError(string(what) + " index " + to_string(value) + " exceeds " + to_string(bound), line.number);
            indices.push_back(value - 1);
        }
        if (indices.size() != weight)
            throw ParseError(string(what) + " list has " + to_string(indices.size()) + " entries but weight is "
                    + to_string(weight), line.number);
        if (line.tokens.size() > std::max(weight, max_weight))
            throw ParseError(string(what) + " list is longer than the maximum weight", line.number);
        return indices;
    }
}

auto stopset::parse_alist(string_view text) -> ParityCheckMatrix
{
    LineCursor cursor(split_lines(text, false));

    auto dims = expect_counts(cursor.next("dimensions"), 2, "dimensions");
    auto cols = dims[0], rows = dims[1];
    auto max_weights = expect_counts(cursor.next("maximum weights"), 2, "maximum weights");

    vector<size_t> col_weights, row_weights;
    if (cols > 0)
        col_weights = expect_counts(cursor.next("column weights"), cols, "column weights");
    if (rows > 0)
        row_weights = expect_counts(cursor.next("row weights"), rows, "row weights");

    for (auto w : col_weights)
        if (w > max_weights[0] || w > rows)
            throw ParseError("column weight " + to_string(w) + " exceeds its bound");
    for (auto w : row_weights)
        if (w > max_weights[1] || w > cols)
            throw ParseError("row weight " + to_string(w) + " exceeds its bound");

    // A column or row of weight zero may be written as a line of zeros or omitted entirely
    // when the maximum weight is also zero.
    ParityCheckMatrix from_cols(rows, cols);
    for (size_t i = 0 ; i < cols ; ++i) {
        if (max_weights[0] == 0)
            continue;
        auto & line = cursor.next("column index lists");
        for (auto j : read_index_list(line, col_weights[i], max_weights[0], rows, "column"))
            from_cols.set(j, i, true);
    }

    ParityCheckMatrix from_rows(rows, cols);
    for (size_t j = 0 ; j < rows ; ++j) {
        if (max_weights[1] == 0)
            continue;
        auto & line = cursor.next("row index lists");
        for (auto i : read_index_list(line, row_weights[j], max_weights[1], cols, "row"))
            from_rows.set(j, i, true);
    }

    if (! cursor.at_end())
        throw ParseError("trailing content after the row lists", cursor.peek_number());

    for (size_t i = 0 ; i < cols ; ++i)
        for (size_t j = 0 ; j < rows ; ++j)
            if (from_cols.at(j, i) != from_rows.at(j, i))
                throw ParseError("column and row lists disagree at row " + to_string(j + 1) + ", column " + to_string(i + 1));

    return from_cols;
}

auto stopset::emit_alist(const ParityCheckMatrix & h) -> string
{
    vector<vector<size_t>> col_lists(h.cols()), row_lists(h.rows());
    for (size_t j = 0 ; j < h.rows() ; ++j)
        for (size_t i = 0 ; i < h.cols() ; ++i)
            if (h.at(j, i)) {
                col_lists[i].push_back(j + 1);
                row_lists[j].push_back(i + 1);
            }

    auto max_weight = [] (const vector<vector<size_t>> & lists) {
        size_t result = 0;
        for (auto & l : lists)
            result = std::max(result, l.size());
        return result;
    };
    auto max_col = max_weight(col_lists), max_row = max_weight(row_lists);

    auto join = [] (const vector<size_t> & values) {
        string line;
        for (auto v : values) {
            if (! line.empty())
                line += ' ';
            line += to_string(v);
        }
        return line + "\n";
    };
    auto weights = [] (const vector<vector<size_t>> & lists) {
        vector<size_t> result;
        for (auto & l : lists)
            result.push_back(l.size());
        return result;
    };
    // Lists are zero-padded to the maximum weight, as in MacKay's files.
    auto padded = [] (vector<size_t> list, size_t width) {
        list.resize(width, 0);
        return list;
    };

    string result = to_string(h.cols()) + " " + to_string(h.rows()) + "\n";
    result += to_string(max_col) + " " + to_string(max_row) + "\n";
    if (h.cols() > 0)
        result += join(weights(col_lists));
    if (h.rows() > 0)
        result += join(weights(row_lists));
    if (max_col > 0)
        for (auto & l : col_lists)
            result += join(padded(l, max_col));
    if (max_row > 0)
        for (auto & l : row_lists)
            result += join(padded(l, max_row));
    return result;
}

auto stopset::parse_dense(string_view text) -> ParityCheckMatrix
{
    auto lines = split_lines(text, true);
    if (lines.empty())
        throw ParseError("unexpected end of input while reading dimensions");
    if (lines[0].tokens.size() != 2)
        throw ParseError("header must be 'rows cols'", lines[0].number);
    auto rows = parse_index(lines[0].tokens[0], lines[0].number);
    auto cols = parse_index(lines[0].tokens[1], lines[0].number);

    if (lines.size() - 1 < rows)
        throw ParseError("unexpected end of input: expected " + to_string(rows) + " rows");
    if (lines.size() - 1 > rows)
        throw ParseError("more rows than declared", lines[rows + 1].number);

    ParityCheckMatrix h(rows, cols);
    for (size_t j = 0 ; j < rows ; ++j) {
        auto & line = lines[j + 1];
        if (line.tokens.size() != cols)
            throw ParseError("expected " + to_string(cols) + " entries, got " + to_string(line.tokens.size()), line.number);
        for (size_t i = 0 ; i < cols ; ++i) {
            if (line.tokens[i] == "1")
                h.set(j, i, true);
            else if (line.tokens[i] != "0")
                throw ParseError("entry '" + string(line.tokens[i]) + "' is not 0 or 1", line.number);
        }
    }
    return h;
}

auto stopset::emit_dense(const ParityCheckMatrix & h) -> string
{
    string result = to_string(h.rows()) + " " + to_string(h.cols()) + "\n";
    for (size_t j = 0 ; j < h.rows() ; ++j) {
        for (size_t i = 0 ; i < h.cols() ; ++i) {
            if (i > 0)
                result += ' ';
            result += h.at(j, i) ? '1' : '0';
        }
        result += '\n';
    }
    return result;
}
