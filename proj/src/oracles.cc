#include <stopset/errors.hh>
#include <stopset/oracles.hh>

#include <bit>

using namespace stopset;

using std::optional;
using std::size_t;
using std::uint64_t;
using std::vector;

auto stopset::is_vertex_cover(const Graph & g, const VarSet & s) -> bool
{
    if (s.universe_size() != g.vertex_count())
        throw InputError("vertex set over universe " + std::to_string(s.universe_size()) + " does not match graph with "
                + std::to_string(g.vertex_count()) + " vertices");
    for (auto & [u, v] : g.edges())
        if (! s.contains(u) && ! s.contains(v))
            return false;
    return true;
}

namespace
{
    /// Edge branching: the first uncovered edge needs one of its endpoints.
    class EdgeBrancher
    {
    public:
        explicit EdgeBrancher(const Graph & g) :
            _g(g),
            _in(g.vertex_count(), false)
        {
        }

        auto solve() -> VarSet
        {
            _best_size = _g.vertex_count() + 1;
            branch(0, 0);
            return _best;
        }

    private:
        auto branch(size_t from_edge, size_t size) -> void
        {
            if (size >= _best_size)
                return;

            auto & edges = _g.edges();
            auto e = from_edge;
            while (e < edges.size() && (_in[edges[e].first] || _in[edges[e].second]))
                ++e;
            if (e == edges.size()) {
                _best_size = size;
                _best = VarSet(_g.vertex_count());
                for (size_t v = 0 ; v < _in.size() ; ++v)
                    if (_in[v])
                        _best.insert(v);
                return;
            }
            if (size + 1 >= _best_size)
                return;

            for (auto v : { edges[e].first, edges[e].second }) {
                _in[v] = true;
                branch(e + 1, size + 1);
                _in[v] = false;
            }
        }

        const Graph & _g;
        vector<bool> _in;
        VarSet _best;
        size_t _best_size = 0;
    };

    /// Vertex-order search for a cover of exactly `size` vertices, members tried
    /// in-first so the first hit is lexicographically smallest. A vertex left out
    /// forces all of its neighbors in.
    class LexCoverSearch
    {
    public:
        LexCoverSearch(const Graph & g, size_t size) :
            _g(g),
            _adj(g.adjacency()),
            _size(size),
            _state(g.vertex_count(), 0)
        {
        }

        auto solve() -> optional<VarSet>
        {
            if (descend(0, 0)) {
                VarSet result(_g.vertex_count());
                for (size_t v = 0 ; v < _state.size() ; ++v)
                    if (_state[v] == 1)
                        result.insert(v);
                return result;
            }
            return std::nullopt;
        }

    private:
        // _state: 0 undecided, 1 in, 2 out
        auto descend(size_t v, size_t chosen) -> bool
        {
            if (chosen > _size)
                return false;
            if (v == _state.size())
                return chosen == _size;

            if (_state[v] == 1)
                return descend(v + 1, chosen);

            _state[v] = 1;
            if (descend(v + 1, chosen + 1))
                return true;

            // Out: every neighbor must be in, and those below v are already decided.
            vector<size_t> forced;
            bool ok = true;
            for (auto w : _adj[v]) {
                if (_state[w] == 2) {
                    ok = false;
                    break;
                }
                if (_state[w] == 0) {
                    _state[w] = 1;
                    forced.push_back(w);
                }
            }
            _state[v] = 2;
            bool found = ok && descend(v + 1, chosen + forced.size());
            if (! found) {
                for (auto w : forced)
                    _state[w] = 0;
                _state[v] = 0;
            }
            return found;
        }

        const Graph & _g;
        vector<vector<size_t>> _adj;
        size_t _size;
        vector<int> _state;
    };
}

auto stopset::min_vertex_cover(const Graph & g, bool canonical) -> CoverOutcome
{
    auto cover = EdgeBrancher(g).solve();
    CoverOutcome outcome{ true, cover.size(), cover, true };
    if (canonical) {
        auto lex = LexCoverSearch(g, cover.size()).solve();
        if (! lex)
            throw InvariantViolation("no canonical cover of the minimum size");
        outcome.witness = lex;
    }
    if (! is_vertex_cover(g, *outcome.witness))
        throw InvariantViolation("minimum cover witness misses an edge");
    return outcome;
}

auto stopset::min_vertex_cover_by_enumeration(const Graph & g) -> CoverOutcome
{
    auto n = g.vertex_count();
    if (n > 30)
        throw InputError("subset enumeration is limited to 30 vertices");

    vector<uint64_t> edge_masks;
    for (auto & [u, v] : g.edges())
        edge_masks.push_back((uint64_t{ 1 } << u) | (uint64_t{ 1 } << v));

    optional<uint64_t> best;
    for (uint64_t s = 0 ; s < (uint64_t{ 1 } << n) ; ++s) {
        bool covers = true;
        for (auto mask : edge_masks)
            if ((s & mask) == 0) {
                covers = false;
                break;
            }
        if (! covers)
            continue;
        if (! best || std::popcount(s) < std::popcount(*best)) {
            best = s;
            continue;
        }
        if (std::popcount(s) == std::popcount(*best)) {
            auto diff = s ^ *best;
            if ((s & (diff & (~diff + 1))) != 0)
                best = s;
        }
    }

    VarSet witness(n);
    for (size_t v = 0 ; v < n ; ++v)
        if ((*best >> v) & 1)
            witness.insert(v);
    return CoverOutcome{ true, witness.size(), witness, true };
}

auto stopset::has_vertex_cover_of_size(const Graph & g, size_t t) -> CoverOutcome
{
    auto n = g.vertex_count();
    if (t > n)
        throw InputError("cover size " + std::to_string(t) + " exceeds the " + std::to_string(n) + " vertices");

    auto minimum = min_vertex_cover(g);
    if (minimum.size > t)
        return CoverOutcome{ false, t, std::nullopt, true };

    auto witness = *minimum.witness;
    for (size_t v = 0 ; v < n && witness.size() < t ; ++v)
        witness.insert(v);
    return CoverOutcome{ true, t, witness, true };
}
