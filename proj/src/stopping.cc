#include <stopset/errors.hh>
#include <stopset/stopping.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>

using namespace stopset;

using std::atomic;
using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace
{
    auto check_universe(const TannerGraph & t, const VarSet & s) -> void
    {
        if (s.universe_size() != t.var_count())
            throw InputError("variable set over universe " + std::to_string(s.universe_size()) + " does not match Tanner graph with "
                    + std::to_string(t.var_count()) + " variables");
    }
}

auto stopset::neighborhood(const TannerGraph & t, const VarSet & s) -> VarSet
{
    check_universe(t, s);
    VarSet result(t.check_count());
    for (auto v : s.members())
        for (auto c : t.var_neighbors(v))
            result.insert(c);
    return result;
}

auto stopset::is_stopping_set(const TannerGraph & t, const VarSet & s) -> bool
{
    check_universe(t, s);
    vector<unsigned> hits(t.check_count(), 0);
    for (auto v : s.members())
        for (auto c : t.var_neighbors(v))
            ++hits[c];
    return std::none_of(hits.begin(), hits.end(), [] (unsigned h) { return h == 1; });
}

auto stopset::for_each_stopping_set(const TannerGraph & t, size_t max_size,
        const std::function<void (const VarSet &)> & callback) -> void
{
    auto n = t.var_count();
    if (n > max_enumeration_vars)
        throw InputError("enumeration is limited to " + std::to_string(max_enumeration_vars) + " variables, graph has " + std::to_string(n));

    vector<uint64_t> check_masks;
    for (size_t c = 0 ; c < t.check_count() ; ++c) {
        uint64_t mask = 0;
        for (auto v : t.check_neighbors(c))
            mask |= uint64_t{ 1 } << v;
        if (mask != 0)
            check_masks.push_back(mask);
    }
    // Checks touching many variables reject random subsets soonest.
    std::sort(check_masks.begin(), check_masks.end(), [] (uint64_t a, uint64_t b) {
        return std::popcount(a) > std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b);
    });

    vector<uint64_t> found;
    uint64_t end = uint64_t{ 1 } << n;
    for (uint64_t s = 1 ; s < end ; ++s) {
        if (static_cast<size_t>(std::popcount(s)) > max_size)
            continue;
        bool ok = true;
        for (auto mask : check_masks)
            if (std::has_single_bit(s & mask)) {
                ok = false;
                break;
            }
        if (ok)
            found.push_back(s);
    }

    std::sort(found.begin(), found.end(), [] (uint64_t a, uint64_t b) {
        auto pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb)
            return pa < pb;
        // Equal sizes: the set holding the lowest differing index comes first.
        auto diff = a ^ b;
        return (a & (diff & (~diff + 1))) != 0;
    });

    for (auto s : found) {
        VarSet set(n);
        for (auto bits = s ; bits != 0 ; bits &= bits - 1)
            set.insert(static_cast<size_t>(std::countr_zero(bits)));
        callback(set);
    }
}

auto stopset::enumerate_stopping_sets(const TannerGraph & t, size_t max_size) -> vector<VarSet>
{
    vector<VarSet> result;
    for_each_stopping_set(t, max_size, [&] (const VarSet & s) { result.push_back(s); });
    return result;
}

auto stopset::to_string(SearchStatus status) -> string
{
    switch (status) {
        case SearchStatus::found: return "found";
        case SearchStatus::none_within_budget: return "none-within-budget";
    }
    return "unknown";
}

namespace
{
    enum class Value : std::uint8_t
    {
        undecided,
        in,
        out
    };

    enum class Branching
    {
        most_constrained_check,
        lowest_index
    };

    /// State shared by every worker of one search.
    struct Shared
    {
        atomic<size_t> bound;            ///< distance mode: sizes >= bound are pruned
        atomic<bool> stop{ false };
        atomic<bool> limit_hit{ false };
        atomic<uint64_t> nodes{ 0 };
        optional<uint64_t> node_limit;

        std::mutex witness_mutex;
        optional<VarSet> witness;
        size_t witness_root = std::numeric_limits<size_t>::max();

        explicit Shared(size_t initial_bound) : bound(initial_bound) { }
    };

    /**
     * Three-valued assignment over the variables with per-check counters and
     * an undo trail. Propagation on a check with one undecided neighbor:
     * one "in" neighbor forces it in, no "in" neighbor forces it out. A check
     * with one "in" neighbor and nothing undecided is a conflict.
     */
    class Searcher
    {
    public:
        enum class Mode
        {
            distance,
            exact
        };

        Searcher(const TannerGraph & t, Mode mode, size_t target, Branching branching, Shared & shared) :
            _t(t),
            _mode(mode),
            _target(target),
            _branching(branching),
            _shared(shared),
            _value(t.var_count(), Value::undecided),
            _in_count(t.check_count(), 0),
            _undecided_count(t.check_count(), 0),
            _stamp(t.var_count(), 0),
            _undecided_total(t.var_count())
        {
            for (size_t c = 0 ; c < t.check_count() ; ++c)
                _undecided_count[c] = static_cast<unsigned>(t.check_neighbors(c).size());
        }

        auto nodes() const -> uint64_t { return _nodes; }

        /// Solve every set whose smallest member is `root`. Roots must be
        /// visited in increasing order by a given Searcher.
        auto run_root(size_t root) -> void
        {
            // Excluding lower roots never conflicts: no check has an "in" neighbor yet,
            // so propagation can only force further variables out.
            for ( ; _next_out < root ; ++_next_out) {
                if (_value[_next_out] == Value::undecided)
                    assign(_next_out, Value::out);
                propagate();
            }
            if (_value[root] == Value::out)
                return;

            _current_root = root;
            auto mark = _trail.size();
            assign(root, Value::in);
            if (propagate())
                search();
            undo(mark);
        }

    private:
        auto assign(size_t v, Value value) -> void
        {
            _value[v] = value;
            _trail.push_back(v);
            --_undecided_total;
            if (value == Value::in)
                ++_in_total;
            for (auto c : _t.var_neighbors(v)) {
                --_undecided_count[c];
                if (value == Value::in)
                    ++_in_count[c];
                _queue.push_back(c);
            }
        }

        auto undo(size_t mark) -> void
        {
            while (_trail.size() > mark) {
                auto v = _trail.back();
                _trail.pop_back();
                auto value = _value[v];
                for (auto c : _t.var_neighbors(v)) {
                    ++_undecided_count[c];
                    if (value == Value::in)
                        --_in_count[c];
                }
                if (value == Value::in)
                    --_in_total;
                ++_undecided_total;
                _value[v] = Value::undecided;
            }
        }

        auto propagate() -> bool
        {
            while (! _queue.empty()) {
                auto c = _queue.back();
                _queue.pop_back();
                auto in = _in_count[c], undecided = _undecided_count[c];
                if (in == 1 && undecided == 0) {
                    _queue.clear();
                    return false;
                }
                if (undecided == 1 && in <= 1) {
                    for (auto v : _t.check_neighbors(c))
                        if (_value[v] == Value::undecided) {
                            assign(v, in == 1 ? Value::in : Value::out);
                            break;
                        }
                }
            }
            return true;
        }

        auto count_node() -> bool
        {
            ++_nodes;
            if (_shared.node_limit) {
                if (_shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > *_shared.node_limit) {
                    _shared.limit_hit = true;
                    _shared.stop = true;
                    return false;
                }
            }
            return ! _shared.stop.load(std::memory_order_relaxed);
        }

        /// Violated checks each need one more "in" neighbor; a greedy packing of
        /// them with disjoint undecided neighborhoods gives that many extra members.
        auto extra_lower_bound(const vector<size_t> & violated) -> size_t
        {
            ++_epoch;
            size_t extra = 0;
            for (auto c : violated) {
                bool disjoint = true;
                for (auto v : _t.check_neighbors(c))
                    if (_value[v] == Value::undecided && _stamp[v] == _epoch) {
                        disjoint = false;
                        break;
                    }
                if (! disjoint)
                    continue;
                ++extra;
                for (auto v : _t.check_neighbors(c))
                    if (_value[v] == Value::undecided)
                        _stamp[v] = _epoch;
            }
            return extra;
        }

        auto record_solution() -> void
        {
            VarSet witness(_t.var_count());
            for (size_t v = 0 ; v < _value.size() ; ++v)
                if (_value[v] == Value::in)
                    witness.insert(v);

            std::lock_guard lock(_shared.witness_mutex);
            if (_mode == Mode::distance) {
                auto size = witness.size();
                if (! _shared.witness || size < _shared.witness->size()
                        || (size == _shared.witness->size() && _current_root < _shared.witness_root)) {
                    _shared.witness = std::move(witness);
                    _shared.witness_root = _current_root;
                }
                size_t bound = _shared.bound.load();
                while (size < bound && ! _shared.bound.compare_exchange_weak(bound, size))
                    ;
            }
            else {
                if (! _shared.witness || _current_root < _shared.witness_root) {
                    _shared.witness = std::move(witness);
                    _shared.witness_root = _current_root;
                }
                _shared.stop = true;
            }
        }

        auto search() -> void
        {
            if (! count_node())
                return;

            if (_mode == Mode::distance && _in_total >= _shared.bound.load(std::memory_order_relaxed))
                return;
            if (_mode == Mode::exact && (_in_total > _target || _in_total + _undecided_total < _target))
                return;

            vector<size_t> violated;
            size_t best_check = 0;
            unsigned best_undecided = std::numeric_limits<unsigned>::max();
            for (size_t c = 0 ; c < _t.check_count() ; ++c)
                if (_in_count[c] == 1) {
                    violated.push_back(c);
                    if (_undecided_count[c] < best_undecided) {
                        best_undecided = _undecided_count[c];
                        best_check = c;
                    }
                }

            optional<size_t> branch_var;
            if (violated.empty()) {
                if (_mode == Mode::distance || _in_total == _target) {
                    record_solution();
                    return;
                }
            }
            else {
                auto lower = _in_total + extra_lower_bound(violated);
                if (_mode == Mode::distance && lower >= _shared.bound.load(std::memory_order_relaxed))
                    return;
                if (_mode == Mode::exact && lower > _target)
                    return;
                if (_branching == Branching::most_constrained_check)
                    for (auto v : _t.check_neighbors(best_check))
                        if (_value[v] == Value::undecided) {
                            branch_var = v;
                            break;
                        }
            }

            if (! branch_var) {
                for (size_t v = 0 ; v < _value.size() ; ++v)
                    if (_value[v] == Value::undecided) {
                        branch_var = v;
                        break;
                    }
                if (! branch_var)
                    return;
            }

            for (auto value : { Value::in, Value::out }) {
                auto mark = _trail.size();
                assign(*branch_var, value);
                if (propagate())
                    search();
                undo(mark);
                if (_shared.stop.load(std::memory_order_relaxed))
                    return;
            }
        }

        const TannerGraph & _t;
        Mode _mode;
        size_t _target;
        Branching _branching;
        Shared & _shared;

        vector<Value> _value;
        vector<unsigned> _in_count;
        vector<unsigned> _undecided_count;
        vector<size_t> _trail;
        vector<size_t> _queue;
        vector<uint64_t> _stamp;
        uint64_t _epoch = 0;

        size_t _in_total = 0;
        size_t _undecided_total;
        size_t _next_out = 0;
        size_t _current_root = 0;
        uint64_t _nodes = 0;
    };

    struct RawOutcome
    {
        optional<VarSet> witness;
        uint64_t nodes = 0;
        bool limit_hit = false;
    };

    auto run_search(const TannerGraph & t, Searcher::Mode mode, size_t target, size_t initial_bound,
            Branching branching, const SearchOptions & options) -> RawOutcome
    {
        Shared shared(initial_bound);
        shared.node_limit = options.node_limit;

        auto n = t.var_count();
        unsigned workers = std::max(1u, options.workers);
        uint64_t nodes = 0;

        if (workers == 1 || n < 2) {
            Searcher searcher(t, mode, target, branching, shared);
            for (size_t root = 0 ; root < n && ! shared.stop ; ++root)
                searcher.run_root(root);
            nodes = searcher.nodes();
        }
        else {
            atomic<size_t> next_root{ 0 };
            std::mutex nodes_mutex;
            vector<std::thread> threads;
            for (unsigned w = 0 ; w < workers ; ++w)
                threads.emplace_back([&] {
                    Searcher searcher(t, mode, target, branching, shared);
                    while (! shared.stop) {
                        auto root = next_root.fetch_add(1);
                        if (root >= n)
                            break;
                        searcher.run_root(root);
                    }
                    std::lock_guard lock(nodes_mutex);
                    nodes += searcher.nodes();
                });
            for (auto & thread : threads)
                thread.join();
        }

        return RawOutcome{ std::move(shared.witness), nodes, shared.limit_hit.load() };
    }

    auto verified(const TannerGraph & t, const VarSet & witness, size_t size) -> const VarSet &
    {
        if (witness.size() != size || ! is_stopping_set(t, witness))
            throw InvariantViolation("search returned an invalid witness {" + witness.to_string() + "}");
        return witness;
    }
}

auto stopset::stopping_distance(const TannerGraph & t, const SearchOptions & options) -> SearchOutcome
{
    auto n = t.var_count();
    auto limit = options.max_size ? std::min(*options.max_size, n) : n;

    SearchOutcome outcome;
    auto raw = run_search(t, Searcher::Mode::distance, 0, limit + 1, Branching::most_constrained_check, options);
    outcome.nodes_explored = raw.nodes;
    outcome.exhaustive = ! raw.limit_hit;

    if (raw.witness) {
        outcome.status = SearchStatus::found;
        outcome.size = raw.witness->size();
        outcome.witness = raw.witness;

        if (options.canonical && outcome.exhaustive) {
            SearchOptions serial = options;
            serial.workers = 1;
            auto lex = run_search(t, Searcher::Mode::exact, outcome.size, 0, Branching::lowest_index, serial);
            outcome.nodes_explored += lex.nodes;
            if (! lex.witness)
                throw InvariantViolation("canonical re-search found no set of the optimal size");
            outcome.witness = lex.witness;
        }
        verified(t, *outcome.witness, outcome.size);
    }
    return outcome;
}

auto stopset::has_stopping_set_of_size(const TannerGraph & t, size_t size, const SearchOptions & options) -> SearchOutcome
{
    if (size > t.var_count())
        throw InputError("size " + std::to_string(size) + " exceeds the " + std::to_string(t.var_count()) + " variables");

    SearchOutcome outcome;
    if (size == 0) {
        outcome.status = SearchStatus::found;
        outcome.witness = VarSet(t.var_count());
        outcome.exhaustive = true;
        return outcome;
    }

    SearchOptions effective = options;
    if (options.canonical)
        effective.workers = 1;
    auto raw = run_search(t, Searcher::Mode::exact, size, 0,
            options.canonical ? Branching::lowest_index : Branching::most_constrained_check, effective);
    outcome.nodes_explored = raw.nodes;

    if (raw.witness) {
        outcome.status = SearchStatus::found;
        outcome.size = size;
        outcome.witness = raw.witness;
        outcome.exhaustive = true;
        verified(t, *outcome.witness, size);
    }
    else {
        outcome.size = size;
        outcome.exhaustive = ! raw.limit_hit;
    }
    return outcome;
}
