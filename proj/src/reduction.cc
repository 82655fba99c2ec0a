#include <stopset/errors.hh>
#include <stopset/oracles.hh>
#include <stopset/reduction.hh>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

using namespace stopset;

using std::size_t;
using std::string;
using std::vector;

auto stopset::tag_string(const LayerLabel & label) -> string
{
    switch (label.kind) {
        case TagKind::vertex: return "v" + std::to_string(label.tag);
        case TagKind::edge: return "e" + std::to_string(label.tag);
        case TagKind::chain: return "z" + std::to_string(label.tag);
    }
    return "?";
}

auto stopset::to_string(Side side) -> string
{
    return side == Side::left ? "left" : "right";
}

ReductionInstance::ReductionInstance(Graph source) :
    _source(std::move(source)),
    _n(_source.vertex_count()),
    _m(_source.edge_count())
{
    if (_m == 0)
        throw InputError("reduction requires at least one edge");
    if (! is_connected(_source))
        throw InputError("reduction requires connected input");

    auto n_vars = _m + _n * (_m + 1);
    auto n_checks = (_m - 1) + _m + _n * _m;

    _var_labels.reserve(n_vars);
    for (size_t e = 0 ; e < _m ; ++e)
        _var_labels.push_back({ Side::left, 0, TagKind::edge, e });
    for (size_t layer = 1 ; layer <= _m + 1 ; ++layer)
        for (size_t u = 0 ; u < _n ; ++u)
            _var_labels.push_back({ Side::left, layer, TagKind::vertex, u });

    _check_labels.reserve(n_checks);
    for (size_t i = 1 ; i < _m ; ++i)
        _check_labels.push_back({ Side::right, 0, TagKind::chain, i });
    for (size_t e = 0 ; e < _m ; ++e)
        _check_labels.push_back({ Side::right, 1, TagKind::edge, e });
    for (size_t layer = 2 ; layer <= _m + 1 ; ++layer)
        for (size_t u = 0 ; u < _n ; ++u)
            _check_labels.push_back({ Side::right, layer, TagKind::vertex, u });

    vector<vector<size_t>> checks(n_checks);

    // u_i^l -- u_i^r for 2 <= i <= m+1
    for (size_t i = 2 ; i <= _m + 1 ; ++i)
        for (size_t u = 0 ; u < _n ; ++u)
            checks[vertex_check(u, i)].push_back(vertex_var(u, i));

    // u_i^l -- u_{i+1}^r for 1 <= i <= m
    for (size_t i = 1 ; i <= _m ; ++i)
        for (size_t u = 0 ; u < _n ; ++u)
            checks[vertex_check(u, i + 1)].push_back(vertex_var(u, i));

    // e in R_1 -- its endpoints in L_1, and e in L_0 -- e in R_1
    for (size_t e = 0 ; e < _m ; ++e) {
        auto [u, v] = _source.edges()[e];
        checks[edge_check(e)].push_back(vertex_var(u, 1));
        checks[edge_check(e)].push_back(vertex_var(v, 1));
        checks[edge_check(e)].push_back(edge_var(e));
    }

    // L_0 chain through R_0, with e_i the i-th edge in canonical order:
    // (e_i, z_i) for 1 <= i <= m-1 and (e_i, z_{i-1}) for 2 <= i <= m
    for (size_t i = 1 ; i + 1 <= _m ; ++i)
        checks[chain_check(i)].push_back(edge_var(i - 1));
    for (size_t i = 2 ; i <= _m ; ++i)
        checks[chain_check(i - 1)].push_back(edge_var(i - 1));

    _product = TannerGraph(n_vars, std::move(checks));
}

auto ReductionInstance::vertex_var(size_t vertex, size_t layer) const -> size_t
{
    return _m + (layer - 1) * _n + vertex;
}

auto ReductionInstance::vertex_check(size_t vertex, size_t layer) const -> size_t
{
    return (_m - 1) + _m + (layer - 2) * _n + vertex;
}

auto ReductionInstance::l0() const -> VarSet
{
    VarSet result(_product.var_count());
    for (size_t e = 0 ; e < _m ; ++e)
        result.insert(edge_var(e));
    return result;
}

auto stopset::build_reduction(const Graph & g) -> ReductionInstance
{
    return ReductionInstance(g);
}

auto stopset::target_size(size_t t, const ReductionInstance & inst) -> size_t
{
    if (t < 1 || t + 1 > inst.n())
        throw InputError("t=" + std::to_string(t) + " outside [1, " + std::to_string(inst.n()) + "-1]");
    return t * (inst.m() + 1) + inst.m();
}

auto stopset::cover_to_stopping_set(const ReductionInstance & inst, const VarSet & cover) -> VarSet
{
    auto & g = inst.source();
    if (cover.universe_size() != g.vertex_count())
        throw InputError("cover is not over the source graph's vertices");
    for (auto & [u, v] : g.edges())
        if (! cover.contains(u) && ! cover.contains(v))
            throw InputError("not a vertex cover: edge (" + std::to_string(u) + "," + std::to_string(v) + ") uncovered");
    auto size = target_size(cover.size(), inst);

    auto result = inst.l0();
    for (auto u : cover.members())
        for (size_t layer = 1 ; layer <= inst.m() + 1 ; ++layer)
            result.insert(inst.vertex_var(u, layer));

    if (result.size() != size || ! is_stopping_set(inst.product(), result))
        throw InvariantViolation("image of a " + std::to_string(cover.size()) + "-cover is not a stopping set of size " + std::to_string(size));
    return result;
}

auto stopset::stopping_set_to_cover(const ReductionInstance & inst, const VarSet & s) -> VarSet
{
    auto n = inst.n(), m = inst.m();
    if (s.universe_size() != inst.product().var_count())
        throw InputError("set is not over the reduction's variables");
    if (! is_stopping_set(inst.product(), s))
        throw InputError("not a stopping set: some check has exactly one neighbor in {" + s.to_string() + "}");
    if (s.empty())
        throw InputError("the empty set corresponds to no cover");
    if (s.size() >= n * (m + 1))
        throw InputError("stopping set of size " + std::to_string(s.size()) + " is outside the lemma's hypothesis (< "
                + std::to_string(n * (m + 1)) + ")");

    VarSet cover(n);
    for (auto v : s.members()) {
        auto & label = inst.var_label(v);
        if (label.kind == TagKind::vertex)
            cover.insert(label.tag);
    }

    auto t = cover.size();
    if (! inst.l0().is_subset_of(s))
        throw InvariantViolation("reduction invariant violated: stopping set misses part of L_0");
    if (t < 1 || t + 1 > n || s.size() != t * (m + 1) + m)
        throw InvariantViolation("reduction invariant violated: size " + std::to_string(s.size()) + " is not t(m+1)+m for t="
                + std::to_string(t));
    if (! is_vertex_cover(inst.source(), cover))
        throw InvariantViolation("reduction invariant violated: extracted set {" + cover.to_string() + "} is not a vertex cover");
    return cover;
}

auto stopset::check_structure(const ReductionInstance & inst, const VarSet & s) -> StructureReport
{
    if (s.universe_size() != inst.product().var_count() || ! is_stopping_set(inst.product(), s))
        throw InputError("not a stopping set of the reduction's product graph");

    auto n = inst.n(), m = inst.m();
    StructureReport report;

    report.columns_consistent = true;
    for (size_t u = 0 ; u < n ; ++u) {
        size_t copies = 0;
        for (size_t layer = 1 ; layer <= m + 1 ; ++layer)
            copies += s.contains(inst.vertex_var(u, layer)) ? 1 : 0;
        if (copies != 0 && copies != m + 1)
            report.columns_consistent = false;
    }

    size_t in_l0 = 0;
    for (size_t e = 0 ; e < m ; ++e)
        in_l0 += s.contains(inst.edge_var(e)) ? 1 : 0;
    report.l0_contained = in_l0 == m;
    report.l0_all_or_nothing = in_l0 == 0 || in_l0 == m;

    for (size_t layer = 1 ; layer <= m + 1 ; ++layer) {
        size_t count = 0;
        for (size_t u = 0 ; u < n ; ++u)
            count += s.contains(inst.vertex_var(u, layer)) ? 1 : 0;
        report.layer_counts.push_back(count);
    }
    report.equal_layer_counts = std::all_of(report.layer_counts.begin(), report.layer_counts.end(),
            [&] (size_t c) { return c == report.layer_counts.front(); });
    return report;
}

auto stopset::verify_corollaries(const Graph & g, unsigned workers) -> VerificationReport
{
    auto inst = build_reduction(g);
    auto n = inst.n(), m = inst.m();

    VerificationReport report;
    auto minimum = min_vertex_cover(g);
    report.tau = minimum.size;
    if (n <= 20)
        report.oracles_agree = min_vertex_cover_by_enumeration(g).size == minimum.size;

    SearchOptions options;
    options.workers = 1;

    report.rows.resize(n - 1);
    auto evaluate = [&] (size_t t) {
        auto & row = report.rows[t - 1];
        row.t = t;
        row.cover_exists = has_vertex_cover_of_size(g, t).found;
        auto outcome = has_stopping_set_of_size(inst.product(), target_size(t, inst), options);
        row.stopping_set_exists = outcome.status == SearchStatus::found;
        if (! outcome.exhaustive)
            throw InvariantViolation("exact-size search did not complete");
        row.equivalent = row.cover_exists == row.stopping_set_exists;
    };

    if (workers <= 1)
        for (size_t t = 1 ; t < n ; ++t)
            evaluate(t);
    else {
        std::atomic<size_t> next{ 1 };
        std::exception_ptr failure;
        std::mutex failure_mutex;
        vector<std::thread> threads;
        for (unsigned w = 0 ; w < workers ; ++w)
            threads.emplace_back([&] {
                for (auto t = next.fetch_add(1) ; t < n ; t = next.fetch_add(1)) {
                    try {
                        evaluate(t);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_mutex);
                        failure = std::current_exception();
                    }
                }
            });
        for (auto & thread : threads)
            thread.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    auto distance = stopping_distance(inst.product(), options);
    report.distance = distance.size;
    report.expected_distance = report.tau * (m + 1) + m;

    report.pass = report.oracles_agree && distance.status == SearchStatus::found && distance.exhaustive
        && report.distance == report.expected_distance
        && std::all_of(report.rows.begin(), report.rows.end(), [] (const VerificationRow & r) { return r.equivalent; });
    if (! report.pass)
        report.counterexample = emit_graph(g);
    return report;
}
