#include <stopset/json.hh>

using namespace stopset;


auto stopset::to_json(Json & j, const SearchOutcome & outcome) -> void
{
    j = Json{
        { "status", to_string(outcome.status) },
        { "size", outcome.size },
        { "witness", outcome.witness ? Json(outcome.witness->to_string()) : Json(nullptr) },
        { "nodes_explored", outcome.nodes_explored },
        { "exhaustive", outcome.exhaustive }
    };
}

auto stopset::to_json(Json & j, const CoverOutcome & outcome) -> void
{
    j = Json{
        { "status", outcome.found ? "found" : "none" },
        { "size", outcome.size },
        { "witness", outcome.witness ? Json(outcome.witness->to_string()) : Json(nullptr) },
        { "exhaustive", outcome.exhaustive }
    };
}

auto stopset::to_json(Json & j, const PeelResult & result) -> void
{
    j = Json{
        { "success", result.success },
        { "residual", result.residual.to_string() },
        { "residual_size", result.residual.size() },
        { "rounds", result.rounds }
    };
}

auto stopset::to_json(Json & j, const FailureRate & rate) -> void
{
    j = Json{
        { "trials", rate.trials },
        { "failures", rate.failures },
        { "rate", rate.rate },
        { "shards", rate.shards }
    };
}

auto stopset::to_json(Json & j, const StructureReport & report) -> void
{
    j = Json{
        { "columns_consistent", report.columns_consistent },
        { "l0_all_or_nothing", report.l0_all_or_nothing },
        { "l0_contained", report.l0_contained },
        { "equal_layer_counts", report.equal_layer_counts },
        { "layer_counts", report.layer_counts }
    };
}

auto stopset::to_json(Json & j, const VerificationReport & report) -> void
{
    Json rows = Json::array();
    for (auto & row : report.rows)
        rows.push_back({
            { "t", row.t },
            { "cover_exists", row.cover_exists },
            { "stopping_set_exists", row.stopping_set_exists },
            { "equivalent", row.equivalent }
        });
    j = Json{
        { "tau", report.tau },
        { "distance", report.distance },
        { "expected_distance", report.expected_distance },
        { "oracles_agree", report.oracles_agree },
        { "rows", rows },
        { "verdict", report.pass ? "PASS" : "FAIL" }
    };
    if (report.counterexample)
        j["counterexample"] = *report.counterexample;
}

auto stopset::reduction_sidecar(const ReductionInstance & inst) -> Json
{
    Json labels = Json::array();
    auto add = [&] (std::size_t index, const LayerLabel & label) {
        labels.push_back({
            { "index", index },
            { "side", to_string(label.side) },
            { "layer", label.layer },
            { "tag", tag_string(label) }
        });
    };
    for (std::size_t v = 0 ; v < inst.product().var_count() ; ++v)
        add(v, inst.var_label(v));
    for (std::size_t c = 0 ; c < inst.product().check_count() ; ++c)
        add(c, inst.check_label(c));

    return Json{
        { "n", inst.n() },
        { "m", inst.m() },
        { "labels", labels },
        { "size_map", "t*(m+1)+m" }
    };
}
