#ifndef STOPSET_JSON_HH
#define STOPSET_JSON_HH

#include <stopset/decoder.hh>
#include <stopset/oracles.hh>
#include <stopset/reduction.hh>
#include <stopset/stopping.hh>

#include <json.hpp>

namespace stopset
{
    using Json = nlohmann::ordered_json;
}

namespace stopset
{
    // Machine-readable reports. Sets are written in their "0,3,7" text form.

    auto to_json(Json & j, const SearchOutcome & outcome) -> void;
    auto to_json(Json & j, const CoverOutcome & outcome) -> void;
    auto to_json(Json & j, const PeelResult & result) -> void;
    auto to_json(Json & j, const FailureRate & rate) -> void;
    auto to_json(Json & j, const StructureReport & report) -> void;
    auto to_json(Json & j, const VerificationReport & report) -> void;

    /// {"n", "m", "labels": [{"index", "side", "layer", "tag"}...], "size_map"}; variables first, then checks.
    auto reduction_sidecar(const ReductionInstance & inst) -> Json;
}

#endif
