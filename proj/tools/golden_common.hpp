#pragma once

/// @file golden_common.hpp
/// @brief Golden-catalog JSON construction shared by gen_catalog and the CLI.
///
/// The committed data file freezes, per entry: registry metadata, the bracket
/// table and tensors at canonical parameters, the expected invariant profile,
/// and the exact Ricci tensor / alpha-Einstein constants when a metric exists.
/// `report-all` recomputes all of it and diffs against the file.

#include <sasakian/catalog.hpp>
#include <sasakian/json_io.hpp>

namespace sasakian {

[[nodiscard]] inline Json params_to_json(const Params& p) {
    Json out = Json::object();
    for (const auto& [k, v] : p) out[k] = rat_str(v);
    return out;
}

[[nodiscard]] inline Json golden_entry(const CatalogEntry& e) {
    Json out;
    out["id"] = e.id;
    out["dim"] = e.dim;
    out["iso_class"] = e.iso_class;
    out["param_names"] = e.param_names;
    out["domain"] = e.domain_doc;
    out["tags"] = e.tags;
    out["canonical"] = params_to_json(e.canonical);
    Json samples = Json::array();
    for (const Params& s : e.samples) samples.push_back(params_to_json(s));
    out["samples"] = samples;

    Params p = resolve_params(e, {});
    LieAlg L = e.algebra(p);
    out["algebra"] = lie_to_json(L);
    if (auto prof = expected_profile(e.iso_class, p)) out["profile"] = profile_to_json(*prof);

    auto S = e.structure(p);
    if (S) {
        out["structure"] = acms_to_json(*S);
        Mat ric = ricci(L, S->g);
        out["ricci"] = mat_to_json(ric);
        auto ein = alpha_einstein(ric, S->g, S->alpha);
        out["einstein"] =
            ein ? Json::array({rat_str(ein->first), rat_str(ein->second)}) : Json();
    } else {
        out["structure"] = Json();
        out["ricci"] = Json();
        out["einstein"] = Json();
    }
    return out;
}

[[nodiscard]] inline Json golden_catalog() {
    Json out;
    out["format"] = 1;
    Json entries = Json::array();
    for (const CatalogEntry& e : Catalog::instance().entries()) entries.push_back(golden_entry(e));
    out["entries"] = entries;
    return out;
}

}  // namespace sasakian
