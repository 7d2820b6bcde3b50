#pragma once

#include <json.hpp>

#include "mvlogic/principles.hpp"

namespace mvl {

inline nlohmann::json to_json(const Valuation& v) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [var, val] : v.assignment())
        j["X" + std::to_string(var)] = val.str();
    return j;
}

inline nlohmann::json to_json(const PrincipleReport& r) {
    nlohmann::json j;
    j["principle"] = principle_name(r.principle);
    j["algebra"] = r.algebra;
    j["verdict"] = verdict_name(r.verdict);
    j["n_vars"] = r.n_vars;
    j["depth"] = r.depth;
    nlohmann::json w = nlohmann::json::object();
    if (r.alpha) w["alpha"] = render_formula(*r.alpha);
    if (r.beta) w["beta"] = render_formula(*r.beta);
    if (r.valuation) w["valuation"] = to_json(*r.valuation);
    if (r.mu) w["mu"] = to_json(*r.mu);
    if (r.nu) w["nu"] = to_json(*r.nu);
    j["witness"] = w;
    j["separator"] = r.separator ? nlohmann::json(render_formula(*r.separator))
                                 : nlohmann::json(nullptr);
    j["pairs_checked"] = r.pairs_checked;
    j["notes"] = r.notes;
    return j;
}

inline nlohmann::json to_json(const Classification& c) {
    nlohmann::json j;
    j["verdict"] = classification_name(c.verdict);
    j["non_idempotent"] =
        c.non_idempotent ? nlohmann::json(c.non_idempotent->str()) : nullptr;
    j["negneg_witness"] =
        c.negneg_witness ? nlohmann::json(c.negneg_witness->str()) : nullptr;
    j["decomposition"] = c.decomposition;
    return j;
}

} // namespace mvl
