#pragma once

#include <json.hpp>

#include "certificate.hpp"
#include "formulas.hpp"
#include "oracle.hpp"

namespace antiramsey {

using nlohmann::json;

namespace json_detail {

template <typename T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

} // namespace json_detail

inline json to_json(const DerivedQuantities& d) {
    json j = json::object();
    if (d.s) j["s"] = *d.s;
    if (d.r) j["r"] = *d.r;
    if (d.epsilon) j["epsilon"] = *d.epsilon;
    if (d.beta) j["beta"] = *d.beta;
    if (d.coefficient) j["coefficient"] = *d.coefficient;
    if (!d.argmax.empty()) j["argmax"] = d.argmax;
    return j;
}

inline json to_json(const FormulaResult& r) {
    return json{{"family", r.family},
                {"n", r.n},
                {"lower", json_detail::opt(r.lower)},
                {"upper", json_detail::opt(r.upper)},
                {"status", std::string(status_name(r.status))},
                {"source", r.source},
                {"derived", to_json(r.derived)},
                {"note", r.note}};
}

/// Sidecar written next to a generated coloring.
inline json to_json(const ConstructionCertificate& c) {
    return json{{"kind", std::string(certificate_kind_name(c.kind))},
                {"n", c.n},
                {"forest", c.forest},
                {"params",
                 {{"join_size", c.join_size},
                  {"clique_size", c.clique_size},
                  {"palette_cap", c.palette_cap},
                  {"inner_colors", c.inner_colors},
                  {"colors", c.colors},
                  {"branch", c.branch}}},
                {"conditions", c.conditions}};
}

inline ConstructionCertificate certificate_from_json(const json& j) {
    try {
        ConstructionCertificate c;
        c.kind = parse_certificate_kind(j.at("kind").get<std::string>());
        c.n = j.at("n").get<int>();
        c.forest = j.at("forest").get<std::string>();
        const auto& p = j.at("params");
        c.join_size = p.at("join_size").get<int>();
        c.clique_size = p.at("clique_size").get<int>();
        c.palette_cap = p.at("palette_cap").get<int>();
        c.inner_colors = p.at("inner_colors").get<int>();
        c.colors = p.at("colors").get<int>();
        c.branch = p.at("branch").get<int>();
        c.conditions = j.at("conditions").get<std::vector<std::string>>();
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
}

inline json to_json(const SearchOutcome& o, bool with_timing = true) {
    json j{{"value", o.value}, {"status", std::string(search_status_name(o.status))}, {"nodes", o.nodes}};
    if (with_timing) j["elapsed_ms"] = o.elapsed.count();
    if (o.witness) {
        std::vector<Color> colors(o.witness->raw().begin(), o.witness->raw().end());
        j["witness"] = {{"n", o.witness->order()}, {"colors", colors}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

} // namespace antiramsey
