#pragma once

#include "fold/catalog.hpp"
#include "fold/grring.hpp"
#include "fold/homsolve.hpp"

#include <json.hpp>

namespace fold {

using json = nlohmann::ordered_json;

inline json to_json(const Obj& o) {
    return json{{"word", to_string(o.word)}, {"shift", o.shift}};
}

// Canonical morphism serialization: boundary objects, degree and row-major
// entries in the polynomial text syntax.
inline json to_json(const Morphism& m) {
    json entries = json::array();
    for (size_t r = 0; r < m.tgt.rank(); ++r)
        for (size_t c = 0; c < m.src.rank(); ++c) entries.push_back(to_string(m.at(r, c)));
    return json{{"source", to_json(m.src)},
                {"target", to_json(m.tgt)},
                {"degree", m.deg},
                {"entries", entries}};
}

inline json to_json(const SumMor& m) {
    json src = json::array(), tgt = json::array(), blocks = json::array();
    for (const auto& b : m.src.blocks) src.push_back(to_json(b));
    for (const auto& b : m.tgt.blocks) tgt.push_back(to_json(b));
    for (size_t i = 0; i < m.tgt.size(); ++i)
        for (size_t j = 0; j < m.src.size(); ++j) blocks.push_back(to_json(m.at(i, j)));
    return json{{"source", src}, {"target", tgt}, {"degree", m.deg}, {"blocks", blocks}};
}

inline json catalog_entry_json(const Relation& r) {
    return json{{"id", r.id},
                {"lhs", to_text(r.lhs)},
                {"rhs", to_text(r.rhs)},
                {"origin", r.origin},
                {"defining", r.defining}};
}

inline std::string catalog_jsonl(const std::vector<Relation>& catalog) {
    std::string out;
    for (const auto& r : catalog) {
        out += catalog_entry_json(r).dump();
        out += "\n";
    }
    return out;
}

inline Relation relation_from_json(const json& j) {
    Relation r;
    r.id = j.at("id").get<std::string>();
    r.lhs = parse_expr(j.at("lhs").get<std::string>());
    r.rhs = parse_expr(j.at("rhs").get<std::string>());
    r.origin = j.value("origin", "");
    r.defining = j.value("defining", false);
    if (r.lhs->src != r.rhs->src || r.lhs->tgt != r.rhs->tgt)
        throw std::invalid_argument("relation " + r.id + ": sides have different boundaries");
    return r;
}

// The transcription of the generator evaluation table, for golden-file
// review: every generator with its boundary words, degree, and full matrix.
inline json generator_table_json() {
    json out = json::array();
    for (const auto& info : generator_table()) {
        EqMor m = eval_generator(info.name);
        out.push_back(json{{"token", info.token},
                           {"source", to_string(info.src)},
                           {"target", to_string(info.tgt)},
                           {"degree", info.degree},
                           {"image", to_json(m.map)}});
    }
    return out;
}

inline json to_json(const LaurentInt& p) { return to_string(p); }

}  // namespace fold
