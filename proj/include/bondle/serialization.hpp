#pragma once
// JSON interchange: algebra tables, move scripts, diagram dumps, battery
// configuration. All emitted documents carry "schema": 1.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "algebra.hpp"
#include "diagram.hpp"
#include "rewrite.hpp"

namespace bondle {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

// ---- algebra tables -------------------------------------------------------

inline Json table_to_json(const FiniteQuandle& q, const BondMaps& m) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["order"] = q.order;
    j["op"] = q.op;
    j["inv_op"] = q.inv_op;
    j["R1"] = m.R1;
    j["R2"] = m.R2;
    if (m.has_R3()) j["R3"] = m.R3;
    return j;
}

inline std::pair<FiniteQuandle, BondMaps> table_from_json(const Json& j) {
    FiniteQuandle q;
    BondMaps m;
    q.order = j.at("order").get<int>();
    q.op = j.at("op").get<Table>();
    q.inv_op = j.at("inv_op").get<Table>();
    if (j.contains("R1")) m.R1 = j.at("R1").get<Table>();
    if (j.contains("R2")) m.R2 = j.at("R2").get<Table>();
    if (j.contains("R3")) m.R3 = j.at("R3").get<Table>();
    return {std::move(q), std::move(m)};
}

// ---- axiom reports --------------------------------------------------------

inline Json report_to_json(const AxiomReport& rep) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["pass"] = rep.pass();
    Json v = Json::array();
    for (const auto& viol : rep.violations) {
        Json w;
        w["relation"] = viol.relation;
        Json witness = Json::array();
        for (int x : viol.witness)
            if (x >= 0) witness.push_back(x);
        w["witness"] = witness;
        v.push_back(w);
    }
    j["violations"] = v;
    return j;
}

// ---- move scripts ---------------------------------------------------------

inline MoveSpec movespec_from_json(const Json& j) {
    MoveSpec s;
    const std::string t = j.at("move").get<std::string>();
    using T = MoveSpec::Type;
    if (t == "I_insert") s.type = T::I_insert;
    else if (t == "I_remove") s.type = T::I_remove;
    else if (t == "II_insert") s.type = T::II_insert;
    else if (t == "II_remove") s.type = T::II_remove;
    else if (t == "III") s.type = T::III;
    else if (t == "IV") s.type = T::IV;
    else if (t == "V") s.type = T::V;
    else if (t == "VI") s.type = T::VI;
    else if (t == "VII") s.type = T::VII;
    else throw std::invalid_argument("unknown move type '" + t + "'");
    if (j.contains("at")) s.at = j["at"].get<int>();
    if (j.contains("at2")) s.at2 = j["at2"].get<int>();
    if (j.contains("at3")) s.at3 = j["at3"].get<int>();
    if (j.contains("label")) s.label = j["label"].get<int>();
    if (j.contains("sign")) s.sign = j["sign"].get<int>();
    if (j.contains("under_first")) s.under_first = j["under_first"].get<bool>();
    if (j.contains("over_pair_first")) s.over_pair_first = j["over_pair_first"].get<bool>();
    if (j.contains("swap_under")) s.swap_under = j["swap_under"].get<bool>();
    if (j.contains("insert")) s.insert = j["insert"].get<bool>();
    if (j.contains("direction")) s.insert = j["direction"].get<std::string>() == "insert";
    if (j.contains("backward")) s.backward = j["backward"].get<bool>();
    return s;
}

inline Json movespec_to_json(const MoveSpec& s) {
    Json j;
    using T = MoveSpec::Type;
    switch (s.type) {
        case T::I_insert: j["move"] = "I_insert"; break;
        case T::I_remove: j["move"] = "I_remove"; break;
        case T::II_insert: j["move"] = "II_insert"; break;
        case T::II_remove: j["move"] = "II_remove"; break;
        case T::III: j["move"] = "III"; break;
        case T::IV: j["move"] = "IV"; break;
        case T::V: j["move"] = "V"; break;
        case T::VI: j["move"] = "VI"; break;
        case T::VII: j["move"] = "VII"; break;
    }
    if (s.at >= 0) j["at"] = s.at;
    if (s.at2 >= 0) j["at2"] = s.at2;
    if (s.at3 >= 0) j["at3"] = s.at3;
    if (s.label >= 0) j["label"] = s.label;
    j["sign"] = s.sign;
    if (s.type == T::I_insert || s.type == T::VII) j["under_first"] = s.under_first;
    if (s.type == T::II_insert) {
        j["over_pair_first"] = s.over_pair_first;
        j["swap_under"] = s.swap_under;
    }
    if (s.type == T::VII) j["direction"] = s.insert ? "insert" : "remove";
    if (s.type == T::IV) j["backward"] = s.backward;
    return j;
}

inline Json trace_to_json(const RewriteTrace& trace) {
    Json j;
    j["schema"] = kSchemaVersion;
    std::ostringstream ih;
    ih << std::hex << trace.initial_hash;
    j["initial_hash"] = ih.str();
    Json steps = Json::array();
    for (const TraceStep& st : trace.steps) {
        Json s;
        s["spec"] = movespec_to_json(st.spec);
        std::ostringstream h;
        h << std::hex << st.code_hash;
        s["hash"] = h.str();
        steps.push_back(s);
    }
    j["steps"] = steps;
    return j;
}

// ---- diagram dumps --------------------------------------------------------

inline Json diagram_to_json(const Diagram& d) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["arc_count"] = d.arc_count;
    Json sites = Json::array();
    for (const auto& c : d.crossings)
        sites.push_back({{"type", "crossing"},
                         {"label", c.label},
                         {"sign", c.sign},
                         {"over_arc", c.over_arc},
                         {"under_in", c.under_in},
                         {"under_out", c.under_out}});
    for (const auto& b : d.bonds)
        sites.push_back({{"type", "bond"},
                         {"label", b.label},
                         {"parallel", b.parallel},
                         {"first_in", b.first_in},
                         {"first_out", b.first_out},
                         {"second_in", b.second_in},
                         {"second_out", b.second_out}});
    for (const auto& s : d.sheets) {
        Json occ = Json::array();
        for (const auto& o : s.occurrences)
            occ.push_back({{"arc_in", o.arc_in},
                           {"arc_out", o.arc_out},
                           {"sign", o.sign},
                           {"strand_index", o.strand_index}});
        sites.push_back({{"type", "sheet"}, {"label", s.label}, {"occurrences", occ}});
    }
    for (const auto& h : d.helices)
        sites.push_back(
            {{"type", "helix"}, {"label", h.label}, {"sign", h.sign}, {"arc", h.arc}});
    j["sites"] = sites;
    return j;
}

// ---- battery specifications ----------------------------------------------

// Spec forms: {"type":"affine","n":15,"a":8,"b":2,"m":6}
//             {"type":"d4","family":1,"n_param":1,"r3":"x2y-1"|"x-1y2"}
//             {"type":"file","path":"table.json"}
inline Bondle bondle_from_spec(const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    Bondle out;
    if (type == "affine") {
        const long n = j.at("n").get<long>();
        const long a = j.at("a").get<long>();
        const long b = j.at("b").get<long>();
        if (j.contains("m")) {
            const long m = j.at("m").get<long>();
            auto [q, maps] = affine_bondle(n, a, b, m);
            out.q = std::move(q);
            out.maps = std::move(maps);
            out.name = "affine(" + std::to_string(n) + "," + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(m) + ")";
        } else {
            auto [q, maps] = affine_singquandle(n, a, b);
            out.q = std::move(q);
            out.maps = std::move(maps);
            out.name = "affine(" + std::to_string(n) + "," + std::to_string(a) + "," +
                       std::to_string(b) + ")";
        }
    } else if (type == "d4") {
        const int family = j.at("family").get<int>();
        const int n_param = j.at("n_param").get<int>();
        const std::string r3 = j.value("r3", "x2y-1");
        const R3Variant v = r3 == "x-1y2" ? R3Variant::XinvYY : R3Variant::XXYinv;
        auto [q, maps] = group_bondle(dihedral_group(4), family, n_param, v);
        out.q = std::move(q);
        out.maps = std::move(maps);
        out.name = "d4(family=" + std::to_string(family) +
                   ",n=" + std::to_string(n_param) + ",r3=" + r3 + ")";
    } else if (type == "file") {
        const std::string path = j.at("path").get<std::string>();
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open bondle table file: " + path);
        Json t = Json::parse(in);
        auto [q, maps] = table_from_json(t);
        out.q = std::move(q);
        out.maps = std::move(maps);
        out.name = path;
    } else {
        throw std::invalid_argument("unknown bondle spec type '" + type + "'");
    }
    return out;
}

// The built-in battery: the two worked-example affine bondles plus one
// dihedral-group bondle.
inline std::vector<Bondle> default_battery() {
    std::vector<Bondle> out;
    out.push_back(bondle_from_spec(
        Json{{"type", "affine"}, {"n", 15}, {"a", 8}, {"b", 2}, {"m", 6}}));
    out.push_back(bondle_from_spec(
        Json{{"type", "affine"}, {"n", 15}, {"a", 7}, {"b", 8}, {"m", 6}}));
    out.push_back(bondle_from_spec(
        Json{{"type", "d4"}, {"family", 1}, {"n_param", 1}, {"r3", "x2y-1"}}));
    return out;
}

} // namespace bondle
