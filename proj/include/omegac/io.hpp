#pragma once

#include <fstream>

#include <json.hpp>

#include "cells.hpp"
#include "colim.hpp"
#include "theta.hpp"

namespace omegac {

using nlohmann::json;

namespace detail {

inline void reject_unknown(const json& j, std::initializer_list<const char*> keys, const std::string& what) {
    if (!j.is_object()) throw Error("BadFormat", what + ": expected an object");
    for (auto& [k, v] : j.items()) {
        bool ok = false;
        for (auto* a : keys)
            if (k == a) ok = true;
        if (!ok) throw Error("BadFormat", what + ": unknown key '" + k + "'");
    }
}

inline Int to_int(const json& j) {
    if (!j.is_number_integer()) throw Error("BadFormat", "expected an integer coefficient");
    return Int(j.get<long long>());
}

inline long long from_int(const Int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw Error("BadFormat", "coefficient too large for serialization");
    return x.convert_to<long long>();
}

} // namespace detail

/* ---- ADC ---------------------------------------------------------------- */

inline json adc_to_json(const BasedADC& K) {
    json j;
    j["basis"] = json::array();
    for (auto& [id, d] : K.basis) j["basis"].push_back({{"id", id}, {"deg", d}});
    j["diff"] = json::object();
    for (auto& [id, c] : K.diff) {
        json row = json::object();
        for (auto& [t, co] : c.coeffs) row[t] = detail::from_int(co);
        j["diff"][id] = row;
    }
    j["aug"] = json::object();
    for (auto& [id, e] : K.aug) j["aug"][id] = detail::from_int(e);
    return j;
}

inline BasedADC adc_from_json(const json& j) {
    detail::reject_unknown(j, {"basis", "diff", "aug"}, "adc");
    if (!j.contains("basis") || !j["basis"].is_array()) throw Error("BadFormat", "adc: missing basis array");
    BasedADC K;
    for (auto& e : j["basis"]) {
        detail::reject_unknown(e, {"id", "deg"}, "basis entry");
        std::string id = e.at("id").get<std::string>();
        int d = e.at("deg").get<int>();
        if (K.basis.count(id)) throw Error("DuplicateId", "duplicate basis id", id);
        if (d < 0) throw Error("BadFormat", "negative degree", id);
        K.basis[id] = d;
    }
    if (j.contains("diff"))
        for (auto& [id, row] : j["diff"].items()) {
            if (!K.basis.count(id)) throw Error("UnknownBasisElement", "diff of unknown id", id);
            Chain c(K.basis.at(id) - 1);
            for (auto& [t, co] : row.items()) c.add(t, detail::to_int(co));
            K.diff[id] = std::move(c);
        }
    if (j.contains("aug"))
        for (auto& [id, e] : j["aug"].items()) {
            if (!K.basis.count(id)) throw Error("UnknownBasisElement", "aug of unknown id", id);
            K.aug[id] = detail::to_int(e);
        }
    K.validate();
    return K;
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("BadFormat", "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error("BadFormat", std::string("parse error in '") + path + "': " + e.what());
    }
    return j;
}

inline BasedADC adc_from_json_or_path(const json& j) {
    if (j.is_string()) return adc_from_json(load_json(j.get<std::string>()));
    return adc_from_json(j);
}

/* ---- morphism ----------------------------------------------------------- */

inline json morphism_to_json(const ADCMorphism& f) {
    json j;
    j["source"] = adc_to_json(*f.source);
    j["target"] = adc_to_json(*f.target);
    j["map"] = json::object();
    for (auto& [id, c] : f.map) {
        json row = json::object();
        for (auto& [t, co] : c.coeffs) row[t] = detail::from_int(co);
        j["map"][id] = row;
    }
    return j;
}

inline ADCMorphism morphism_from_json(const json& j) {
    detail::reject_unknown(j, {"source", "target", "map"}, "morphism");
    ADCMorphism f;
    f.source = std::make_shared<BasedADC>(adc_from_json_or_path(j.at("source")));
    f.target = std::make_shared<BasedADC>(adc_from_json_or_path(j.at("target")));
    if (j.contains("map"))
        for (auto& [id, row] : j["map"].items()) {
            if (!f.source->has(id)) throw Error("UnknownBasisElement", "map of unknown id", id);
            Chain c(f.source->deg(id));
            for (auto& [t, co] : row.items()) c.add(t, detail::to_int(co));
            f.map[id] = std::move(c);
        }
    f.validate();
    return f;
}

/* ---- cell --------------------------------------------------------------- */

inline json cell_to_json(const Cell& c) {
    json j = json::array();
    for (auto& [m, p] : c.array.rows) {
        json jm = json::object(), jp = json::object();
        for (auto& [id, co] : m.coeffs) jm[id] = detail::from_int(co);
        for (auto& [id, co] : p.coeffs) jp[id] = detail::from_int(co);
        j.push_back(json::array({jm, jp}));
    }
    return j;
}

inline Cell cell_from_json(std::shared_ptr<const BasedADC> K, const json& j) {
    if (!j.is_array() || j.empty()) throw Error("BadFormat", "cell: expected a nonempty array of row pairs");
    SteinerArray a;
    a.dim = (int)j.size() - 1;
    for (int i = 0; i < (int)j.size(); ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != 2) throw Error("BadFormat", "cell: each row must be a pair");
        Chain m(i), p(i);
        for (auto& [id, co] : row[0].items()) m.add(id, detail::to_int(co));
        for (auto& [id, co] : row[1].items()) p.add(id, detail::to_int(co));
        a.rows.push_back({std::move(m), std::move(p)});
    }
    return make_cell(std::move(K), std::move(a));
}

/* ---- Θ-morphisms -------------------------------------------------------- */

inline json tm_to_json_inner(const ThetaMorphism& m) {
    json j;
    j["f"] = m.f;
    json comps = json::array();
    for (auto& cs : m.comps) {
        json row = json::array();
        for (auto& c : cs) row.push_back(tm_to_json_inner(c));
        comps.push_back(row);
    }
    j["comps"] = comps;
    return j;
}

inline json tm_to_json(const ThetaMorphism& m) {
    json j = tm_to_json_inner(m);
    j["src"] = gs_to_string(m.src);
    j["tgt"] = gs_to_string(m.tgt);
    return j;
}

inline ThetaMorphism tm_from_json_inner(const GlobularSum& src, const GlobularSum& tgt, const json& j) {
    ThetaMorphism m;
    m.src = src;
    m.tgt = tgt;
    if (!j.contains("f") || !j["f"].is_array()) throw Error("BadFormat", "theta morphism: missing f");
    for (auto& x : j["f"]) m.f.push_back(x.get<int>());
    const json& comps = j.contains("comps") ? j["comps"] : json::array();
    if ((int)comps.size() != src.n_segments())
        throw Error("BadFormat", "theta morphism: comps has wrong length");
    for (int i = 0; i < src.n_segments(); ++i) {
        std::vector<ThetaMorphism> row;
        if ((int)m.f.size() != src.n_objects()) throw Error("BadFormat", "theta morphism: f has wrong length");
        for (int k = m.f[i]; k < m.f[i + 1]; ++k)
            row.push_back(tm_from_json_inner(src.branches[i], tgt.branches[k], comps[i][(size_t)(k - m.f[i])]));
        m.comps.push_back(std::move(row));
    }
    m.validate();
    return m;
}

inline ThetaMorphism tm_from_json(const json& j) {
    detail::reject_unknown(j, {"src", "tgt", "f", "comps"}, "theta morphism");
    GlobularSum src = parse_gs(j.at("src").get<std::string>());
    GlobularSum tgt = parse_gs(j.at("tgt").get<std::string>());
    return tm_from_json_inner(src, tgt, j);
}

/* ---- squares and zigzags ------------------------------------------------ */

namespace detail {

inline ADCMorphism map_from_json(std::shared_ptr<const BasedADC> src, std::shared_ptr<const BasedADC> tgt,
                                 const json& j, const std::string& what) {
    ADCMorphism f;
    f.source = std::move(src);
    f.target = std::move(tgt);
    if (!j.is_object()) throw Error("BadFormat", what + ": expected an object id -> chain");
    for (auto& [id, row] : j.items()) {
        if (!f.source->has(id)) throw Error("UnknownBasisElement", what + ": unknown id", id);
        Chain c(f.source->deg(id));
        for (auto& [t, co] : row.items()) c.add(t, to_int(co));
        f.map[id] = std::move(c);
    }
    f.validate();
    return f;
}

} // namespace detail

/* {"A":adc, "B":adc, "C":adc, "D":adc, "f":map, "g":map, "h":map, "k":map}
 * with f: A->B, g: A->C, h: B->D, k: C->D. */
inline Square square_from_json(const json& j) {
    detail::reject_unknown(j, {"A", "B", "C", "D", "f", "g", "h", "k"}, "square");
    auto A = std::make_shared<BasedADC>(adc_from_json_or_path(j.at("A")));
    auto B = std::make_shared<BasedADC>(adc_from_json_or_path(j.at("B")));
    auto C = std::make_shared<BasedADC>(adc_from_json_or_path(j.at("C")));
    auto D = std::make_shared<BasedADC>(adc_from_json_or_path(j.at("D")));
    Square sq{detail::map_from_json(A, B, j.at("f"), "f"), detail::map_from_json(A, C, j.at("g"), "g"),
              detail::map_from_json(B, D, j.at("h"), "h"), detail::map_from_json(C, D, j.at("k"), "k")};
    sq.validate();
    return sq;
}

/* {"objects":[adc,...], "legs":[{"apex":adc, "to_left":map, "to_right":map}, ...]} */
inline Zigzag zigzag_from_json(const json& j) {
    detail::reject_unknown(j, {"objects", "legs"}, "zigzag");
    Zigzag z;
    if (!j.contains("objects") || !j["objects"].is_array()) throw Error("BadFormat", "zigzag: missing objects");
    for (auto& o : j["objects"]) z.objects.push_back(std::make_shared<BasedADC>(adc_from_json_or_path(o)));
    const json& legs = j.contains("legs") ? j["legs"] : json::array();
    if (legs.size() + 1 != z.objects.size()) throw Error("BadFormat", "zigzag: need one leg between consecutive objects");
    for (size_t i = 0; i < legs.size(); ++i) {
        detail::reject_unknown(legs[i], {"apex", "to_left", "to_right"}, "zigzag leg");
        Zigzag::Leg l;
        l.apex = std::make_shared<BasedADC>(adc_from_json_or_path(legs[i].at("apex")));
        l.to_left = detail::map_from_json(l.apex, z.objects.at(i), legs[i].at("to_left"), "to_left");
        l.to_right = detail::map_from_json(l.apex, z.objects.at(i + 1), legs[i].at("to_right"), "to_right");
        z.legs.push_back(std::move(l));
    }
    z.validate();
    return z;
}

} // namespace omegac
