#pragma once

#include <set>

#include "cells.hpp"

namespace omegac {

/* ---- supports ----------------------------------------------------------- */

struct Support {
    int level = 1; // degree of the members
    std::set<std::string> elems;
};

namespace detail {

inline void check_02(const BasedADC& K) {
    if (K.max_deg() > 2) throw Error("PreconditionViolated", "complex has generators above degree 2");
    if (!is_strong_steiner(K)) throw Error("PreconditionViolated", "complex is not strong Steiner");
}

inline std::set<std::string> supp(const Chain& x) {
    std::set<std::string> s;
    for (auto& [id, c] : x.coeffs) s.insert(id);
    return s;
}

} // namespace detail

/* (B₂^v, B₁^v): the 2-generators of the class of v, and the 1-generators of
 * its middle row together with the negative boundaries of the 2-generators.
 * The (x₁^−, ∂^+) variant is computed too and asserted equal. */
inline std::pair<Support, Support> supports(const BasedADC& K, const Cell& v) {
    detail::check_02(K);
    if (v.dim() != 2) throw Error("PreconditionViolated", "supports expects a 2-cell");
    Support b2{2, detail::supp(v.array.top())};
    Support b1{1, detail::supp(v.array.plus(1))};
    std::set<std::string> alt = detail::supp(v.array.minus(1));
    for (auto& b : b2.elems) {
        for (auto& id : detail::supp(K.diff_of(b).negative_part())) b1.elems.insert(id);
        for (auto& id : detail::supp(K.diff_of(b).positive_part())) alt.insert(id);
    }
    if (b1.elems != alt) throw Error("ValidationFailed", "the two 1-support formulas disagree");
    return {b2, b1};
}

/* ---- precedence --------------------------------------------------------- */

struct Precedence {
    int level = 1;
    std::set<std::pair<std::string, std::string>> pairs; // transitively closed
    bool is_partial_order = true;

    bool less(const std::string& a, const std::string& b) const { return pairs.count({a, b}) > 0; }
};

namespace detail {

/* c < d iff the i-th negative atom row of c meets the i-th positive atom row
 * of d; then close transitively over the given carrier. */
inline Precedence atom_precedence(const BasedADC& K, const std::set<std::string>& carrier, int i) {
    Precedence P;
    P.level = i;
    std::vector<std::string> els(carrier.begin(), carrier.end());
    size_t n = els.size();
    std::vector<char> rel(n * n, 0);
    std::map<std::string, SteinerArray> atoms;
    for (auto& b : els) atoms.emplace(b, atom(K, b));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const Chain& lo = atoms.at(els[a]).minus(i);
            const Chain& hi = atoms.at(els[b]).plus(i);
            if (!lo.meet(hi).is_zero()) rel[a * n + b] = 1;
        }
    for (size_t k = 0; k < n; ++k)
        for (size_t a = 0; a < n; ++a)
            if (rel[a * n + k])
                for (size_t b = 0; b < n; ++b)
                    if (rel[k * n + b]) rel[a * n + b] = 1;
    for (size_t a = 0; a < n; ++a) {
        if (rel[a * n + a]) P.is_partial_order = false;
        for (size_t b = 0; b < n; ++b)
            if (rel[a * n + b]) P.pairs.insert({els[a], els[b]});
    }
    return P;
}

} // namespace detail

/* Precedence of the generators of v: level 1 orders B₂^v by the degree-1 atom
 * rows, level 0 orders B₁^v by the degree-0 atom rows. */
inline Precedence precedence(const BasedADC& K, const Cell& v, int level) {
    auto [b2, b1] = supports(K, v);
    if (level == 1) return detail::atom_precedence(K, b2.elems, 1);
    if (level == 0) return detail::atom_precedence(K, b1.elems, 0);
    throw Error("IndexOutOfRange", "precedence level must be 0 or 1");
}

/* All linear extensions of the level-1 precedence, lexicographically. */
inline std::vector<std::vector<std::string>> orderings(const BasedADC& K, const Cell& v) {
    auto [b2, b1] = supports(K, v);
    Precedence P = detail::atom_precedence(K, b2.elems, 1);
    if (!P.is_partial_order) throw Error("NotPartialOrder", "level-1 precedence has a cycle");
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> seq;
    std::set<std::string> rest = b2.elems;
    std::function<void()> rec = [&]() {
        if (rest.empty()) {
            out.push_back(seq);
            return;
        }
        for (auto it = rest.begin(); it != rest.end();) {
            const std::string b = *it;
            bool minimal = true;
            for (auto& a : rest)
                if (a != b && P.less(a, b)) minimal = false;
            if (minimal) {
                it = rest.erase(it);
                seq.push_back(b);
                rec();
                seq.pop_back();
                it = rest.insert(b).first;
                ++it;
            } else {
                ++it;
            }
        }
    };
    rec();
    return out;
}

/* ---- three-way split ---------------------------------------------------- */

struct Split3 {
    Cell below, middle, above; // u = below *_i (middle *_i above)
};

/* Split the 2-cell u at the generator x: rows above the level are divided by
 * atom precedence relative to x (strictly below / incomparable-or-x /
 * strictly above), then the level row is reconstructed so that the three
 * parts compose back to u. */
inline Split3 split3(const BasedADC& K, const Cell& u, const std::string& x, int level) {
    detail::check_02(K);
    if (u.dim() != 2) throw Error("PreconditionViolated", "split3 expects a 2-cell");
    if (level != 0 && level != 1) throw Error("IndexOutOfRange", "split level must be 0 or 1");
    auto [b2, b1] = supports(K, u);
    if (!b2.elems.count(x)) throw Error("PreconditionViolated", "'" + x + "' is not in the 2-support");
    if (level == 0) {
        Precedence P1 = detail::atom_precedence(K, b2.elems, 1);
        for (auto& b : b2.elems)
            if (b != x && (P1.less(b, x) || P1.less(x, b)))
                throw Error("PreconditionViolated", "'" + b + "' is level-1 comparable with '" + x + "'");
    }
    // carrier: everything appearing strictly above the level row
    std::set<std::string> carrier;
    for (int j = level + 1; j <= 2; ++j) {
        for (auto& id : detail::supp(u.array.minus(j))) carrier.insert(id);
        for (auto& id : detail::supp(u.array.plus(j))) carrier.insert(id);
    }
    Precedence P = detail::atom_precedence(K, carrier, level);
    if (!P.is_partial_order) throw Error("NotDecomposable", "precedence relative to '" + x + "' is not a partial order");

    auto part = [&](const Chain& c, int which /* 0 below, 1 middle, 2 above */) {
        Chain r(c.deg);
        for (auto& [id, co] : c.coeffs) {
            int w = id == x ? 1 : P.less(id, x) ? 0 : P.less(x, id) ? 2 : 1;
            if (w == which) r.add(id, co);
        }
        return r;
    };

    SteinerArray va, wa, ta;
    for (SteinerArray* s : {&va, &wa, &ta}) {
        s->dim = 2;
        s->rows.resize(3);
    }
    for (int j = level + 1; j <= 2; ++j) {
        va.rows[j] = {part(u.array.minus(j), 0), part(u.array.plus(j), 0)};
        wa.rows[j] = {part(u.array.minus(j), 1), part(u.array.plus(j), 1)};
        ta.rows[j] = {part(u.array.minus(j), 2), part(u.array.plus(j), 2)};
    }
    for (int j = 0; j < level; ++j) va.rows[j] = wa.rows[j] = ta.rows[j] = u.array.rows[j];
    int i = level;
    auto fix_deg = [&](Chain c) {
        c.deg = i;
        return c;
    };
    va.rows[i].second = u.array.plus(i);
    va.rows[i].first = u.array.plus(i) - fix_deg(K.boundary(va.minus(i + 1)));
    wa.rows[i].second = va.rows[i].first;
    wa.rows[i].first = va.rows[i].first - fix_deg(K.boundary(wa.minus(i + 1)));
    ta.rows[i].second = wa.rows[i].first;
    ta.rows[i].first = u.array.minus(i);

    Split3 r;
    try {
        r.below = make_cell(u.complex, va);
        r.middle = make_cell(u.complex, wa);
        r.above = make_cell(u.complex, ta);
    } catch (const Error& e) {
        throw Error("NotDecomposable", std::string("split part is not a cell: ") + e.what());
    }
    Cell back = compose_cells(r.below, compose_cells(r.middle, r.above, level), level);
    if (back != u) throw Error("NotDecomposable", "split parts do not recompose");
    return r;
}

/* ---- decomposition theorem ---------------------------------------------- */

/* Decompose a 2-cell along an ordering of its 2-support: repeatedly peel the
 * next generator by a level-1 split (whose below part is a unit), isolate its
 * 0-block by a level-0 split, and whisker that block with units.  The factors
 * recompose to v under *₁ in order; this is checked before returning. */
inline std::vector<Cell> decompose(const BasedADC& K, const Cell& v, const std::vector<std::string>& ordering) {
    auto [b2, b1] = supports(K, v);
    Precedence P1 = detail::atom_precedence(K, b2.elems, 1);
    if (!P1.is_partial_order) throw Error("NotPartialOrder", "level-1 precedence has a cycle");
    std::set<std::string> seen(ordering.begin(), ordering.end());
    if (seen.size() != ordering.size() || seen != b2.elems)
        throw Error("PreconditionViolated", "ordering is not a permutation of the 2-support");
    for (size_t j = 0; j < ordering.size(); ++j)
        for (size_t k = j + 1; k < ordering.size(); ++k)
            if (P1.less(ordering[k], ordering[j]))
                throw Error("PreconditionViolated", "ordering is not a linear extension of the level-1 precedence");

    auto pad1 = [&](const Cell& c, int sign) { return unit_cell(boundary(c, 1, sign), 2); };
    std::vector<Cell> out;
    Cell u = v;
    for (auto& w : ordering) {
        Split3 s1 = split3(K, u, w, 1); // below part is a unit: w is minimal among the rest
        Split3 s0 = split3(K, s1.middle, w, 0);
        Cell vi = compose_cells(pad1(s0.below, +1), compose_cells(s0.middle, pad1(s0.above, +1), 0), 0);
        out.push_back(vi);
        Cell rest = compose_cells(s0.below, compose_cells(pad1(s0.middle, -1), s0.above, 0), 0);
        u = compose_cells(rest, s1.above, 1);
    }
    if (!detail::supp(u.array.top()).empty()) throw Error("NotDecomposable", "remainder still has 2-support");
    Cell acc = u;
    for (auto it = out.rbegin(); it != out.rend(); ++it) acc = compose_cells(*it, acc, 1);
    if (acc != v) throw Error("NotDecomposable", "factors do not recompose to the input");
    return out;
}

/* b is 0-comparable in v: b lies in the 2-support and is level-1 incomparable
 * with every other member. */
inline bool is_0_comparable(const BasedADC& K, const Cell& v, const std::string& b) {
    auto [b2, b1] = supports(K, v);
    if (!b2.elems.count(b)) return false;
    Precedence P = detail::atom_precedence(K, b2.elems, 1);
    for (auto& c : b2.elems)
        if (c != b && (P.less(b, c) || P.less(c, b))) return false;
    return true;
}

} // namespace omegac
