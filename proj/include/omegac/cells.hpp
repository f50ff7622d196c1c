#pragma once

#include <memory>

#include "adc.hpp"

namespace omegac {

/* A cell of ν(K): a coherent Steiner array over a fixed complex. */
struct Cell {
    std::shared_ptr<const BasedADC> complex;
    SteinerArray array;

    int dim() const { return array.dim; }
    bool operator==(const Cell& o) const { return *complex == *o.complex && array == o.array; }
    bool operator!=(const Cell& o) const { return !(*this == o); }
    bool operator<(const Cell& o) const { return array < o.array; }
};

struct CellReport {
    bool ok = true;
    std::string reason;
};

/* Positivity, boundary compatibility, top equality, coherence. */
inline CellReport cell_report(const BasedADC& K, const SteinerArray& a) {
    if ((int)a.rows.size() != a.dim + 1) return {false, "row count does not match dimension"};
    for (int i = 0; i <= a.dim; ++i) {
        for (const Chain* x : {&a.minus(i), &a.plus(i)}) {
            if (!x->is_zero() && x->deg != i) return {false, "row " + std::to_string(i) + " has wrong degree"};
            if (!x->is_nonnegative()) return {false, "row " + std::to_string(i) + " has a negative coefficient"};
            for (auto& [id, c] : x->coeffs)
                if (K.deg(id) != i) return {false, "row " + std::to_string(i) + " mentions '" + id + "' of wrong degree"};
        }
    }
    if (a.minus(a.dim) != a.plus(a.dim)) return {false, "top rows differ"};
    for (int i = 1; i <= a.dim; ++i) {
        Chain want = a.plus(i - 1) - a.minus(i - 1);
        for (const Chain* x : {&a.minus(i), &a.plus(i)}) {
            Chain dx = K.boundary(*x);
            dx.deg = i - 1;
            Chain w = want;
            if (dx != w && !(dx.is_zero() && w.is_zero()))
                return {false, "boundary compatibility fails at row " + std::to_string(i)};
        }
    }
    if (K.augment(a.minus(0)) != 1 || K.augment(a.plus(0)) != 1) return {false, "coherence fails: augmentation of row 0 is not 1"};
    return {};
}

inline bool is_cell(const BasedADC& K, const SteinerArray& a) { return cell_report(K, a).ok; }

inline Cell make_cell(std::shared_ptr<const BasedADC> K, SteinerArray a) {
    CellReport r = cell_report(*K, a);
    if (!r.ok) throw Error("NotACell", r.reason);
    return Cell{std::move(K), std::move(a)};
}

inline Cell atom_cell(std::shared_ptr<const BasedADC> K, const std::string& b) {
    return make_cell(K, atom(*K, b));
}

/* d_k^α: truncate, replacing the top row by (x_k^α, x_k^α). */
inline Cell boundary(const Cell& c, int k, int sign) {
    if (k < 0 || k >= c.dim()) throw Error("IndexOutOfRange", "boundary index " + std::to_string(k) + " of a dim-" + std::to_string(c.dim()) + " cell");
    Cell r;
    r.complex = c.complex;
    r.array.dim = k;
    r.array.rows.assign(c.array.rows.begin(), c.array.rows.begin() + k + 1);
    const Chain& x = sign < 0 ? c.array.minus(k) : c.array.plus(k);
    r.array.rows[k] = {x, x};
    return r;
}

/* 1^m_x: pad with zero rows up to dimension m. */
inline Cell unit_cell(const Cell& x, int m) {
    if (m < x.dim()) throw Error("BadDimension", "unit padding below the cell's dimension");
    Cell r = x;
    r.array.dim = m;
    for (int i = x.dim() + 1; i <= m; ++i) r.array.rows.push_back({Chain(i), Chain(i)});
    return r;
}

/* x *_k y = x - z + y with z = d_k^-(x) = d_k^+(y): rows below k+1 take y's
 * minus side and x's plus side; rows above k are sums. */
inline Cell compose_cells(const Cell& x, const Cell& y, int k) {
    if (x.dim() != y.dim()) throw Error("NotComposable", "operands have different dimensions");
    int n = x.dim();
    if (k < 0 || k >= n) throw Error("NotComposable", "composition level " + std::to_string(k) + " not below dimension " + std::to_string(n));
    for (int i = 0; i < k; ++i)
        if (x.array.rows[i] != y.array.rows[i])
            throw Error("NotComposable", "row " + std::to_string(i) + " differs between the operands");
    if (x.array.minus(k) != y.array.plus(k))
        throw Error("NotComposable", "d_" + std::to_string(k) + "^-(x) = " + x.array.minus(k).str() + " ≠ d^+(y) = " + y.array.plus(k).str());
    Cell r;
    r.complex = x.complex;
    r.array.dim = n;
    r.array.rows.resize(n + 1);
    for (int i = 0; i < k; ++i) r.array.rows[i] = x.array.rows[i];
    r.array.rows[k] = {y.array.minus(k), x.array.plus(k)};
    for (int i = k + 1; i <= n; ++i)
        r.array.rows[i] = {x.array.minus(i) + y.array.minus(i), x.array.plus(i) + y.array.plus(i)};
    return r;
}

/* Counit π: the (equal) top chain. */
inline Chain cell_class(const Cell& c) { return c.array.top(); }

inline bool is_unit_on(const Cell& c, int k) {
    for (int i = k + 1; i <= c.dim(); ++i)
        if (!c.array.minus(i).is_zero() || !c.array.plus(i).is_zero()) return false;
    return true;
}

/* ---- bounded exhaustive enumeration ------------------------------------ */

namespace detail {

/* All nonnegative chains of degree d over K with coefficient sum <= bound. */
inline std::vector<Chain> nonneg_chains(const BasedADC& K, int d, int bound) {
    std::vector<std::string> gens = K.basis_of_degree(d);
    std::vector<Chain> out;
    Chain cur(d);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == gens.size()) {
            out.push_back(cur);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            if (c > 0) cur.coeffs[gens[i]] = c;
            rec(i + 1, left - c);
            if (c > 0) cur.coeffs.erase(gens[i]);
        }
    };
    rec(0, bound);
    return out;
}

} // namespace detail

/* All cells of the given dimension whose every row has coefficient sum
 * <= bound; exhaustive within the bound, canonical (sorted) order. */
inline std::vector<Cell> enumerate_cells(std::shared_ptr<const BasedADC> Kp, int dim, int bound) {
    const BasedADC& K = *Kp;
    // Per degree: candidate chains and their boundaries, grouped by boundary.
    std::vector<std::vector<Chain>> cand(dim + 1);
    std::vector<std::map<Chain, std::vector<const Chain*>>> by_bnd(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        cand[d] = detail::nonneg_chains(K, d, bound);
        if (d > 0)
            for (const Chain& x : cand[d]) {
                Chain dx = K.boundary(x);
                dx.deg = d - 1;
                by_bnd[d][dx].push_back(&x);
            }
    }
    std::vector<Cell> out;
    SteinerArray a;
    a.dim = dim;
    a.rows.resize(dim + 1);
    std::function<void(int)> rec = [&](int i) {
        if (i == dim) {
            Chain want = dim == 0 ? Chain(0) : a.plus(dim - 1) - a.minus(dim - 1);
            if (dim == 0) {
                for (const Chain& x : cand[0]) {
                    if (K.augment(x) != 1) continue;
                    a.rows[0] = {x, x};
                    out.push_back(Cell{Kp, a});
                }
            } else {
                auto it = by_bnd[dim].find(want);
                if (it != by_bnd[dim].end())
                    for (const Chain* x : it->second) {
                        a.rows[dim] = {*x, *x};
                        out.push_back(Cell{Kp, a});
                    }
            }
            return;
        }
        if (i == 0) {
            for (const Chain& xm : cand[0]) {
                if (K.augment(xm) != 1) continue;
                for (const Chain& xp : cand[0]) {
                    if (K.augment(xp) != 1) continue;
                    a.rows[0] = {xm, xp};
                    rec(1);
                }
            }
        } else {
            Chain want = a.plus(i - 1) - a.minus(i - 1);
            auto it = by_bnd[i].find(want);
            if (it == by_bnd[i].end()) return;
            for (const Chain* xm : it->second)
                for (const Chain* xp : it->second) {
                    a.rows[i] = {*xm, *xp};
                    rec(i + 1);
                }
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace omegac
