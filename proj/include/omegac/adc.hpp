#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chain.hpp"

namespace omegac {

/* A Steiner array: double sequence (x_i^-, x_i^+) of nonnegative chains with
 * matching boundaries and equal top rows.  Coherent arrays are the cells of
 * ν(K); validity is checked against a concrete complex (see BasedADC). */
struct SteinerArray {
    int dim = 0;
    /* rows[i] = (x_i^-, x_i^+), 0 <= i <= dim; rows[dim].first == rows[dim].second */
    std::vector<std::pair<Chain, Chain>> rows;

    const Chain& minus(int i) const { return rows.at(i).first; }
    const Chain& plus(int i) const { return rows.at(i).second; }
    const Chain& top() const { return rows.at(dim).first; }

    bool operator==(const SteinerArray& o) const { return dim == o.dim && rows == o.rows; }
    bool operator!=(const SteinerArray& o) const { return !(*this == o); }
    bool operator<(const SteinerArray& o) const {
        if (dim != o.dim) return dim < o.dim;
        return rows < o.rows;
    }
};

/* Set of strictly positive degrees in which a duality negates the
 * differential.  Presets: op = odd, co = even>0, full = all>0, t = {1}. */
struct Duality {
    enum class Kind { Op, Co, Full, T, Custom };
    Kind kind = Kind::Custom;
    std::set<int> dims; // used when kind == Custom

    static Duality op() { return {Kind::Op, {}}; }
    static Duality co() { return {Kind::Co, {}}; }
    static Duality full() { return {Kind::Full, {}}; }
    static Duality t() { return {Kind::T, {}}; }
    static Duality custom(std::set<int> s) {
        for (int n : s)
            if (n <= 0) throw Error("BadDuality", "duality degrees must be strictly positive");
        return {Kind::Custom, std::move(s)};
    }

    bool contains(int n) const {
        if (n <= 0) return false;
        switch (kind) {
            case Kind::Op: return n % 2 == 1;
            case Kind::Co: return n % 2 == 0;
            case Kind::Full: return true;
            case Kind::T: return n == 1;
            case Kind::Custom: return dims.count(n) > 0;
        }
        return false;
    }
};

/* Based augmented directed complex: free chain complex over Z with a chosen
 * graded basis, augmentation on degree 0, and positivity submonoid = the
 * N-span of the basis (always, by construction). */
struct BasedADC {
    std::map<std::string, int> basis;  // id -> degree
    std::map<std::string, Chain> diff; // id (deg >= 1) -> chain one degree lower
    std::map<std::string, Int> aug;    // id (deg == 0) -> integer

    bool has(const std::string& id) const { return basis.count(id) > 0; }
    int deg(const std::string& id) const {
        auto it = basis.find(id);
        if (it == basis.end()) throw Error("UnknownBasisElement", "no basis element '" + id + "'", id);
        return it->second;
    }
    int max_deg() const {
        int m = -1; // -1 for the empty complex
        for (auto& [id, d] : basis) m = std::max(m, d);
        return m;
    }
    std::vector<std::string> basis_of_degree(int n) const {
        std::vector<std::string> r;
        for (auto& [id, d] : basis)
            if (d == n) r.push_back(id);
        return r;
    }
    std::vector<int> degree_counts() const {
        std::vector<int> r(std::max(0, max_deg() + 1), 0);
        for (auto& [id, d] : basis) r[d]++;
        return r;
    }

    const Chain& diff_of(const std::string& id) const {
        static const Chain zero;
        auto it = diff.find(id);
        return it == diff.end() ? zero : it->second;
    }

    /* Linear extension of the differential. */
    Chain boundary(const Chain& x) const {
        Chain r(x.deg - 1);
        for (auto& [id, c] : x.coeffs) {
            if (deg(id) != x.deg) throw Error("DegreeMismatch", "chain mentions '" + id + "' of wrong degree", id);
            r += c * diff_of(id);
        }
        if (r.is_zero()) r.deg = x.deg - 1;
        return r;
    }
    /* Linear extension of the augmentation (degree-0 chains). */
    Int augment(const Chain& x) const {
        Int r = 0;
        for (auto& [id, c] : x.coeffs) {
            auto it = aug.find(id);
            if (it == aug.end()) throw Error("UnknownBasisElement", "no augmentation for '" + id + "'", id);
            r += c * it->second;
        }
        return r;
    }

    /* Enforces all type invariants; throws omegac::Error on violation. */
    void validate() const {
        for (auto& [id, d] : basis) {
            if (id.empty()) throw Error("DuplicateId", "empty id");
            if (d < 0) throw Error("DegreeMismatch", "negative degree on '" + id + "'", id);
            if (d == 0) {
                if (!aug.count(id)) throw Error("DegreeMismatch", "missing augmentation for '" + id + "'", id);
                if (diff.count(id)) throw Error("DegreeMismatch", "degree-0 element '" + id + "' has a differential", id);
            } else {
                auto it = diff.find(id);
                if (it == diff.end()) throw Error("DegreeMismatch", "missing differential for '" + id + "'", id);
                const Chain& dx = it->second;
                if (!dx.is_zero() && dx.deg != d - 1)
                    throw Error("DegreeMismatch", "differential of '" + id + "' has wrong degree", id);
                for (auto& [tid, c] : dx.coeffs)
                    if (deg(tid) != d - 1)
                        throw Error("DegreeMismatch", "differential of '" + id + "' mentions '" + tid + "' of wrong degree", id);
            }
        }
        for (auto& [id, dx] : diff)
            if (!basis.count(id)) throw Error("UnknownBasisElement", "differential for unknown '" + id + "'", id);
        for (auto& [id, e] : aug)
            if (!basis.count(id)) throw Error("UnknownBasisElement", "augmentation for unknown '" + id + "'", id);
        // ∂∂ = 0
        for (auto& [id, d] : basis)
            if (d >= 2) {
                Chain dd = boundary(diff_of(id));
                if (!dd.is_zero())
                    throw Error("DifferentialNotSquareZero", "∂∂('" + id + "') = " + dd.str(), id);
            }
        // e∂ = 0
        for (auto& [id, d] : basis)
            if (d == 1) {
                Int e = augment(diff_of(id));
                if (e != 0)
                    throw Error("AugmentationNotAnnihilating", "e∂('" + id + "') = " + e.str(), id);
            }
    }

    bool operator==(const BasedADC& o) const { return basis == o.basis && diff == o.diff && aug == o.aug; }
    bool operator!=(const BasedADC& o) const { return !(*this == o); }
};

/* ---- atoms ------------------------------------------------------------- */

/* ⟨b⟩: descending recursion ⟨b⟩_k^α = ∂_k^α ⟨b⟩_{k+1}^α with ∂^+/∂^- the
 * positive/negative parts of the differential. */
inline SteinerArray atom(const BasedADC& K, const std::string& b) {
    int n = K.deg(b); // throws UnknownBasisElement
    SteinerArray a;
    a.dim = n;
    a.rows.resize(n + 1);
    a.rows[n] = {Chain::unit(n, b), Chain::unit(n, b)};
    for (int k = n - 1; k >= 0; --k) {
        Chain dm = K.boundary(a.rows[k + 1].first);
        Chain dp = K.boundary(a.rows[k + 1].second);
        a.rows[k] = {dm.negative_part(), dp.positive_part()};
        a.rows[k].first.deg = a.rows[k].second.deg = k;
    }
    return a;
}

/* ---- basis predicates -------------------------------------------------- */

struct LoopfreeReport {
    bool ok = true;
    std::vector<std::string> cycle; // witness on failure, first == last
};

/* The relation a⊙b generated by: b ∈ ⟨a⟩^-_{|a|-1} (|a|>0) or
 * a ∈ ⟨b⟩^+_{|b|-1} (|b|>0).  Loop-free iff the transitive-reflexive closure
 * is antisymmetric, i.e. the generating digraph has no nontrivial cycle. */
inline LoopfreeReport loopfree_report(const BasedADC& K) {
    std::map<std::string, std::set<std::string>> succ; // edges a -> b meaning a⊙b
    for (auto& [id, d] : K.basis) succ[id];
    for (auto& [id, d] : K.basis) {
        if (d == 0) continue;
        SteinerArray a = atom(K, id);
        for (auto& [t, c] : a.rows[d - 1].first.coeffs) succ[id].insert(t);  // id ⊙ t
        for (auto& [t, c] : a.rows[d - 1].second.coeffs) succ[t].insert(id); // t ⊙ id
    }
    // DFS cycle detection, deterministic order; self-loops a⊙a are harmless
    // (the closure is reflexive anyway) but a⊙b⊙a with a≠b is a failure.
    std::map<std::string, int> color; // 0 new, 1 on stack, 2 done
    std::vector<std::string> stack;
    LoopfreeReport rep;
    std::function<bool(const std::string&)> dfs = [&](const std::string& v) -> bool {
        color[v] = 1;
        stack.push_back(v);
        for (auto& w : succ[v]) {
            if (w == v) continue;
            if (color[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                rep.cycle.assign(it, stack.end());
                rep.cycle.push_back(w);
                return true;
            }
            if (color[w] == 0 && dfs(w)) return true;
        }
        stack.pop_back();
        color[v] = 2;
        return false;
    };
    for (auto& [id, d] : K.basis)
        if (color[id] == 0 && dfs(id)) {
            rep.ok = false;
            return rep;
        }
    return rep;
}

inline bool is_loopfree(const BasedADC& K) { return loopfree_report(K).ok; }

struct UnitaryReport {
    bool ok = true;
    std::string witness;
};

/* Every atom coherent: e(⟨b⟩_0^-) = e(⟨b⟩_0^+) = 1. */
inline UnitaryReport unitary_report(const BasedADC& K) {
    for (auto& [id, d] : K.basis) {
        SteinerArray a = atom(K, id);
        if (K.augment(a.rows[0].first) != 1 || K.augment(a.rows[0].second) != 1)
            return {false, id};
    }
    return {};
}

inline bool is_unitary(const BasedADC& K) { return unitary_report(K).ok; }

inline bool is_strong_steiner(const BasedADC& K) { return is_loopfree(K) && is_unitary(K); }

/* ---- duality ----------------------------------------------------------- */

/* Sign rule: the differential of a degree-n generator is negated iff n ∈ S.
 * Basis and augmentation are untouched; an involution for every S. */
inline BasedADC dual(const BasedADC& K, const Duality& S) {
    BasedADC R = K;
    for (auto& [id, dx] : R.diff)
        if (S.contains(K.deg(id))) dx = -dx;
    return R;
}

} // namespace omegac
