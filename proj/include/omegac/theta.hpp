#pragma once

#include <memory>

#include "cells.hpp"
#include "morphism.hpp"

namespace omegac {

/* Object of Θ as a tree: no branches = [0]; branches (a_0..a_{n-1}) = [𝐚,n]. */
struct GlobularSum {
    std::vector<GlobularSum> branches;

    int n_segments() const { return (int)branches.size(); }
    int n_objects() const { return (int)branches.size() + (branches.empty() ? 1 : 1); }
    // objects are 0..n_segments(); a lone point also has one object (index 0)

    bool operator==(const GlobularSum& o) const { return branches == o.branches; }
    bool operator!=(const GlobularSum& o) const { return !(*this == o); }
    bool operator<(const GlobularSum& o) const { return branches < o.branches; }

    int dim() const {
        int d = 0;
        for (auto& a : branches) d = std::max(d, a.dim() + 1);
        return d;
    }
    int size() const { // tree node count
        int s = 1;
        for (auto& a : branches) s += a.size();
        return s;
    }
};

inline GlobularSum globe_gs(int n) {
    GlobularSum g;
    for (int i = 0; i < n; ++i) {
        GlobularSum h;
        h.branches.push_back(std::move(g));
        g = std::move(h);
    }
    return g;
}

inline std::string gs_to_string(const GlobularSum& g) {
    if (g.branches.empty()) return "*";
    std::string s = "[";
    for (size_t i = 0; i < g.branches.size(); ++i) {
        if (i) s += ",";
        s += gs_to_string(g.branches[i]);
    }
    return s + "]";
}

/* Grammar: gs := "*" | "[" gs ("," gs)* "]" ; sugar "Dn". */
inline GlobularSum parse_gs(const std::string& expr) {
    size_t pos = 0;
    auto skip = [&] { while (pos < expr.size() && isspace((unsigned char)expr[pos])) ++pos; };
    auto fail = [&](const std::string& msg) -> void {
        throw Error("SyntaxError", msg + " at position " + std::to_string(pos) + " in '" + expr + "'");
    };
    std::function<GlobularSum()> term = [&]() -> GlobularSum {
        skip();
        if (pos >= expr.size()) fail("unexpected end of input");
        if (expr[pos] == '*') {
            ++pos;
            return {};
        }
        if (expr[pos] == 'D') {
            ++pos;
            size_t start = pos;
            while (pos < expr.size() && isdigit((unsigned char)expr[pos])) ++pos;
            if (pos == start) fail("expected digits after 'D'");
            return globe_gs(std::stoi(expr.substr(start, pos - start)));
        }
        if (expr[pos] == '[') {
            ++pos;
            GlobularSum g;
            g.branches.push_back(term());
            skip();
            while (pos < expr.size() && expr[pos] == ',') {
                ++pos;
                g.branches.push_back(term());
                skip();
            }
            if (pos >= expr.size() || expr[pos] != ']') fail("expected ']' or ','");
            ++pos;
            return g;
        }
        fail("expected '*', '[' or 'D'");
        return {};
    };
    GlobularSum g = term();
    skip();
    if (pos != expr.size()) fail("trailing input");
    return g;
}

/* ---- λ on globular sums ------------------------------------------------ */

inline std::string seg_id(int i, const std::string& b) { return std::to_string(i) + ":" + b; }

/* λ(g): objects v0..vn in degree 0; segment i carries the suspension of
 * λ(a_i) between v_i and v_{i+1}, its elements renamed "i:<name>". */
inline BasedADC lambda_gs(const GlobularSum& g) {
    BasedADC R;
    if (g.branches.empty()) {
        R.basis["v0"] = 0;
        R.aug["v0"] = 1;
        return R;
    }
    int n = g.n_segments();
    for (int i = 0; i <= n; ++i) {
        R.basis["v" + std::to_string(i)] = 0;
        R.aug["v" + std::to_string(i)] = 1;
    }
    for (int i = 0; i < n; ++i) {
        BasedADC Li = lambda_gs(g.branches[i]);
        for (auto& [b, d] : Li.basis) {
            std::string id = seg_id(i, b);
            R.basis[id] = d + 1;
            Chain bd(d);
            if (d == 0) {
                bd.add("v" + std::to_string(i + 1), 1);
                bd.add("v" + std::to_string(i), -1);
            } else {
                for (auto& [t, c] : Li.diff_of(b).coeffs) bd.add(seg_id(i, t), c);
            }
            R.diff[id] = bd;
        }
    }
    return R;
}

/* ---- Θ-morphisms ------------------------------------------------------- */

/* Encoding: a monotone map f on objects plus, for each source segment i, the
 * tuple of component morphisms a_i -> b_k for f(i) <= k < f(i+1). */
struct ThetaMorphism {
    GlobularSum src, tgt;
    std::vector<int> f;                           // size = src objects
    std::vector<std::vector<ThetaMorphism>> comps; // size = src segments

    bool operator==(const ThetaMorphism& o) const {
        return src == o.src && tgt == o.tgt && f == o.f && comps == o.comps;
    }
    bool operator!=(const ThetaMorphism& o) const { return !(*this == o); }
    bool operator<(const ThetaMorphism& o) const {
        if (src != o.src) return src < o.src;
        if (tgt != o.tgt) return tgt < o.tgt;
        if (f != o.f) return f < o.f;
        return comps < o.comps;
    }

    void validate() const {
        if ((int)f.size() != src.n_objects()) throw Error("ShapeMismatch", "object map has wrong length");
        for (size_t i = 0; i + 1 < f.size(); ++i)
            if (f[i] > f[i + 1]) throw Error("ShapeMismatch", "object map not monotone");
        for (int v : f)
            if (v < 0 || v > tgt.n_segments()) throw Error("ShapeMismatch", "object map out of range");
        if ((int)comps.size() != src.n_segments()) throw Error("ShapeMismatch", "component list has wrong length");
        for (int i = 0; i < src.n_segments(); ++i) {
            if ((int)comps[i].size() != f[i + 1] - f[i]) throw Error("ShapeMismatch", "component tuple length mismatch");
            for (int k = f[i]; k < f[i + 1]; ++k) {
                const ThetaMorphism& c = comps[i][k - f[i]];
                if (c.src != src.branches[i] || c.tgt != tgt.branches[k])
                    throw Error("ShapeMismatch", "component endpoints mismatch");
                c.validate();
            }
        }
    }
};

inline ThetaMorphism identity_tm(const GlobularSum& g) {
    ThetaMorphism m;
    m.src = m.tgt = g;
    m.f.resize(g.n_objects());
    for (int i = 0; i < g.n_objects(); ++i) m.f[i] = i;
    for (int i = 0; i < g.n_segments(); ++i) m.comps.push_back({identity_tm(g.branches[i])});
    return m;
}

/* Constant morphism collapsing everything to the given object of tgt. */
inline ThetaMorphism constant_tm(const GlobularSum& src, const GlobularSum& tgt, int obj) {
    ThetaMorphism m;
    m.src = src;
    m.tgt = tgt;
    m.f.assign(src.n_objects(), obj);
    m.comps.assign(src.n_segments(), {});
    return m;
}

inline ThetaMorphism compose_tm(const ThetaMorphism& g, const ThetaMorphism& f) {
    if (f.tgt != g.src) throw Error("ShapeMismatch", "composite of Θ-morphisms with mismatched middle object");
    ThetaMorphism h;
    h.src = f.src;
    h.tgt = g.tgt;
    for (int v : f.f) h.f.push_back(g.f[v]);
    for (int i = 0; i < f.src.n_segments(); ++i) {
        std::vector<ThetaMorphism> tuple;
        for (int k = h.f[i]; k < h.f[i + 1]; ++k) {
            // unique mediating segment j of g.src with f.f(i) <= j < f.f(i+1), g.f(j) <= k < g.f(j+1)
            int jm = -1;
            for (int j = f.f[i]; j < f.f[i + 1]; ++j)
                if (g.f[j] <= k && k < g.f[j + 1]) {
                    jm = j;
                    break;
                }
            if (jm < 0) throw Error("ShapeMismatch", "no mediating segment (internal error)");
            tuple.push_back(compose_tm(g.comps[jm][k - g.f[jm]], f.comps[i][jm - f.f[i]]));
        }
        h.comps.push_back(std::move(tuple));
    }
    return h;
}

/* λ of a Θ-morphism: object i ↦ v_{f(i)}; a segment-i element x of λ(a_i)
 * maps to the sum over k in [f(i),f(i+1)) of the segment-k copies of its
 * image under the (i,k) component. */
inline std::map<std::string, Chain> tm_to_adc_map(const ThetaMorphism& m) {
    std::map<std::string, Chain> r;
    if (m.src.branches.empty()) {
        r["v0"] = Chain::unit(0, "v" + std::to_string(m.f[0]));
        return r;
    }
    for (int i = 0; i <= m.src.n_segments(); ++i)
        r["v" + std::to_string(i)] = Chain::unit(0, "v" + std::to_string(m.f[i]));
    for (int i = 0; i < m.src.n_segments(); ++i) {
        BasedADC Li = lambda_gs(m.src.branches[i]);
        std::vector<std::map<std::string, Chain>> sub;
        for (auto& c : m.comps[i]) sub.push_back(tm_to_adc_map(c));
        for (auto& [b, d] : Li.basis) {
            Chain im(d + 1);
            for (int k = m.f[i]; k < m.f[i + 1]; ++k) {
                const Chain& x = sub[k - m.f[i]].at(b);
                for (auto& [t, c] : x.coeffs) im.add(seg_id(k, t), c);
            }
            r[seg_id(i, b)] = im;
        }
    }
    return r;
}

inline ADCMorphism tm_to_adc(const ThetaMorphism& m) {
    ADCMorphism f;
    f.source = std::make_shared<BasedADC>(lambda_gs(m.src));
    f.target = std::make_shared<BasedADC>(lambda_gs(m.tgt));
    f.map = tm_to_adc_map(m);
    f.validate(); // a failure here indicates an implementation bug
    return f;
}

/* ---- enumeration ------------------------------------------------------- */

namespace detail {
inline void monotone_maps(int len, int maxval, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == len) {
        out.push_back(cur);
        return;
    }
    int lo = cur.empty() ? 0 : cur.back();
    for (int v = lo; v <= maxval; ++v) {
        cur.push_back(v);
        monotone_maps(len, maxval, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

inline std::vector<ThetaMorphism> enumerate_hom(const GlobularSum& a, const GlobularSum& b) {
    std::vector<ThetaMorphism> out;
    std::vector<std::vector<int>> fs;
    std::vector<int> cur;
    detail::monotone_maps(a.n_objects(), b.n_segments(), cur, fs);
    for (auto& f : fs) {
        // collect candidate tuples per source segment
        std::vector<std::vector<std::vector<ThetaMorphism>>> choices(a.n_segments());
        bool possible = true;
        for (int i = 0; i < a.n_segments() && possible; ++i) {
            std::vector<std::vector<ThetaMorphism>> tuples = {{}};
            for (int k = f[i]; k < f[i + 1]; ++k) {
                std::vector<ThetaMorphism> hom = enumerate_hom(a.branches[i], b.branches[k]);
                std::vector<std::vector<ThetaMorphism>> next;
                for (auto& t : tuples)
                    for (auto& h : hom) {
                        auto t2 = t;
                        t2.push_back(h);
                        next.push_back(std::move(t2));
                    }
                tuples = std::move(next);
            }
            choices[i] = std::move(tuples);
            if (choices[i].empty()) possible = false;
        }
        if (!possible) continue;
        // cartesian product over segments
        ThetaMorphism m;
        m.src = a;
        m.tgt = b;
        m.f = f;
        m.comps.assign(a.n_segments(), {});
        std::function<void(int)> rec = [&](int i) {
            if (i == a.n_segments()) {
                out.push_back(m);
                return;
            }
            for (auto& t : choices[i]) {
                m.comps[i] = t;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return out;
}

/* ---- classification ---------------------------------------------------- */

inline bool is_globular_tm(const ThetaMorphism& m) {
    if (m.src.branches.empty()) return true; // point inclusions are globular
    for (int i = 0; i < m.src.n_segments(); ++i) {
        if (m.f[i + 1] != m.f[i] + 1) return false;
        if (!is_globular_tm(m.comps[i][0])) return false;
    }
    return true;
}

inline bool is_degenerate_tm(const ThetaMorphism& m) {
    if (m.src.branches.empty()) return m.tgt.branches.empty();
    if (m.f.front() != 0 || m.f.back() != m.tgt.n_segments()) return false;
    for (size_t i = 0; i + 1 < m.f.size(); ++i)
        if (m.f[i + 1] - m.f[i] > 1) return false; // not surjective on objects
    for (auto& tuple : m.comps)
        for (auto& c : tuple)
            if (!is_degenerate_tm(c)) return false;
    return true;
}

/* All globular morphisms into b: point inclusions plus windows with
 * recursively chosen globular branch maps. */
inline std::vector<ThetaMorphism> globular_subobjects(const GlobularSum& b) {
    std::vector<ThetaMorphism> out;
    for (int p = 0; p <= b.n_segments(); ++p) {
        ThetaMorphism m;
        m.src = GlobularSum{};
        m.tgt = b;
        m.f = {p};
        out.push_back(std::move(m));
    }
    int msegs = b.n_segments();
    for (int p = 0; p < msegs; ++p)
        for (int q = p + 1; q <= msegs; ++q) {
            std::vector<std::vector<ThetaMorphism>> per(q - p);
            for (int k = p; k < q; ++k) per[k - p] = globular_subobjects(b.branches[k]);
            ThetaMorphism m;
            m.tgt = b;
            for (int j = 0; j <= q - p; ++j) m.f.push_back(p + j);
            m.comps.assign(q - p, {});
            m.src.branches.resize(q - p);
            std::function<void(int)> rec = [&](int k) {
                if (k == q - p) {
                    out.push_back(m);
                    return;
                }
                for (auto& c : per[k]) {
                    m.src.branches[k] = c.src;
                    m.comps[k] = {c};
                    rec(k + 1);
                }
            };
            rec(0);
        }
    return out;
}

/* All degenerate morphisms out of a. */
inline std::vector<ThetaMorphism> degenerate_quotients(const GlobularSum& a) {
    std::vector<ThetaMorphism> out;
    if (a.branches.empty()) {
        out.push_back(identity_tm(a));
        return out;
    }
    int n = a.n_segments();
    for (int r = 0; r <= n; ++r) {
        // all monotone surjections s: [n] -> [r]
        std::vector<std::vector<int>> ss;
        std::vector<int> cur = {0};
        std::function<void()> build = [&]() {
            if ((int)cur.size() == n + 1) {
                if (cur.back() == r) ss.push_back(cur);
                return;
            }
            for (int step = 0; step <= 1; ++step) {
                if (cur.back() + step > r) break;
                cur.push_back(cur.back() + step);
                build();
                cur.pop_back();
            }
        };
        build();
        for (auto& s : ss) {
            // surviving branch i_j per target segment j, recursive quotient there
            std::vector<int> surv(r, -1);
            for (int i = 0; i < n; ++i)
                if (s[i + 1] == s[i] + 1) surv[s[i]] = i;
            ThetaMorphism m;
            m.src = a;
            m.f = s;
            m.comps.assign(n, {});
            m.tgt.branches.resize(r);
            std::vector<std::vector<ThetaMorphism>> per(r);
            for (int j = 0; j < r; ++j) per[j] = degenerate_quotients(a.branches[surv[j]]);
            std::function<void(int)> rec = [&](int j) {
                if (j == r) {
                    out.push_back(m);
                    return;
                }
                for (auto& q : per[j]) {
                    m.tgt.branches[j] = q.tgt;
                    m.comps[surv[j]] = {q};
                    rec(j + 1);
                }
            };
            rec(0);
        }
    }
    return out;
}

/* A section of a degenerate morphism (σ ∘ section = id). */
inline ThetaMorphism section_tm(const ThetaMorphism& sigma) {
    const GlobularSum& a = sigma.src;
    const GlobularSum& c = sigma.tgt;
    if (c.branches.empty()) return constant_tm(c, a, 0);
    int n = a.n_segments(), r = c.n_segments();
    std::vector<int> surv(r, -1);
    for (int i = 0; i < n; ++i)
        if (sigma.f[i + 1] == sigma.f[i] + 1) surv[sigma.f[i]] = i;
    ThetaMorphism t;
    t.src = c;
    t.tgt = a;
    for (int j = 0; j < r; ++j) t.f.push_back(surv[j]);
    t.f.push_back(surv[r - 1] + 1);
    for (int j = 0; j < r; ++j) {
        std::vector<ThetaMorphism> tuple;
        for (int k = t.f[j]; k < t.f[j + 1]; ++k) {
            if (k == surv[j])
                tuple.push_back(section_tm(sigma.comps[k][0]));
            else
                tuple.push_back(constant_tm(c.branches[j], a.branches[k], 0));
        }
        t.comps.push_back(std::move(tuple));
    }
    return t;
}

/* Unique epi-mono (degenerate/mono) factorization: the maximally collapsing
 * degenerate quotient through which f factors is the Reedy epi. */
inline std::pair<ThetaMorphism, ThetaMorphism> factor_reedy(const ThetaMorphism& f) {
    std::vector<ThetaMorphism> qs = degenerate_quotients(f.src);
    std::stable_sort(qs.begin(), qs.end(), [](const ThetaMorphism& x, const ThetaMorphism& y) {
        return x.tgt.size() < y.tgt.size();
    });
    for (auto& sigma : qs) {
        ThetaMorphism tau = section_tm(sigma);
        ThetaMorphism m = compose_tm(f, tau);
        if (compose_tm(m, sigma) == f) return {sigma, m};
    }
    throw Error("ShapeMismatch", "Reedy factorization not found (internal error)");
}

inline bool is_mono_tm(const ThetaMorphism& m) { return factor_reedy(m).first == identity_tm(m.src); }

/* Algebraic: no factorization through a non-invertible (= non-identity)
 * globular morphism into the target. */
inline bool is_algebraic_tm(const ThetaMorphism& m) {
    ThetaMorphism idt = identity_tm(m.tgt);
    for (auto& i : globular_subobjects(m.tgt)) {
        if (i == idt) continue;
        for (auto& g : enumerate_hom(m.src, i.src))
            if (compose_tm(i, g) == m) return false;
    }
    return true;
}

struct ThetaFlags {
    bool globular = false, degenerate = false, mono = false, algebraic = false, conduche = false;
};

inline ThetaFlags classify(const ThetaMorphism& m) {
    ThetaFlags fl;
    fl.globular = is_globular_tm(m);
    fl.degenerate = is_degenerate_tm(m);
    fl.mono = is_mono_tm(m);
    fl.algebraic = is_algebraic_tm(m);
    fl.conduche = fl.globular; // discrete Conduché on globular sums = globular
    return fl;
}

/* Unique algebraic-then-globular factorization: the smallest globular
 * subobject through which f factors. */
inline std::pair<ThetaMorphism, ThetaMorphism> factor_alg_glob(const ThetaMorphism& f) {
    std::vector<ThetaMorphism> subs = globular_subobjects(f.tgt);
    std::stable_sort(subs.begin(), subs.end(), [](const ThetaMorphism& x, const ThetaMorphism& y) {
        return x.src.size() < y.src.size();
    });
    for (auto& i : subs)
        for (auto& g : enumerate_hom(f.src, i.src))
            if (compose_tm(i, g) == f) return {g, i};
    throw Error("ShapeMismatch", "algebraic/globular factorization not found (internal error)");
}

/* ---- spines and truncations -------------------------------------------- */

inline std::vector<ThetaMorphism> spine(const GlobularSum& g) {
    std::vector<ThetaMorphism> out;
    if (g.branches.empty()) {
        ThetaMorphism m;
        m.src = GlobularSum{};
        m.tgt = g;
        m.f = {0};
        out.push_back(std::move(m));
        return out;
    }
    for (int i = 0; i < g.n_segments(); ++i)
        for (auto& s : spine(g.branches[i])) {
            ThetaMorphism m;
            m.src.branches = {s.src};
            m.tgt = g;
            m.f = {i, i + 1};
            m.comps = {{s}};
            out.push_back(std::move(m));
        }
    return out;
}

/* s_n = t_n truncation with its inclusion; sign picks the base points
 * (initial for -, terminal for +) at the recursion bottom. */
inline std::pair<GlobularSum, ThetaMorphism> truncate(const GlobularSum& g, int n, int sign) {
    if (n < 0) throw Error("BadIndices", "negative truncation level");
    if (n == 0) {
        ThetaMorphism m;
        m.src = GlobularSum{};
        m.tgt = g;
        m.f = {sign < 0 ? 0 : g.n_segments()};
        return {GlobularSum{}, std::move(m)};
    }
    if (g.branches.empty()) return {g, identity_tm(g)};
    ThetaMorphism m;
    m.tgt = g;
    for (int i = 0; i <= g.n_segments(); ++i) m.f.push_back(i);
    for (int i = 0; i < g.n_segments(); ++i) {
        auto [sub, inc] = truncate(g.branches[i], n - 1, sign);
        m.src.branches.push_back(sub);
        m.comps.push_back({inc});
    }
    return {m.src, std::move(m)};
}

/* ---- structural maps --------------------------------------------------- */

/* D_n ⊔_{D_k} D_n as a globular sum. */
inline GlobularSum comp_target(int n, int k) {
    if (k == 0) {
        GlobularSum g;
        g.branches = {globe_gs(n - 1), globe_gs(n - 1)};
        return g;
    }
    GlobularSum g;
    g.branches = {comp_target(n - 1, k - 1)};
    return g;
}

enum class StructuralKind { Unit, Comp };

/* unit: the collapse D_{n+1} -> D_n; comp: ▽_{k,n}: D_n -> D_n ⊔_{D_k} D_n,
 * the morphism whose λ-image of e_n is the sum of the two top copies. */
inline ThetaMorphism structural_map(StructuralKind kind, int n, int k = 0) {
    if (kind == StructuralKind::Unit) {
        if (n < 0) throw Error("BadIndices", "unit requires n >= 0");
        // D_{n+1} -> D_n
        if (n == 0) return constant_tm(globe_gs(1), globe_gs(0), 0);
        ThetaMorphism m;
        m.src = globe_gs(n + 1);
        m.tgt = globe_gs(n);
        m.f = {0, 1};
        m.comps = {{structural_map(StructuralKind::Unit, n - 1)}};
        return m;
    }
    if (k < 0 || k >= n) throw Error("BadIndices", "comp requires 0 <= k < n");
    ThetaMorphism m;
    m.src = globe_gs(n);
    m.tgt = comp_target(n, k);
    if (k == 0) {
        m.f = {0, 2};
        m.comps = {{identity_tm(globe_gs(n - 1)), identity_tm(globe_gs(n - 1))}};
    } else {
        m.f = {0, 1};
        m.comps = {{structural_map(StructuralKind::Comp, n - 1, k - 1)}};
    }
    return m;
}

} // namespace omegac
