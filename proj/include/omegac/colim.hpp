#pragma once

#include <memory>

#include "linalg.hpp"
#include "morphism.hpp"

namespace omegac {

namespace detail {

struct DegIndex {
    std::vector<std::string> names;
    std::map<std::string, int> pos;
};

inline DegIndex deg_index(const BasedADC& K, int d) {
    DegIndex ix;
    ix.names = K.basis_of_degree(d);
    for (size_t i = 0; i < ix.names.size(); ++i) ix.pos[ix.names[i]] = (int)i;
    return ix;
}

inline std::vector<Int> chain_vec(const Chain& x, const DegIndex& ix) {
    std::vector<Int> v(ix.names.size(), 0);
    for (auto& [id, c] : x.coeffs) v[ix.pos.at(id)] = c;
    return v;
}

} // namespace detail

/* Commuting square
 *      A --f--> B
 *      |        |
 *      g        h
 *      v        v
 *      C --k--> D
 */
struct Square {
    ADCMorphism f, g, h, k;

    const BasedADC& A() const { return *f.source; }
    const BasedADC& B() const { return *f.target; }
    const BasedADC& C() const { return *g.target; }
    const BasedADC& D() const { return *h.target; }

    void validate() const {
        if (*f.source != *g.source || *f.target != *h.source || *g.target != *k.source || *h.target != *k.target)
            throw Error("SourceTargetMismatch", "square endpoints do not match");
        if (compose_morphism(h, f) != compose_morphism(k, g))
            throw Error("SourceTargetMismatch", "square does not commute");
    }
};

/* Pushout criterion: the induced map coker(A -> B⊕C) -> D is a degreewise
 * isomorphism of groups AND every basis element of D is the exact image of a
 * basis element of B or C (monoid generation on the basis). */
inline bool is_cocartesian(const Square& sq) {
    sq.validate();
    int maxd = std::max(std::max(sq.A().max_deg(), sq.B().max_deg()), std::max(sq.C().max_deg(), sq.D().max_deg()));
    for (int d = 0; d <= maxd; ++d) {
        auto ia = detail::deg_index(sq.A(), d);
        auto ib = detail::deg_index(sq.B(), d);
        auto ic = detail::deg_index(sq.C(), d);
        auto id_ = detail::deg_index(sq.D(), d);
        int nb = (int)ib.names.size(), nc = (int)ic.names.size();
        // M = [h | k] : B(d)⊕C(d) -> D(d)
        Matrix M((int)id_.names.size(), nb + nc);
        for (int j = 0; j < nb; ++j) {
            auto v = detail::chain_vec(sq.h.image(ib.names[j]), id_);
            for (int i = 0; i < M.rows; ++i) M.at(i, j) = v[i];
        }
        for (int j = 0; j < nc; ++j) {
            auto v = detail::chain_vec(sq.k.image(ic.names[j]), id_);
            for (int i = 0; i < M.rows; ++i) M.at(i, nb + j) = v[i];
        }
        // R = (f; -g) : A(d) -> B(d)⊕C(d)
        Matrix R(nb + nc, (int)ia.names.size());
        for (int j = 0; j < R.cols; ++j) {
            auto vb = detail::chain_vec(sq.f.image(ia.names[j]), ib);
            auto vc = detail::chain_vec(sq.g.image(ia.names[j]), ic);
            for (int i = 0; i < nb; ++i) R.at(i, j) = vb[i];
            for (int i = 0; i < nc; ++i) R.at(nb + i, j) = -vc[i];
        }
        // surjectivity of M with trivial cokernel
        auto sm = linalg::smith(M);
        if (sm.rank != M.rows) return false;
        for (auto& dv : sm.divisors)
            if (dv != 1) return false;
        // ker(M) ⊆ im(R)  (im(R) ⊆ ker(M) holds by commutation)
        for (auto& kv : linalg::kernel(M))
            if (!linalg::solve(R, kv)) return false;
        // monoid generation: each basis element of D is hit exactly
        for (auto& bid : id_.names) {
            Chain want = Chain::unit(d, bid);
            bool hit = false;
            for (int j = 0; j < nb && !hit; ++j)
                if (sq.h.image(ib.names[j]) == want) hit = true;
            for (int j = 0; j < nc && !hit; ++j)
                if (sq.k.image(ic.names[j]) == want) hit = true;
            if (!hit) return false;
        }
    }
    return true;
}

/* Pullback criterion: A -> B×_D C is a degreewise group isomorphism (integer
 * kernel via Hermite), plus bounded monoid surjectivity: every pair of
 * nonnegative chains (b,c) with h(b) = k(c) and coefficient sums <= bound
 * lifts to a nonnegative element of A. */
inline bool is_cartesian(const Square& sq, int bound = 4) {
    sq.validate();
    int maxd = std::max(std::max(sq.A().max_deg(), sq.B().max_deg()), std::max(sq.C().max_deg(), sq.D().max_deg()));
    for (int d = 0; d <= maxd; ++d) {
        auto ia = detail::deg_index(sq.A(), d);
        auto ib = detail::deg_index(sq.B(), d);
        auto ic = detail::deg_index(sq.C(), d);
        auto id_ = detail::deg_index(sq.D(), d);
        int nb = (int)ib.names.size(), nc = (int)ic.names.size();
        // W = [h | -k] : B⊕C -> D ; fiber product = ker(W)
        Matrix W((int)id_.names.size(), nb + nc);
        for (int j = 0; j < nb; ++j) {
            auto v = detail::chain_vec(sq.h.image(ib.names[j]), id_);
            for (int i = 0; i < W.rows; ++i) W.at(i, j) = v[i];
        }
        for (int j = 0; j < nc; ++j) {
            auto v = detail::chain_vec(sq.k.image(ic.names[j]), id_);
            for (int i = 0; i < W.rows; ++i) W.at(i, nb + j) = -v[i];
        }
        // P = (f; g) : A -> B⊕C
        Matrix P(nb + nc, (int)ia.names.size());
        for (int j = 0; j < P.cols; ++j) {
            auto vb = detail::chain_vec(sq.f.image(ia.names[j]), ib);
            auto vc = detail::chain_vec(sq.g.image(ia.names[j]), ic);
            for (int i = 0; i < nb; ++i) P.at(i, j) = vb[i];
            for (int i = 0; i < nc; ++i) P.at(nb + i, j) = vc[i];
        }
        // injectivity of P
        if (linalg::smith(P).rank != P.cols) return false;
        // ker(W) ⊆ im(P)
        for (auto& kv : linalg::kernel(W))
            if (!linalg::solve(P, kv)) return false;
        // bounded monoid surjectivity
        auto bchains = [&](const detail::DegIndex& ix) {
            std::vector<std::vector<Int>> out;
            std::vector<Int> cur(ix.names.size(), 0);
            std::function<void(size_t, int)> rec = [&](size_t i, int left) {
                if (i == cur.size()) {
                    out.push_back(cur);
                    return;
                }
                for (int c = 0; c <= left; ++c) {
                    cur[i] = c;
                    rec(i + 1, left - c);
                }
                cur[i] = 0;
            };
            rec(0, bound);
            return out;
        };
        Matrix HB((int)id_.names.size(), nb), KC((int)id_.names.size(), nc);
        for (int j = 0; j < nb; ++j) {
            auto v = detail::chain_vec(sq.h.image(ib.names[j]), id_);
            for (int i = 0; i < HB.rows; ++i) HB.at(i, j) = v[i];
        }
        for (int j = 0; j < nc; ++j) {
            auto v = detail::chain_vec(sq.k.image(ic.names[j]), id_);
            for (int i = 0; i < KC.rows; ++i) KC.at(i, j) = v[i];
        }
        std::map<std::vector<Int>, std::vector<std::vector<Int>>> by_val;
        for (auto& c : bchains(ic)) by_val[KC.apply(c)].push_back(c);
        for (auto& b : bchains(ib)) {
            auto it = by_val.find(HB.apply(b));
            if (it == by_val.end()) continue;
            for (auto& c : it->second) {
                std::vector<Int> target(nb + nc);
                for (int i = 0; i < nb; ++i) target[i] = b[i];
                for (int i = 0; i < nc; ++i) target[nb + i] = c[i];
                auto sol = linalg::solve(P, target);
                if (!sol) return false;
                // P injective => the solution is unique; it must be nonnegative
                for (auto& x : *sol)
                    if (x < 0) return false;
            }
        }
    }
    return true;
}

/* ---- quasi-rigid basis-level pushout ----------------------------------- */

struct PushoutResult {
    std::shared_ptr<const BasedADC> P;
    ADCMorphism inL, inM;
};

/* Pointed-set pushout of the bases along a span of quasi-rigid morphisms. */
inline PushoutResult pushout_basis(const ADCMorphism& f /* K->L */, const ADCMorphism& g /* K->M */) {
    if (*f.source != *g.source) throw Error("SourceTargetMismatch", "span legs have different sources");
    if (auto r = quasirigid_report(f); !r.ok) throw Error("NotQuasiRigid", "left leg is not quasi-rigid", r.witness);
    if (auto r = quasirigid_report(g); !r.ok) throw Error("NotQuasiRigid", "right leg is not quasi-rigid", r.witness);
    const BasedADC& L = *f.target;
    const BasedADC& M = *g.target;

    // union-find over tagged names plus a zero sink
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) -> std::string {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        std::string r = find(it->second);
        parent[x] = r;
        return r;
    };
    auto unite = [&](const std::string& x, const std::string& y) {
        std::string rx = find(x), ry = find(y);
        if (rx == ry) return;
        if (ry == "0" || (rx != "0" && ry < rx)) std::swap(rx, ry);
        parent[ry] = rx; // keep "0" or the lexicographic minimum as root
    };
    auto tagL = [](const std::string& id) { return "L:" + id; };
    auto tagM = [](const std::string& id) { return "M:" + id; };
    auto single = [](const Chain& x) -> std::string { // "" for zero
        return x.is_zero() ? "" : x.coeffs.begin()->first;
    };
    for (auto& [k, d] : f.source->basis) {
        std::string fb = single(f.image(k)), gb = single(g.image(k));
        if (!fb.empty() && !gb.empty())
            unite(tagL(fb), tagM(gb));
        else if (!fb.empty())
            unite("0", tagL(fb));
        else if (!gb.empty())
            unite("0", tagM(gb));
    }
    // class representative -> surviving basis element of P
    std::map<std::string, std::vector<std::pair<char, std::string>>> members; // root -> (side, id)
    for (auto& [id, d] : L.basis) members[find(tagL(id))].push_back({'L', id});
    for (auto& [id, d] : M.basis) members[find(tagM(id))].push_back({'M', id});
    members.erase(find("0"));

    auto class_of = [&](char side, const std::string& id) -> std::string { // "" if killed
        std::string r = find((side == 'L' ? "L:" : "M:") + id);
        return r == find("0") ? "" : r;
    };
    auto push_chain = [&](char side, const Chain& x) {
        Chain r(x.deg);
        for (auto& [id, c] : x.coeffs) {
            std::string cl = class_of(side, id);
            if (!cl.empty()) r.add(cl, c);
        }
        return r;
    };

    BasedADC P;
    for (auto& [root, mem] : members) {
        int d = mem[0].first == 'L' ? L.deg(mem[0].second) : M.deg(mem[0].second);
        for (auto& [side, id] : mem) {
            const BasedADC& X = side == 'L' ? L : M;
            if (X.deg(id) != d) throw Error("ValidationFailed", "identified elements of different degrees", id);
        }
        P.basis[root] = d;
        // induced differential / augmentation, checked for well-definedness
        bool first = true;
        for (auto& [side, id] : mem) {
            const BasedADC& X = side == 'L' ? L : M;
            if (d == 0) {
                Int e = X.aug.at(id);
                if (first)
                    P.aug[root] = e;
                else if (P.aug[root] != e)
                    throw Error("ValidationFailed", "augmentation not well-defined on class " + root, id);
            } else {
                Chain bd = push_chain(side, X.diff_of(id));
                if (first)
                    P.diff[root] = bd;
                else if (P.diff[root] != bd)
                    throw Error("ValidationFailed", "differential not well-defined on class " + root, id);
            }
            first = false;
        }
    }
    P.validate();

    PushoutResult res;
    res.P = std::make_shared<BasedADC>(std::move(P));
    res.inL.source = f.target;
    res.inL.target = res.P;
    for (auto& [id, d] : L.basis) {
        std::string cl = class_of('L', id);
        if (!cl.empty()) res.inL.map[id] = Chain::unit(d, cl);
    }
    res.inM.source = g.target;
    res.inM.target = res.P;
    for (auto& [id, d] : M.basis) {
        std::string cl = class_of('M', id);
        if (!cl.empty()) res.inM.map[id] = Chain::unit(d, cl);
    }
    res.inL.validate();
    res.inM.validate();
    Square sq{f, g, res.inL, res.inM};
    if (!is_cocartesian(sq)) throw Error("ValidationFailed", "pushout candidate fails the cokernel check");
    return res;
}

/* ---- zigzag colimits --------------------------------------------------- */

/* X_0 <-f_0- Y_0 -g_0-> X_1 <-f_1- Y_1 -g_1-> X_2 ... */
struct Zigzag {
    std::vector<std::shared_ptr<const BasedADC>> objects;
    struct Leg {
        std::shared_ptr<const BasedADC> apex;
        ADCMorphism to_left, to_right; // apex -> objects[i], apex -> objects[i+1]
    };
    std::vector<Leg> legs;

    void validate() const {
        if (objects.empty()) throw Error("ValidationFailed", "zigzag with no objects");
        if (legs.size() + 1 != objects.size()) throw Error("ValidationFailed", "zigzag shape mismatch");
        for (size_t i = 0; i < legs.size(); ++i) {
            if (*legs[i].to_left.source != *legs[i].apex || *legs[i].to_right.source != *legs[i].apex)
                throw Error("SourceTargetMismatch", "zigzag leg source mismatch");
            if (*legs[i].to_left.target != *objects[i] || *legs[i].to_right.target != *objects[i + 1])
                throw Error("SourceTargetMismatch", "zigzag leg target mismatch");
        }
    }
};

struct ZigzagColimit {
    std::shared_ptr<const BasedADC> P;
    std::vector<ADCMorphism> inclusions; // objects[j] -> P
};

/* Degreewise integer cokernel with basis extraction; refuses torsion and
 * non-based results. */
inline ZigzagColimit colim_zigzag(const Zigzag& z) {
    z.validate();
    int maxd = -1;
    for (auto& X : z.objects) maxd = std::max(maxd, X->max_deg());
    for (auto& l : z.legs) maxd = std::max(maxd, l.apex->max_deg());

    struct DegData {
        std::vector<detail::DegIndex> ix;     // per object
        std::vector<int> offset;              // block offsets
        int m = 0;                            // total ambient dimension
        Matrix Ured;                          // class map: last m - rank rows of U
        std::map<std::string, std::vector<Int>> cls; // "j|id" -> class vector
        std::vector<std::string> pnames;      // extracted basis names, in order
        std::map<std::vector<Int>, std::string> by_class;
        Matrix C;                             // columns = class vectors of pnames
    };
    std::vector<DegData> dd(maxd + 1);

    for (int d = 0; d <= maxd; ++d) {
        DegData& D = dd[d];
        for (auto& X : z.objects) {
            D.offset.push_back(D.m);
            D.ix.push_back(detail::deg_index(*X, d));
            D.m += (int)D.ix.back().names.size();
        }
        int ycols = 0;
        std::vector<int> yoff;
        std::vector<detail::DegIndex> yix;
        for (auto& l : z.legs) {
            yoff.push_back(ycols);
            yix.push_back(detail::deg_index(*l.apex, d));
            ycols += (int)yix.back().names.size();
        }
        Matrix A(D.m, ycols);
        for (size_t li = 0; li < z.legs.size(); ++li)
            for (size_t yj = 0; yj < yix[li].names.size(); ++yj) {
                const std::string& y = yix[li].names[yj];
                auto vf = detail::chain_vec(z.legs[li].to_left.image(y), D.ix[li]);
                auto vg = detail::chain_vec(z.legs[li].to_right.image(y), D.ix[li + 1]);
                for (size_t i = 0; i < vf.size(); ++i) A.at(D.offset[li] + (int)i, yoff[li] + (int)yj) += vf[i];
                for (size_t i = 0; i < vg.size(); ++i) A.at(D.offset[li + 1] + (int)i, yoff[li] + (int)yj) -= vg[i];
            }
        auto sm = linalg::smith(A);
        for (auto& dv : sm.divisors)
            if (dv != 1)
                throw Error("TorsionInColimit", "degree " + std::to_string(d) + " has torsion (divisor " + dv.str() + ")");
        int free_rk = D.m - sm.rank;
        D.Ured = Matrix(free_rk, D.m);
        for (int i = 0; i < free_rk; ++i)
            for (int j = 0; j < D.m; ++j) D.Ured.at(i, j) = sm.U.at(sm.rank + i, j);
        // classes of all input basis elements
        for (size_t j = 0; j < z.objects.size(); ++j)
            for (auto& id : D.ix[j].names) {
                std::vector<Int> e(D.m, 0);
                e[D.offset[j] + D.ix[j].pos.at(id)] = 1;
                D.cls[std::to_string(j) + "|" + id] = D.Ured.apply(e);
            }
        // candidate classes: distinct nonzero classes of input basis elements,
        // first-occurrence names
        std::vector<std::string> cand;
        for (size_t j = 0; j < z.objects.size(); ++j)
            for (auto& id : D.ix[j].names) {
                auto& v = D.cls.at(std::to_string(j) + "|" + id);
                bool zero = true;
                for (auto& x : v)
                    if (x != 0) zero = false;
                if (zero) continue;
                if (!D.by_class.count(v)) {
                    std::string name = "X" + std::to_string(j) + "." + id;
                    D.by_class[v] = name;
                    cand.push_back(name);
                }
            }
        if ((int)cand.size() < free_rk)
            throw Error("NoBasisFound", "degree " + std::to_string(d) + ": " + std::to_string(cand.size()) +
                                            " candidate classes for rank " + std::to_string(free_rk));
        std::sort(cand.begin(), cand.end());
        std::map<std::string, std::vector<Int>> nm2cls;
        for (auto& [v, nm] : D.by_class) nm2cls[nm] = v;
        // pick a subset of the candidate classes that is a Z-basis expressing
        // every candidate class nonnegatively (inclusions must stay positive);
        // the surplus is tiny in practice, so plain combinations suffice
        int nc = (int)cand.size();
        std::vector<int> pick(free_rk);
        for (int i = 0; i < free_rk; ++i) pick[i] = i;
        long attempts = 0;
        bool found = false;
        auto try_pick = [&]() -> bool {
            Matrix C(free_rk, free_rk);
            for (int j = 0; j < free_rk; ++j) {
                auto& v = nm2cls.at(cand[pick[j]]);
                for (int i = 0; i < free_rk; ++i) C.at(i, j) = v[i];
            }
            auto sc = linalg::smith(C);
            if (sc.rank != free_rk) return false;
            for (auto& dv : sc.divisors)
                if (dv != 1) return false;
            for (auto& nm : cand) {
                auto sol = linalg::solve(C, nm2cls.at(nm));
                if (!sol) return false;
                for (auto& x : *sol)
                    if (x < 0) return false;
            }
            D.C = C;
            return true;
        };
        while (true) {
            if (++attempts > 100000)
                throw Error("NoBasisFound", "degree " + std::to_string(d) + ": basis search exhausted its attempt cap");
            if (try_pick()) {
                found = true;
                break;
            }
            // next combination in lexicographic order
            int i = free_rk - 1;
            while (i >= 0 && pick[i] == nc - free_rk + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < free_rk; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found && free_rk > 0)
            throw Error("NoBasisFound", "degree " + std::to_string(d) + ": no candidate subset is a positive Z-basis");
        for (int i = 0; i < free_rk; ++i) D.pnames.push_back(cand[pick[i]]);
    }

    // express a class vector in the extracted basis of its degree
    auto express = [&](int d, const std::vector<Int>& v) -> Chain {
        Chain r(d);
        if (dd[d].pnames.empty()) {
            for (auto& x : v)
                if (x != 0) throw Error("NoBasisFound", "nonzero class with empty basis in degree " + std::to_string(d));
            return r;
        }
        auto sol = linalg::solve(dd[d].C, v);
        if (!sol) throw Error("NoBasisFound", "class not expressible in the extracted basis");
        for (size_t i = 0; i < sol->size(); ++i) r.add(dd[d].pnames[i], (*sol)[i]);
        return r;
    };

    BasedADC P;
    for (int d = 0; d <= maxd; ++d)
        for (auto& nm : dd[d].pnames) P.basis[nm] = d;
    // differentials, augmentations, inclusions
    std::vector<ADCMorphism> incs(z.objects.size());
    for (size_t j = 0; j < z.objects.size(); ++j) {
        incs[j].source = z.objects[j];
    }
    std::map<std::string, std::pair<size_t, std::string>> origin; // pname -> (object, id)
    for (int d = 0; d <= maxd; ++d)
        for (size_t j = 0; j < z.objects.size(); ++j)
            for (auto& id : dd[d].ix[j].names) {
                auto& v = dd[d].cls.at(std::to_string(j) + "|" + id);
                auto it = dd[d].by_class.find(v);
                if (it != dd[d].by_class.end() && !origin.count(it->second)) origin[it->second] = {j, id};
            }
    for (int d = 0; d <= maxd; ++d)
        for (auto& nm : dd[d].pnames) {
            auto [j, id] = origin.at(nm);
            const BasedADC& X = *z.objects[j];
            if (d == 0) {
                P.aug[nm] = X.aug.at(id);
            } else {
                // class of ∂id in degree d-1
                std::vector<Int> v(dd[d - 1].m, 0);
                for (auto& [t, c] : X.diff_of(id).coeffs) v[dd[d - 1].offset[j] + dd[d - 1].ix[j].pos.at(t)] = c;
                P.diff[nm] = express(d - 1, dd[d - 1].Ured.apply(v));
            }
        }
    P.validate();
    auto Pp = std::make_shared<const BasedADC>(std::move(P));
    for (size_t j = 0; j < z.objects.size(); ++j) {
        incs[j].target = Pp;
        for (int d = 0; d <= maxd; ++d)
            for (auto& id : dd[d].ix[j].names) {
                Chain im = express(d, dd[d].cls.at(std::to_string(j) + "|" + id));
                if (!im.is_nonnegative())
                    throw Error("NoBasisFound", "positivity image of '" + id + "' leaves the N-span", id);
                if (!im.is_zero()) incs[j].map[id] = im;
            }
        incs[j].validate();
    }
    return {Pp, std::move(incs)};
}

/* ---- isomorphism search ------------------------------------------------ */

/* All basis bijections commuting with ∂ and e, as invertible morphisms.
 * Elements are assigned degree by degree; once all lower elements are fixed,
 * a candidate image must reproduce the mapped differential exactly. */
inline std::vector<ADCMorphism> isos(std::shared_ptr<const BasedADC> Kp, std::shared_ptr<const BasedADC> Lp,
                                     long node_budget = 1000000) {
    const BasedADC& K = *Kp;
    const BasedADC& L = *Lp;
    std::vector<ADCMorphism> out;
    if (K.degree_counts() != L.degree_counts()) return out;
    int maxd = K.max_deg();
    std::vector<std::vector<std::string>> kb(maxd + 1), lb(maxd + 1);
    for (int d = 0; d <= maxd; ++d) {
        kb[d] = K.basis_of_degree(d);
        lb[d] = L.basis_of_degree(d);
    }
    std::map<std::string, std::string> assign; // K id -> L id
    std::set<std::string> used;
    long nodes = 0;
    auto mapped = [&](const Chain& x) {
        Chain r(x.deg);
        for (auto& [id, c] : x.coeffs) r.add(assign.at(id), c);
        return r;
    };
    std::function<void(int, size_t)> rec = [&](int d, size_t i) {
        if (++nodes > node_budget) throw Error("BudgetExceeded", "isomorphism search exceeded its node budget");
        if (d > maxd) {
            ADCMorphism m;
            m.source = Kp;
            m.target = Lp;
            for (auto& [a, b] : assign) m.map[a] = Chain::unit(K.deg(a), b);
            out.push_back(std::move(m));
            return;
        }
        if (i == kb[d].size()) {
            rec(d + 1, 0);
            return;
        }
        const std::string& a = kb[d][i];
        Chain want = d == 0 ? Chain() : mapped(K.diff_of(a));
        for (auto& b : lb[d]) {
            if (used.count(b)) continue;
            if (d == 0) {
                if (K.aug.at(a) != L.aug.at(b)) continue;
            } else {
                Chain lb_ = L.diff_of(b);
                if (lb_ != want) continue;
            }
            assign[a] = b;
            used.insert(b);
            rec(d, i + 1);
            used.erase(b);
            assign.erase(a);
        }
    };
    rec(0, 0);
    return out;
}

} // namespace omegac
