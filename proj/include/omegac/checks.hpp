#pragma once

#include <chrono>

#include "colim.hpp"
#include "gray.hpp"
#include "theta.hpp"
#include "twodim.hpp"

namespace omegac {

struct CheckReport {
    std::string name;
    std::string target;
    std::string verdict; // "pass" | "fail" | "skipped"
    std::string witness; // mandatory on fail
    double wall_ms = 0.0;

    bool passed() const { return verdict == "pass"; }
};

/* Size caps that keep every check interactive. */
struct Caps {
    int max_dim = 3;
    int max_basis = 64;
    long iso_budget = 1000000;
};

namespace detail {

template <class F>
inline CheckReport timed(const std::string& name, const std::string& target, F&& body) {
    CheckReport r;
    r.name = name;
    r.target = target;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
        if (r.verdict.empty()) r.verdict = "pass";
    } catch (const Error& e) {
        if (e.kind == "BudgetExceeded" || e.kind == "NoBasisFound" || e.kind == "TorsionInColimit") {
            r.verdict = e.kind == "BudgetExceeded" ? "skipped" : "fail";
            r.witness = std::string(e.what());
        } else {
            r.verdict = "fail";
            r.witness = std::string(e.what());
        }
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline bool cap_check(CheckReport& r, const BasedADC& K, const Caps& caps) {
    if (K.max_deg() > caps.max_dim) {
        r.verdict = "skipped";
        r.witness = "dimension cap exceeded";
        return false;
    }
    if ((int)K.basis.size() > caps.max_basis) {
        r.verdict = "skipped";
        r.witness = "basis size cap exceeded";
        return false;
    }
    return true;
}

/* Re-validate an isomorphism certificate: well-formed chain map in both
 * directions, composing to identities. */
inline bool certify_iso(const ADCMorphism& f) {
    f.validate();
    // invert on the basis (each image is a single basis element for isos())
    ADCMorphism g;
    g.source = f.target;
    g.target = f.source;
    for (auto& [a, c] : f.map) {
        if (c.coeffs.size() != 1 || c.coeffs.begin()->second != 1) return false;
        g.map[c.coeffs.begin()->first] = Chain::unit(f.source->deg(a), a);
    }
    if (g.map.size() != f.target->basis.size()) return false;
    g.validate();
    return compose_morphism(g, f) == identity_morphism(f.source) &&
           compose_morphism(f, g) == identity_morphism(f.target);
}

/* Unique-isomorphism comparison used by the formula checks. */
inline void expect_unique_iso(CheckReport& r, std::shared_ptr<const BasedADC> X, std::shared_ptr<const BasedADC> Y,
                              const Caps& caps, const std::string& what) {
    auto is = isos(X, Y, caps.iso_budget);
    if (is.size() != 1) {
        r.verdict = "fail";
        r.witness = what + ": " + std::to_string(is.size()) + " isomorphisms found";
        return;
    }
    if (!certify_iso(is[0])) {
        r.verdict = "fail";
        r.witness = what + ": certificate failed re-validation";
    }
}

/* b ↦ e(b)·pt in degree 0, 0 above. */
inline ADCMorphism terminal_morphism(std::shared_ptr<const BasedADC> K, std::shared_ptr<const BasedADC> pt) {
    ADCMorphism f;
    f.source = K;
    f.target = pt;
    std::string p = pt->basis.begin()->first;
    for (auto& [b, d] : K->basis)
        if (d == 0) f.map[b] = Int(K->aug.at(b)) * Chain::unit(0, p);
        else f.map[b] = Chain(d);
    f.validate();
    return f;
}

} // namespace detail

/* λDₙ with the conventional generator names: ek-, ek+ for k < n and en on
 * top; ∂(ek±) = e(k-1)+ − e(k-1)-. */
inline BasedADC globe_adc(int n) {
    BasedADC K;
    auto gen = [](int k, int sign) { return "e" + std::to_string(k) + (sign < 0 ? "-" : "+"); };
    auto bd = [&](int k) {
        Chain c(k);
        c.add(gen(k, +1), 1);
        c.add(gen(k, -1), -1);
        return c;
    };
    for (int k = 0; k < n; ++k)
        for (int s : {-1, +1}) {
            K.basis[gen(k, s)] = k;
            if (k == 0)
                K.aug[gen(k, s)] = 1;
            else
                K.diff[gen(k, s)] = bd(k - 1);
        }
    std::string top = "e" + std::to_string(n);
    K.basis[top] = n;
    if (n == 0)
        K.aug[top] = 1;
    else
        K.diff[top] = bd(n - 1);
    K.validate();
    return K;
}

/* ---- quotient and comparison morphisms around the cylinder -------------- */

/* q: C⊗[1] → C⋆1 collapsing the {1} end. */
inline ADCMorphism cone_quotient(std::shared_ptr<const BasedADC> cyl, std::shared_ptr<const BasedADC> cn,
                                 const BasedADC& C) {
    ADCMorphism f;
    f.source = cyl;
    f.target = cn;
    for (auto& [b, d] : C.basis) {
        f.map[tensor_id(b, "{0}")] = Chain::unit(d, b + "⋆∅");
        f.map[tensor_id(b, "{1}")] = d == 0 ? Int(C.aug.at(b)) * Chain::unit(0, "∅⋆1") : Chain(d);
        f.map[tensor_id(b, "[1]")] = Chain::unit(d + 1, b + "⋆1");
    }
    f.validate();
    return f;
}

/* q′: C⊗[1] → 1 co⋆ C collapsing the {0} end. */
inline ADCMorphism cocone_quotient(std::shared_ptr<const BasedADC> cyl, std::shared_ptr<const BasedADC> ccn,
                                   const BasedADC& C) {
    ADCMorphism f;
    f.source = cyl;
    f.target = ccn;
    for (auto& [b, d] : C.basis) {
        f.map[tensor_id(b, "{1}")] = Chain::unit(d, b + "⋆∅");
        f.map[tensor_id(b, "{0}")] = d == 0 ? Int(C.aug.at(b)) * Chain::unit(0, "∅⋆1") : Chain(d);
        f.map[tensor_id(b, "[1]")] = Chain::unit(d + 1, b + "⋆1");
    }
    f.validate();
    return f;
}

/* r: C⋆1 → [C,1] collapsing the base. */
inline ADCMorphism cone_to_suspension(std::shared_ptr<const BasedADC> cn, std::shared_ptr<const BasedADC> sus,
                                      const BasedADC& C) {
    ADCMorphism f;
    f.source = cn;
    f.target = sus;
    f.map["∅⋆1"] = Chain::unit(0, "{1}");
    for (auto& [b, d] : C.basis) {
        f.map[b + "⋆∅"] = d == 0 ? Int(C.aug.at(b)) * Chain::unit(0, "{0}") : Chain(d);
        f.map[b + "⋆1"] = Chain::unit(d + 1, susp_id(b));
    }
    f.validate();
    return f;
}

/* r′: 1 co⋆ C → [C,1] collapsing the base. */
inline ADCMorphism cocone_to_suspension(std::shared_ptr<const BasedADC> ccn, std::shared_ptr<const BasedADC> sus,
                                        const BasedADC& C) {
    ADCMorphism f;
    f.source = ccn;
    f.target = sus;
    f.map["∅⋆1"] = Chain::unit(0, "{0}");
    for (auto& [b, d] : C.basis) {
        f.map[b + "⋆∅"] = d == 0 ? Int(C.aug.at(b)) * Chain::unit(0, "{1}") : Chain(d);
        f.map[b + "⋆1"] = Chain::unit(d + 1, susp_id(b));
    }
    f.validate();
    return f;
}

/* ---- check: cylinder formula ------------------------------------------- */

/* [A,1]⊗[1] ≅ colim( [1]∨[A,1] ← [A,1] → [A⊗[1],1] ← [A,1] → [A,1]∨[1] ),
 * legs: whiskerings on the outside, suspended end inclusions in the middle. */
inline CheckReport check_cylinder_formula(const GlobularSum& g, const Caps& caps = {}) {
    return detail::timed("cylinder-formula", gs_to_string(g), [&](CheckReport& r) {
        auto A = std::make_shared<BasedADC>(lambda_gs(g));
        if (!detail::cap_check(r, *A, caps)) return;
        PointedADC SA = suspend(*A);
        auto cylA = std::make_shared<BasedADC>(cylinder(*A));
        PointedADC SCyl = suspend(*cylA);

        Zigzag z;
        z.objects = {wedge(*A, Side::Left).complex, SCyl.complex, wedge(*A, Side::Right).complex};
        Zigzag::Leg l0, l1;
        l0.apex = SA.complex;
        l0.to_left = whisker(*A, Side::Left);
        l0.to_right = suspend_morphism(cylinder_end(A, 0), SA, SCyl);
        l1.apex = SA.complex;
        l1.to_left = suspend_morphism(cylinder_end(A, 1), SA, SCyl);
        l1.to_right = whisker(*A, Side::Right);
        z.legs = {std::move(l0), std::move(l1)};

        auto col = colim_zigzag(z);
        auto lhs = std::make_shared<BasedADC>(tensor(*SA.complex, interval()));
        detail::expect_unique_iso(r, lhs, col.P, caps, "[A,1]⊗[1] vs zigzag colimit");
    });
}

/* ---- check: cone / ◦-cone formulas -------------------------------------- */

/* 1 co⋆ [C,1] ≅ colim( [1]∨[C,1] ← [C,1] → [C⋆1,1] )  and
 * [C,1]⋆1 ≅ colim( [1 co⋆ C,1] ← [C,1] → [C,1]∨[1] ). */
inline CheckReport check_star_formulas(const GlobularSum& g, const Caps& caps = {}) {
    return detail::timed("star-formulas", gs_to_string(g), [&](CheckReport& r) {
        auto C = std::make_shared<BasedADC>(lambda_gs(g));
        if (!detail::cap_check(r, *C, caps)) return;
        PointedADC SC = suspend(*C);

        {
            PointedADC cn = cone(*C);
            PointedADC SCone = suspend(*cn.complex);
            Zigzag z;
            z.objects = {wedge(*C, Side::Left).complex, SCone.complex};
            Zigzag::Leg l;
            l.apex = SC.complex;
            l.to_left = whisker(*C, Side::Left);
            l.to_right = suspend_morphism(star_base(C, cn), SC, SCone);
            z.legs = {std::move(l)};
            auto col = colim_zigzag(z);
            auto lhs = cocone(*SC.complex).complex;
            detail::expect_unique_iso(r, std::const_pointer_cast<const BasedADC>(lhs), col.P, caps,
                                      "1co⋆[C,1] vs zigzag colimit");
            if (r.verdict == "fail") return;
        }
        {
            PointedADC ccn = cocone(*C);
            PointedADC SCocone = suspend(*ccn.complex);
            Zigzag z;
            z.objects = {SCocone.complex, wedge(*C, Side::Right).complex};
            Zigzag::Leg l;
            l.apex = SC.complex;
            l.to_left = suspend_morphism(star_base(C, ccn), SC, SCocone);
            l.to_right = whisker(*C, Side::Right);
            z.legs = {std::move(l)};
            auto col = colim_zigzag(z);
            auto lhs = cone(*SC.complex).complex;
            detail::expect_unique_iso(r, std::const_pointer_cast<const BasedADC>(lhs), col.P, caps,
                                      "[C,1]⋆1 vs zigzag colimit");
        }
    });
}

/* ---- check: explicit globe cylinders ------------------------------------ */

/* π∓(e^ε_j⊗[1]) as a whiskered composite of lower cylinder generators; it
 * must evaluate to the corresponding boundary of the atom of e^ε_j⊗[1]. */
inline CheckReport check_globe_cylinder(int n, const Caps& caps = {}) {
    return detail::timed("globe-cylinder", "D" + std::to_string(n), [&](CheckReport& r) {
        if (n > caps.max_dim) {
            r.verdict = "skipped";
            r.witness = "dimension cap exceeded";
            return;
        }
        BasedADC G = globe_adc(n);
        auto cyl = std::make_shared<const BasedADC>(cylinder(G));
        auto gen = [](int k, int sign) { return "e" + std::to_string(k) + (sign < 0 ? "-" : "+"); };
        auto top_gen = [&](int j, int sign) { return j == n ? "e" + std::to_string(n) : gen(j, sign); };
        // pattern 0: even levels whisker on the (left,+) side, odd on (right,-);
        // pattern 1 swaps.
        auto run_pattern = [&](Cell X, int j, int which) {
            for (int i = 0; i < j; ++i) {
                bool leftplus = which == 0 ? i % 2 == 0 : i % 2 == 1;
                std::string seg = tensor_id(top_gen(i, leftplus ? +1 : -1), "[1]");
                Cell side = unit_cell(atom_cell(cyl, seg), j);
                X = leftplus ? compose_cells(side, X, i) : compose_cells(X, side, i);
            }
            return X;
        };
        for (int j = 0; j <= n; ++j)
            for (int s : {-1, +1}) {
                if (j == n && s == +1) continue; // single top generator
                std::string b = top_gen(j, s);
                Cell whole = atom_cell(cyl, tensor_id(b, "[1]"));
                // π⁻
                {
                    std::string end = j % 2 == 0 ? "{0}" : "{1}";
                    int which = j % 2 == 0 ? 0 : 1;
                    Cell got = run_pattern(unit_cell(atom_cell(cyl, tensor_id(b, end)), j), j, which);
                    if (got != boundary(whole, j, -1)) {
                        r.verdict = "fail";
                        r.witness = "π⁻(" + b + "⊗[1]) does not match the atom boundary";
                        return;
                    }
                }
                // π⁺
                {
                    std::string end = j % 2 == 0 ? "{1}" : "{0}";
                    int which = j % 2 == 0 ? 1 : 0;
                    Cell got = run_pattern(unit_cell(atom_cell(cyl, tensor_id(b, end)), j), j, which);
                    if (got != boundary(whole, j, +1)) {
                        r.verdict = "fail";
                        r.witness = "π⁺(" + b + "⊗[1]) does not match the atom boundary";
                        return;
                    }
                }
            }
    });
}

/* ---- check: the square battery ------------------------------------------ */

inline CheckReport check_squares(const GlobularSum& g, const Caps& caps = {}, int bound = 4) {
    return detail::timed("squares", gs_to_string(g), [&](CheckReport& r) {
        auto C = std::make_shared<BasedADC>(lambda_gs(g));
        if (!detail::cap_check(r, *C, caps)) return;
        auto pt = std::make_shared<const BasedADC>(point());
        auto cyl = std::make_shared<const BasedADC>(cylinder(*C));
        PointedADC cnP = cone(*C), ccnP = cocone(*C), susP = suspend(*C);
        auto cn = cnP.complex;
        auto ccn = ccnP.complex;
        auto sus = susP.complex;

        ADCMorphism i0 = cylinder_end(C, 0);
        i0.target = cyl;
        ADCMorphism i1 = cylinder_end(C, 1);
        i1.target = cyl;
        ADCMorphism toPt = detail::terminal_morphism(C, pt);
        ADCMorphism q = cone_quotient(cyl, cn, *C);
        ADCMorphism qp = cocone_quotient(cyl, ccn, *C);
        ADCMorphism rr = cone_to_suspension(cn, sus, *C);
        ADCMorphism rp = cocone_to_suspension(ccn, sus, *C);
        auto pt_to = [&](std::shared_ptr<const BasedADC> T, const std::string& img) {
            ADCMorphism f;
            f.source = pt;
            f.target = std::move(T);
            f.map["pt"] = Chain::unit(0, img);
            f.validate();
            return f;
        };

        struct Named {
            const char* name;
            Square sq;
            bool both; // cocartesian and cartesian vs cartesian only
        };
        std::vector<Named> battery;
        battery.push_back({"cylinder-to-cone", Square{i1, toPt, q, pt_to(cn, "∅⋆1")}, true});
        battery.push_back({"cylinder-to-cocone", Square{i0, toPt, qp, pt_to(ccn, "∅⋆1")}, true});
        battery.push_back({"cone-to-suspension", Square{star_base(C, cnP), toPt, rr, pt_to(sus, "{0}")}, true});
        battery.push_back({"cocone-to-suspension", Square{star_base(C, ccnP), toPt, rp, pt_to(sus, "{1}")}, true});
        battery.push_back({"cone-cocone-to-suspension", Square{q, qp, rr, rp}, true});
        for (auto& b : battery) {
            if (b.both && !is_cocartesian(b.sq)) {
                r.verdict = "fail";
                r.witness = std::string(b.name) + ": not cocartesian";
                return;
            }
            if (!is_cartesian(b.sq, bound)) {
                r.verdict = "fail";
                r.witness = std::string(b.name) + ": not cartesian at bound " + std::to_string(bound);
                return;
            }
        }

        /* Slice squares: the fiber of C⋆1 → [C,1] over the pole {1} is the
         * tip, and likewise for 1co⋆C over {0}.  On chain groups the maps
         * have extra kernel (the base is collapsed above degree 0), so this
         * is a statement about cells: every cell that maps to a unit on the
         * pole is a unit on the tip.  Checked by bounded enumeration. */
        auto unit_array = [](const std::string& id, int dim) {
            SteinerArray a;
            a.dim = dim;
            a.rows.push_back({Chain::unit(0, id), Chain::unit(0, id)});
            for (int i = 1; i <= dim; ++i) a.rows.push_back({Chain(i), Chain(i)});
            return a;
        };
        struct Slice {
            const char* name;
            std::shared_ptr<const BasedADC> src;
            const ADCMorphism* to_sus;
            const char* pole;
        };
        for (const Slice& s : {Slice{"slice-cone", cn, &rr, "{1}"}, Slice{"slice-cocone", ccn, &rp, "{0}"}})
            for (int dim = 0; dim <= s.src->max_deg(); ++dim) {
                SteinerArray pole_unit = unit_array(s.pole, dim);
                SteinerArray tip_unit = unit_array("∅⋆1", dim);
                for (const Cell& x : enumerate_cells(s.src, dim, std::min(bound, 3)))
                    if (s.to_sus->apply(x.array).rows == pole_unit.rows && x.array.rows != tip_unit.rows) {
                        r.verdict = "fail";
                        r.witness = std::string(s.name) + ": fiber over the pole contains a non-unit cell";
                        return;
                    }
            }

        // suspension pushout: C ⊔ C → C⊗[1] over 1 ⊔ 1 gives [C,1]
        auto ends = std::make_shared<BasedADC>();
        auto two = std::make_shared<BasedADC>();
        for (auto* e : {"{0}", "{1}"}) {
            two->basis[e] = 0;
            two->aug[e] = 1;
        }
        for (auto& [b, d] : C->basis)
            for (auto* e : {"{0}", "{1}"}) {
                std::string id = tensor_id(b, e);
                ends->basis[id] = d;
                if (d == 0)
                    ends->aug[id] = C->aug.at(b);
                else {
                    Chain bd(d - 1);
                    for (auto& [t, c] : C->diff_of(b).coeffs) bd.add(tensor_id(t, e), c);
                    ends->diff[id] = bd;
                }
            }
        ends->validate();
        ADCMorphism inc;
        inc.source = ends;
        inc.target = cyl;
        for (auto& [id, d] : ends->basis) inc.map[id] = Chain::unit(d, id);
        inc.validate();
        ADCMorphism collapse;
        collapse.source = ends;
        collapse.target = two;
        for (auto& [b, d] : C->basis)
            for (auto* e : {"{0}", "{1}"})
                collapse.map[tensor_id(b, e)] = d == 0 ? Int(C->aug.at(b)) * Chain::unit(0, e) : Chain(d);
        collapse.validate();
        ADCMorphism poles;
        poles.source = two;
        poles.target = sus;
        poles.map["{0}"] = Chain::unit(0, "{0}");
        poles.map["{1}"] = Chain::unit(0, "{1}");
        poles.validate();
        Square susSq{inc, collapse, compose_morphism(rr, q), poles};
        if (!is_cocartesian(susSq)) {
            r.verdict = "fail";
            r.witness = "suspension pushout: not cocartesian";
        }
    });
}

/* ---- check: Θ hom-set counts vs ν-cell counts --------------------------- */

inline CheckReport check_theta_counts(const GlobularSum& g, int nmax, const Caps& caps = {}) {
    return detail::timed("theta-counts", gs_to_string(g), [&](CheckReport& r) {
        auto K = std::make_shared<const BasedADC>(lambda_gs(g));
        if (!detail::cap_check(r, *K, caps)) return;
        int bound = (int)K->basis.size();
        for (int n = 0; n <= nmax; ++n) {
            size_t cells = enumerate_cells(K, n, bound).size();
            size_t homs = enumerate_hom(globe_gs(n), g).size();
            if (cells != homs) {
                r.verdict = "fail";
                r.witness = "n=" + std::to_string(n) + ": " + std::to_string(cells) + " cells vs " +
                            std::to_string(homs) + " hom maps";
                return;
            }
        }
    });
}

/* ---- suite -------------------------------------------------------------- */

struct SuiteConfig {
    std::vector<std::string> fixtures = {"*", "[*]", "[[*]]", "[*,*]", "[[*],*]", "[[[*,*]],*]"};
    std::vector<std::string> small_fixtures = {"*", "[*]", "[[*]]", "[*,*]", "[[*],*]"};
    std::vector<std::string> square_fixtures = {"*", "[*]", "[[*]]"};
    int globes_max = 3;
    int counts_nmax = 2;
    Caps caps;
};

inline std::vector<CheckReport> run_suite(const SuiteConfig& cfg = {}) {
    std::vector<CheckReport> out;
    for (int n = 0; n <= cfg.globes_max; ++n) out.push_back(check_globe_cylinder(n, cfg.caps));
    for (auto& s : cfg.small_fixtures) out.push_back(check_cylinder_formula(parse_gs(s), cfg.caps));
    for (auto& s : cfg.small_fixtures) out.push_back(check_star_formulas(parse_gs(s), cfg.caps));
    for (auto& s : cfg.square_fixtures) out.push_back(check_squares(parse_gs(s), cfg.caps));
    for (auto& s : cfg.fixtures) out.push_back(check_theta_counts(parse_gs(s), cfg.counts_nmax, cfg.caps));
    return out;
}

} // namespace omegac
