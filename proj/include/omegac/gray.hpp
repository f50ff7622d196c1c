#pragma once

#include <memory>

#include "morphism.hpp"

namespace omegac {

/* A complex with named degree-0 marks (cone tip, suspension poles, ...). */
struct PointedADC {
    std::shared_ptr<const BasedADC> complex;
    std::map<std::string, std::string> marks; // role -> basis id

    const std::string& mark(const std::string& role) const {
        auto it = marks.find(role);
        if (it == marks.end()) throw Error("UnknownBasisElement", "no mark '" + role + "'");
        return it->second;
    }
};

/* λ[1]: the directed segment with basis {0},{1},[1]. */
inline BasedADC interval() {
    BasedADC K;
    K.basis = {{"{0}", 0}, {"{1}", 0}, {"[1]", 1}};
    K.diff["[1]"] = Chain::unit(0, "{1}") - Chain::unit(0, "{0}");
    K.aug = {{"{0}", 1}, {"{1}", 1}};
    return K;
}

/* λD0. */
inline BasedADC point() {
    BasedADC K;
    K.basis = {{"pt", 0}};
    K.aug = {{"pt", 1}};
    return K;
}

/* ---- tensor ------------------------------------------------------------ */

inline std::string tensor_id(const std::string& b, const std::string& c) { return b + "⊗" + c; }

/* Gray tensor: basis b⊗c, ∂(b⊗c) = ∂b⊗c + (-1)^{|b|} b⊗∂c, e(b⊗c)=e(b)e(c). */
inline BasedADC tensor(const BasedADC& K, const BasedADC& L) {
    BasedADC R;
    for (auto& [b, db] : K.basis)
        for (auto& [c, dc] : L.basis) {
            std::string id = tensor_id(b, c);
            int d = db + dc;
            R.basis[id] = d;
            if (d == 0) {
                R.aug[id] = K.aug.at(b) * L.aug.at(c);
            } else {
                Chain bd(d - 1);
                for (auto& [t, co] : K.diff_of(b).coeffs) bd.add(tensor_id(t, c), co);
                Int sign = db % 2 == 0 ? 1 : -1;
                for (auto& [t, co] : L.diff_of(c).coeffs) bd.add(tensor_id(b, t), sign * co);
                R.diff[id] = bd;
            }
        }
    return R;
}

/* Gray cylinder K⊗[1]; basis names b⊗{0}, b⊗{1}, b⊗[1]. */
inline BasedADC cylinder(const BasedADC& K) { return tensor(K, interval()); }

/* End inclusion ι_ε : K → K⊗[1], b ↦ b⊗{ε}. */
inline ADCMorphism cylinder_end(std::shared_ptr<const BasedADC> K, int eps) {
    ADCMorphism f;
    f.source = K;
    f.target = std::make_shared<BasedADC>(cylinder(*K));
    std::string e = eps == 0 ? "{0}" : "{1}";
    for (auto& [b, d] : K->basis) f.map[b] = Chain::unit(d, tensor_id(b, e));
    return f;
}

/* ---- cone / ◦-cone ----------------------------------------------------- */

/* K⋆1: collapse of K⊗{1} in the cylinder.  Basis ∅⋆1 (tip), b⋆∅, b⋆1;
 * ∂(b⋆∅) = ∂b⋆∅; ∂(b⋆1) = e(b)·∅⋆1 - b⋆∅ in degree 0 and
 * ∂b⋆1 + (-1)^{|b|+1} b⋆∅ above (signs derived from the pushout). */
inline PointedADC cone(const BasedADC& K) {
    BasedADC R;
    R.basis["∅⋆1"] = 0;
    R.aug["∅⋆1"] = 1;
    auto base_id = [](const std::string& b) { return b + "⋆∅"; };
    auto side_id = [](const std::string& b) { return b + "⋆1"; };
    for (auto& [b, d] : K.basis) {
        R.basis[base_id(b)] = d;
        if (d == 0)
            R.aug[base_id(b)] = K.aug.at(b);
        else {
            Chain bd(d - 1);
            for (auto& [t, c] : K.diff_of(b).coeffs) bd.add(base_id(t), c);
            R.diff[base_id(b)] = bd;
        }
        R.basis[side_id(b)] = d + 1;
        Chain bd(d);
        if (d == 0) {
            bd.add("∅⋆1", K.aug.at(b));
            bd.add(base_id(b), -1);
        } else {
            for (auto& [t, c] : K.diff_of(b).coeffs) bd.add(side_id(t), c);
            bd.add(base_id(b), d % 2 == 0 ? -1 : 1); // (-1)^{d+1}
        }
        R.diff[side_id(b)] = bd;
    }
    PointedADC P;
    P.complex = std::make_shared<BasedADC>(std::move(R));
    P.marks["tip"] = "∅⋆1";
    return P;
}

/* 1 co⋆ K, via (C⋆1)^◦ ≅ 1 co⋆ C^◦ with the full duality. */
inline PointedADC cocone(const BasedADC& K) {
    PointedADC c = cone(dual(K, Duality::full()));
    PointedADC P;
    P.complex = std::make_shared<BasedADC>(dual(*c.complex, Duality::full()));
    P.marks = c.marks;
    return P;
}

/* Base inclusion K → K⋆1 (resp. K → 1 co⋆ K), b ↦ b⋆∅. */
inline ADCMorphism star_base(std::shared_ptr<const BasedADC> K, const PointedADC& C) {
    ADCMorphism f;
    f.source = K;
    f.target = C.complex;
    for (auto& [b, d] : K->basis) f.map[b] = Chain::unit(d, b + "⋆∅");
    return f;
}

/* ---- suspension -------------------------------------------------------- */

inline std::string susp_id(const std::string& b) { return "[" + b + ",1]"; }

/* [K,1]: poles {0},{1}; [b,1] in degree |b|+1;
 * ∂[b,1] = e(b)({1}-{0}) in degree 1, [∂b,1] above. */
inline PointedADC suspend(const BasedADC& K) {
    BasedADC R;
    R.basis["{0}"] = 0;
    R.basis["{1}"] = 0;
    R.aug["{0}"] = 1;
    R.aug["{1}"] = 1;
    for (auto& [b, d] : K.basis) {
        R.basis[susp_id(b)] = d + 1;
        Chain bd(d);
        if (d == 0) {
            bd.add("{1}", K.aug.at(b));
            bd.add("{0}", -K.aug.at(b));
        } else {
            for (auto& [t, c] : K.diff_of(b).coeffs) bd.add(susp_id(t), c);
        }
        R.diff[susp_id(b)] = bd;
    }
    PointedADC P;
    P.complex = std::make_shared<BasedADC>(std::move(R));
    P.marks["{0}"] = "{0}";
    P.marks["{1}"] = "{1}";
    return P;
}

/* Functoriality of the suspension. */
inline ADCMorphism suspend_morphism(const ADCMorphism& f, const PointedADC& SK, const PointedADC& SL) {
    ADCMorphism r;
    r.source = SK.complex;
    r.target = SL.complex;
    r.map["{0}"] = Chain::unit(0, "{0}");
    r.map["{1}"] = Chain::unit(0, "{1}");
    for (auto& [b, d] : f.source->basis) {
        Chain im(d + 1);
        for (auto& [t, c] : f.image(b).coeffs) im.add(susp_id(t), c);
        r.map[susp_id(b)] = im;
    }
    return r;
}

/* ---- wedges ------------------------------------------------------------ */

enum class Side { Left, Right };

/* [K,1]∨[1] (right) and [1]∨[K,1] (left): poles {0},{1},{2}, a fresh segment
 * e1@wedge, and the shifted copy [b,1] spanning the adjacent poles. */
inline PointedADC wedge(const BasedADC& K, Side side) {
    BasedADC R;
    for (auto* p : {"{0}", "{1}", "{2}"}) {
        R.basis[p] = 0;
        R.aug[p] = 1;
    }
    R.basis["e1@wedge"] = 1;
    const char* lo = side == Side::Right ? "{0}" : "{1}";
    const char* hi = side == Side::Right ? "{1}" : "{2}";
    // the extra segment spans the other pair of adjacent poles
    R.diff["e1@wedge"] = side == Side::Right ? Chain::unit(0, "{2}") - Chain::unit(0, "{1}")
                                             : Chain::unit(0, "{1}") - Chain::unit(0, "{0}");
    for (auto& [b, d] : K.basis) {
        R.basis[susp_id(b)] = d + 1;
        Chain bd(d);
        if (d == 0) {
            bd.add(hi, K.aug.at(b));
            bd.add(lo, -K.aug.at(b));
        } else {
            for (auto& [t, c] : K.diff_of(b).coeffs) bd.add(susp_id(t), c);
        }
        R.diff[susp_id(b)] = bd;
    }
    PointedADC P;
    P.complex = std::make_shared<BasedADC>(std::move(R));
    P.marks["{0}"] = "{0}";
    P.marks["{1}"] = "{1}";
    P.marks["{2}"] = "{2}";
    return P;
}

/* ▽: [K,1] → [K,1]∨[1] (right) or [1]∨[K,1] (left):
 * {0}↦{0}, {1}↦{2}, [b,1] ↦ [b,1] + e(b)·e1@wedge iff |b| = 0. */
inline ADCMorphism whisker(const BasedADC& K, Side side) {
    PointedADC SK = suspend(K);
    PointedADC W = wedge(K, side);
    ADCMorphism f;
    f.source = SK.complex;
    f.target = W.complex;
    f.map["{0}"] = Chain::unit(0, "{0}");
    f.map["{1}"] = Chain::unit(0, "{2}");
    for (auto& [b, d] : K.basis) {
        Chain im = Chain::unit(d + 1, susp_id(b));
        if (d == 0) im.add("e1@wedge", K.aug.at(b));
        f.map[susp_id(b)] = im;
    }
    return f;
}

} // namespace omegac
