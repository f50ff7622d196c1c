#pragma once

#include <memory>

#include "adc.hpp"

namespace omegac {

/* Morphism of based ADCs.  The map sends each source basis element to a
 * nonnegative chain of the same degree in the target (f(K*) ⊆ L*); absent
 * entries mean 0.  Source and target are shared immutable values. */
struct ADCMorphism {
    std::shared_ptr<const BasedADC> source;
    std::shared_ptr<const BasedADC> target;
    std::map<std::string, Chain> map;

    const Chain& image(const std::string& id) const {
        static const Chain zero;
        auto it = map.find(id);
        return it == map.end() ? zero : it->second;
    }

    Chain apply(const Chain& x) const {
        Chain r(x.deg);
        for (auto& [id, c] : x.coeffs) r += c * image(id);
        if (r.is_zero()) r.deg = x.deg;
        return r;
    }

    SteinerArray apply(const SteinerArray& a) const {
        SteinerArray r = a;
        for (auto& row : r.rows) {
            row.first = apply(row.first);
            row.second = apply(row.second);
        }
        return r;
    }

    /* Degree preservation, positivity, ∂- and e-commutation per generator. */
    void validate() const {
        for (auto& [id, x] : map) {
            int d = source->deg(id);
            if (!x.is_zero() && x.deg != d)
                throw Error("NotChainMap", "image of '" + id + "' has wrong degree", id);
            for (auto& [tid, c] : x.coeffs) {
                if (target->deg(tid) != d)
                    throw Error("NotChainMap", "image of '" + id + "' mentions '" + tid + "' of wrong degree", id);
                if (c < 0) throw Error("NotPositive", "negative coefficient in image of '" + id + "'", id);
            }
        }
        for (auto& [id, d] : source->basis) {
            if (d == 0) {
                Chain im = image(id);
                im.deg = 0;
                if (target->augment(im) != source->aug.at(id))
                    throw Error("NotAugmented", "e(f('" + id + "')) ≠ e('" + id + "')", id);
            } else {
                Chain im = image(id);
                im.deg = d;
                Chain lhs = target->boundary(im);
                Chain rhs = apply(source->diff_of(id));
                if (lhs != rhs)
                    throw Error("NotChainMap", "f∂ ≠ ∂f on '" + id + "': ∂f = " + lhs.str() + ", f∂ = " + rhs.str(), id);
            }
        }
    }

    bool operator==(const ADCMorphism& o) const {
        auto norm = [](const ADCMorphism& m) {
            std::map<std::string, Chain> r;
            for (auto& [id, x] : m.map)
                if (!x.is_zero()) r.emplace(id, x);
            return r;
        };
        return *source == *o.source && *target == *o.target && norm(*this) == norm(o);
    }
    bool operator!=(const ADCMorphism& o) const { return !(*this == o); }
};

inline ADCMorphism identity_morphism(std::shared_ptr<const BasedADC> K) {
    ADCMorphism f;
    f.source = f.target = K;
    for (auto& [id, d] : K->basis) f.map.emplace(id, Chain::unit(d, id));
    return f;
}

inline ADCMorphism compose_morphism(const ADCMorphism& g, const ADCMorphism& f) {
    if (*f.target != *g.source)
        throw Error("SourceTargetMismatch", "composite of morphisms with mismatched middle object");
    ADCMorphism r;
    r.source = f.source;
    r.target = g.target;
    for (auto& [id, x] : f.map) {
        Chain im = g.apply(x);
        if (!im.is_zero()) r.map.emplace(id, im);
    }
    return r;
}

struct QuasiRigidReport {
    bool ok = true;
    std::string witness;
};

/* f is quasi-rigid iff every basis element maps to 0 or to a single basis
 * element with coefficient 1 whose atom table is the image of the source's. */
inline QuasiRigidReport quasirigid_report(const ADCMorphism& f) {
    if (!is_strong_steiner(*f.source) || !is_strong_steiner(*f.target))
        throw Error("PreconditionViolated", "quasi-rigidity requires strong Steiner source and target");
    for (auto& [id, d] : f.source->basis) {
        const Chain& im = f.image(id);
        if (im.is_zero()) continue;
        if (im.coeffs.size() != 1 || im.coeffs.begin()->second != 1) return {false, id};
        const std::string& t = im.coeffs.begin()->first;
        if (f.apply(atom(*f.source, id)) != atom(*f.target, t)) return {false, id};
    }
    return {};
}

inline bool is_quasirigid(const ADCMorphism& f) { return quasirigid_report(f).ok; }

} // namespace omegac
