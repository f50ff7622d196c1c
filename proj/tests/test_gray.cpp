#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "omegac/checks.hpp"
#include "omegac/colim.hpp"
#include "omegac/gray.hpp"
#include "omegac/theta.hpp"

using namespace omegac;

namespace {

std::shared_ptr<const BasedADC> shared(BasedADC K) {
    return std::make_shared<const BasedADC>(std::move(K));
}

std::vector<int> counts(const BasedADC& K) { return K.degree_counts(); }

} // namespace

TEST_CASE("tensor: unit, counts, Leibniz") {
    BasedADC D1 = globe_adc(1);
    BasedADC T = tensor(D1, interval());
    REQUIRE(counts(T) == std::vector<int>{4, 4, 1});
    T.validate();
    REQUIRE(is_strong_steiner(T));

    // tensoring with the point only renames the basis
    BasedADC P = tensor(point(), D1);
    REQUIRE(counts(P) == counts(D1));
    for (auto& [b, d] : D1.basis) REQUIRE(P.basis.count(tensor_id("pt", b)) == 1);

    // ∂(e1⊗[1]) = e0+⊗[1] − e0-⊗[1] − e1⊗{1} + e1⊗{0}
    Chain want(1);
    want.add(tensor_id("e0+", "[1]"), 1);
    want.add(tensor_id("e0-", "[1]"), -1);
    want.add(tensor_id("e1", "{1}"), -1);
    want.add(tensor_id("e1", "{0}"), 1);
    REQUIRE(T.diff_of(tensor_id("e1", "[1]")) == want);
}

TEST_CASE("tensor is strictly associative on basis names") {
    BasedADC A = globe_adc(1), B = interval(), C = globe_adc(0);
    REQUIRE(tensor(tensor(A, B), C) == tensor(A, tensor(B, C)));
}

TEST_CASE("tensor interacts with the odd-degree duality") {
    // (K⊗L)^op ≅ L^op ⊗ K^op, by the unique isomorphism
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) {
            BasedADC K = globe_adc(a), L = globe_adc(b);
            auto lhs = shared(dual(tensor(K, L), Duality::op()));
            auto rhs = shared(tensor(dual(L, Duality::op()), dual(K, Duality::op())));
            REQUIRE(isos(lhs, rhs).size() == 1);
        }
}

TEST_CASE("cylinder") {
    REQUIRE(cylinder(point()) == tensor(point(), interval()));
    REQUIRE(counts(cylinder(globe_adc(1))) == std::vector<int>{4, 4, 1});
    BasedADC C2 = cylinder(globe_adc(2));
    REQUIRE(C2.basis_of_degree(3) == std::vector<std::string>{tensor_id("e2", "[1]")});
    for (int eps : {0, 1}) {
        ADCMorphism i = cylinder_end(shared(globe_adc(2)), eps);
        i.validate();
    }
}

TEST_CASE("cone matches the pictured triangle") {
    BasedADC D1 = globe_adc(1);
    PointedADC cn = cone(D1);
    const BasedADC& C = *cn.complex;
    C.validate();
    REQUIRE(counts(C) == std::vector<int>{3, 3, 1});
    REQUIRE(cn.mark("tip") == "∅⋆1");
    REQUIRE(is_strong_steiner(C));

    // triangle: objects e0-⋆∅, e0+⋆∅, ∅⋆1; edges e1⋆∅, e0-⋆1, e0+⋆1;
    // the 2-cell e1⋆1 fills it
    REQUIRE(C.diff_of("e1⋆∅") == Chain::unit(0, "e0+⋆∅") - Chain::unit(0, "e0-⋆∅"));
    REQUIRE(C.diff_of("e0-⋆1") == Chain::unit(0, "∅⋆1") - Chain::unit(0, "e0-⋆∅"));
    REQUIRE(C.diff_of("e0+⋆1") == Chain::unit(0, "∅⋆1") - Chain::unit(0, "e0+⋆∅"));
    Chain want(1);
    want.add("e0+⋆1", 1);
    want.add("e0-⋆1", -1);
    want.add("e1⋆∅", 1);
    REQUIRE(C.diff_of("e1⋆1") == want);
}

TEST_CASE("cocone") {
    // cocone of the point is the segment with the tip at the source
    PointedADC cc = cocone(point());
    const BasedADC& C = *cc.complex;
    C.validate();
    REQUIRE(C.diff_of("pt⋆1") == Chain::unit(0, "pt⋆∅") - Chain::unit(0, "∅⋆1"));
    REQUIRE(isos(cc.complex, shared(interval())).size() == 1);

    // cocone = full-dual ∘ cone ∘ full-dual, with identical names
    BasedADC D1 = globe_adc(1);
    REQUIRE(*cocone(D1).complex == dual(*cone(dual(D1, Duality::full())).complex, Duality::full()));
    REQUIRE(is_strong_steiner(*cocone(D1).complex));
}

TEST_CASE("star base inclusions validate") {
    auto D2 = shared(globe_adc(2));
    star_base(D2, cone(*D2)).validate();
    star_base(D2, cocone(*D2)).validate();
}

TEST_CASE("suspension") {
    BasedADC D1 = globe_adc(1);
    PointedADC S = suspend(D1);
    S.complex->validate();

    // explicit isomorphism with the 2-globe
    ADCMorphism f;
    f.source = S.complex;
    f.target = shared(globe_adc(2));
    f.map["{0}"] = Chain::unit(0, "e0-");
    f.map["{1}"] = Chain::unit(0, "e0+");
    f.map[susp_id("e0-")] = Chain::unit(1, "e1-");
    f.map[susp_id("e0+")] = Chain::unit(1, "e1+");
    f.map[susp_id("e1")] = Chain::unit(2, "e2");
    f.validate();
    REQUIRE(isos(S.complex, f.target).size() == 1);

    // suspension of the empty complex: two poles
    PointedADC SE = suspend(BasedADC{});
    REQUIRE(counts(*SE.complex) == std::vector<int>{2});

    REQUIRE(counts(*suspend(lambda_gs(parse_gs("[*,*]"))).complex) == std::vector<int>{2, 3, 2});

    SECTION("functoriality") {
        ADCMorphism g = detail::terminal_morphism(shared(D1), shared(point()));
        ADCMorphism Sg = suspend_morphism(g, S, suspend(point()));
        Sg.validate();
        REQUIRE(Sg.image(susp_id("e1")).is_zero());
        REQUIRE(Sg.image(susp_id("e0-")) == Chain::unit(1, susp_id("pt")));
    }
}

TEST_CASE("wedges") {
    // wedge of the point: two composable segments
    PointedADC WR = wedge(point(), Side::Right);
    WR.complex->validate();
    REQUIRE(isos(WR.complex, shared(lambda_gs(parse_gs("[*,*]")))).size() == 1);
    REQUIRE(WR.complex->diff_of("e1@wedge") == Chain::unit(0, "{2}") - Chain::unit(0, "{1}"));
    REQUIRE(WR.complex->diff_of(susp_id("pt")) == Chain::unit(0, "{1}") - Chain::unit(0, "{0}"));

    PointedADC WL = wedge(point(), Side::Left);
    WL.complex->validate();
    REQUIRE(WL.complex->diff_of("e1@wedge") == Chain::unit(0, "{1}") - Chain::unit(0, "{0}"));
    REQUIRE(WL.complex->diff_of(susp_id("pt")) == Chain::unit(0, "{2}") - Chain::unit(0, "{1}"));

    BasedADC D1 = globe_adc(1);
    for (Side s : {Side::Left, Side::Right}) {
        PointedADC W = wedge(D1, s);
        W.complex->validate();
        REQUIRE(counts(*W.complex) == std::vector<int>{3, 3, 1});
        REQUIRE(W.complex->basis_of_degree(2) == std::vector<std::string>{susp_id("e1")});
        REQUIRE(is_strong_steiner(*W.complex));
    }
}

TEST_CASE("whiskerings") {
    for (Side s : {Side::Left, Side::Right}) {
        ADCMorphism w = whisker(point(), s);
        w.validate();
        REQUIRE(w.image("{0}") == Chain::unit(0, "{0}"));
        REQUIRE(w.image("{1}") == Chain::unit(0, "{2}"));
        Chain want(1);
        want.add(susp_id("pt"), 1);
        want.add("e1@wedge", 1);
        REQUIRE(w.image(susp_id("pt")) == want);
    }
    ADCMorphism w1 = whisker(globe_adc(1), Side::Left);
    w1.validate();
    // the |x| > 0 clause: no wedge segment added
    REQUIRE(w1.image(susp_id("e1")) == Chain::unit(2, susp_id("e1")));
    // never quasi-rigid when the base has an object
    REQUIRE_FALSE(quasirigid_report(w1).ok);
}

TEST_CASE("all constructors produce valid strong Steiner complexes") {
    std::vector<std::string> exprs = {"*", "[*]", "[[*]]", "[*,*]", "[[*],*]", "[[[*,*]],*]"};
    std::mt19937 rng(std::getenv("OMEGAC_SEED") ? (unsigned)std::atoi(std::getenv("OMEGAC_SEED")) : 20240u);
    std::shuffle(exprs.begin(), exprs.end(), rng);
    for (const std::string& e : exprs) {
        INFO(e);
        BasedADC K = lambda_gs(parse_gs(e));
        for (BasedADC out : {tensor(K, interval()), *cone(K).complex, *cocone(K).complex,
                             *suspend(K).complex, *wedge(K, Side::Left).complex,
                             *wedge(K, Side::Right).complex}) {
            out.validate();
            REQUIRE(is_strong_steiner(out));
        }
        whisker(K, Side::Left).validate();
        whisker(K, Side::Right).validate();
    }
}
