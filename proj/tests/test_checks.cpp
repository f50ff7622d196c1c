#include <catch2/catch_amalgamated.hpp>

#include "omegac/checks.hpp"

using namespace omegac;

TEST_CASE("globe cylinder composites") {
    for (int n = 0; n <= 3; ++n) {
        CheckReport r = check_globe_cylinder(n);
        INFO(r.witness);
        REQUIRE(r.verdict == "pass");
    }
    // cap: skipped, not failed
    Caps caps;
    caps.max_dim = 1;
    REQUIRE(check_globe_cylinder(2, caps).verdict == "skipped");
}

TEST_CASE("cylinder formula on small fixtures") {
    for (const char* g : {"*", "[*]", "[*,*]"}) {
        CheckReport r = check_cylinder_formula(parse_gs(g));
        INFO(g << ": " << r.witness);
        REQUIRE(r.verdict == "pass");
    }
}

TEST_CASE("star formulas on small fixtures") {
    for (const char* g : {"*", "[*]"}) {
        CheckReport r = check_star_formulas(parse_gs(g));
        INFO(g << ": " << r.witness);
        REQUIRE(r.verdict == "pass");
    }
}

TEST_CASE("square battery on small fixtures") {
    for (const char* g : {"*", "[*]"}) {
        CheckReport r = check_squares(parse_gs(g));
        INFO(g << ": " << r.witness);
        REQUIRE(r.verdict == "pass");
    }
}

TEST_CASE("theta count comparison") {
    for (const char* g : {"*", "[*]", "[[*]]", "[*,*]", "[[*],*]"}) {
        CheckReport r = check_theta_counts(parse_gs(g), 2);
        INFO(g << ": " << r.witness);
        REQUIRE(r.verdict == "pass");
    }
}

TEST_CASE("report plumbing") {
    CheckReport f = detail::timed("x", "y", [](CheckReport&) { throw Error("NoBasisFound", "no basis"); });
    REQUIRE(f.verdict == "fail");
    REQUIRE_FALSE(f.witness.empty());

    CheckReport s = detail::timed("x", "y", [](CheckReport&) { throw Error("BudgetExceeded", "over budget"); });
    REQUIRE(s.verdict == "skipped");

    CheckReport p = detail::timed("x", "y", [](CheckReport&) {});
    REQUIRE(p.verdict == "pass");
    REQUIRE(p.wall_ms >= 0.0);
}

TEST_CASE("a corrupted comparison map is caught, not absorbed") {
    // flip the cone quotient on the {1} end: no longer a chain map
    auto C = std::make_shared<BasedADC>(globe_adc(1));
    auto cyl = std::make_shared<const BasedADC>(cylinder(*C));
    auto cn = cone(*C).complex;
    ADCMorphism q;
    q.source = cyl;
    q.target = cn;
    for (auto& [b, d] : C->basis) {
        q.map[tensor_id(b, "{0}")] = d == 0 ? Int(C->aug.at(b)) * Chain::unit(0, "∅⋆1") : Chain(d);
        q.map[tensor_id(b, "{1}")] = Chain::unit(d, b + "⋆∅"); // swapped roles
        q.map[tensor_id(b, "[1]")] = Chain::unit(d + 1, b + "⋆1");
    }
    REQUIRE_THROWS_AS(q.validate(), Error);
}

TEST_CASE("reduced suite runs clean") {
    SuiteConfig cfg;
    cfg.fixtures = {"*", "[*]"};
    cfg.small_fixtures = {"*", "[*]"};
    cfg.square_fixtures = {"*"};
    cfg.globes_max = 2;
    cfg.counts_nmax = 2;
    for (const CheckReport& r : run_suite(cfg)) {
        INFO(r.name << " @ " << r.target << ": " << r.witness);
        REQUIRE(r.verdict == "pass");
    }
}
