#include <doctest.h>

#include "cuspcensus/generate.hpp"
#include "cuspcensus/genericity.hpp"
#include "helpers.hpp"

using namespace cuspcensus;
using namespace cuspcensus::testing;

TEST_CASE("grad transversality") {
    CHECK(check_grad_transversal(PlaneMap::of(P("x^2 + y^2 + x*y"), P("y"))) == Verdict::pass);
    // dim = 4 = (d1-1)^2 but the unique gradient zero has multiplicity 4
    CHECK(check_grad_transversal(PlaneMap::of(P("x^3 + y^3"), P("y"))) == Verdict::fail);
    CHECK(check_grad_transversal(PlaneMap::of(P("x"), P("y"))) == Verdict::pass);  // vacuous
}

TEST_CASE("J at infinity") {
    auto [disjoint, transversal] = check_j_infinity(PlaneMap::of(P("x^2"), P("y^2")));
    CHECK(disjoint == Verdict::fail);  // top forms of J = 4xy and J11 = -8x^2 share x
    CHECK(transversal == Verdict::pass);  // 4xy squarefree of degree D = 2

    auto [d2, t2] = check_j_infinity(PlaneMap::of(P("x"), P("y")));
    CHECK(d2 == Verdict::pass);  // J constant: vacuous
    CHECK(t2 == Verdict::pass);

    auto [d3, t3] = check_j_infinity(PlaneMap::of(P("x"), P("y^3")));
    CHECK(t3 == Verdict::fail);  // top form y^2 of J = 3y^2 is not squarefree
}

TEST_CASE("mixed vanishing") {
    CHECK(check_mixed_vanishing(PlaneMap::of(P("x^2 + y^2"), P("x + y"))) == Verdict::pass);
    CHECK(check_mixed_vanishing(PlaneMap::of(P("x^2 + y^2"), P("x^2"))) == Verdict::fail);
    CHECK(check_mixed_vanishing(PlaneMap::of(P("x"), P("x^2 - y^2 + y"))) == Verdict::pass);
}

TEST_CASE("gradient misses J12") {
    CHECK(check_grad_j12(PlaneMap::of(P("x"), P("y^3 + x*y"))) == Verdict::pass);
    // J12 of (x^2+y^2, xy) vanishes at the unique gradient zero
    CHECK(check_grad_j12(PlaneMap::of(P("x^2 + y^2"), P("x*y"))) == Verdict::fail);
    CHECK(check_grad_j12(PlaneMap::of(P("x^2"), P("y^2"))) == Verdict::fail);
}

TEST_CASE("J transversal to J11") {
    CHECK(check_j_j11_transversal(PlaneMap::of(P("x"), P("y^3 + x*y"))) == Verdict::pass);
    // contact of multiplicity two at the origin
    CHECK(check_j_j11_transversal(PlaneMap::of(P("x"), P("y^4 + x*y"))) == Verdict::fail);
    CHECK(check_j_j11_transversal(PlaneMap::of(P("x"), P("y"))) == Verdict::pass);  // vacuous
}

TEST_CASE("nonvanishing at infinity") {
    CHECK(check_infinity_nonvanishing(PlaneMap::of(P("x"), P("y"))) == Verdict::pass);
    for (uint64_t s : {7ull, 42ull, 101ull})
        CHECK(check_infinity_nonvanishing(generate_map(3, 2, s)) == Verdict::pass);
    // top_form(f) = x(x+y) shares the root (0:1) with top_form(J) = 2x^2
    CHECK(check_infinity_nonvanishing(PlaneMap::of(P("x^2 + x*y"), P("x*y"))) == Verdict::fail);
}

TEST_CASE("row condition") {
    CHECK(check_row(PlaneMap::of(P("x + 1"), P("y")), 1) == Verdict::pass);  // D = 0, vacuous
    long shear = -1;
    CHECK(check_row(generate_map(2, 2, 9), 9, &shear) == Verdict::pass);
    CHECK(shear >= 0);
    // equal top forms make all row values coincide
    CHECK(check_row(PlaneMap::of(P("x^2 + y^2 + x"), P("x^2 + y^2 + y")), 3) == Verdict::fail);
}

TEST_CASE("row condition depends only on top forms (translation invariance)") {
    for (uint64_t s = 1; s <= 4; ++s) {
        PlaneMap F = generate_map(3, 2, s);
        // precompose with the translation (x, y) -> (x + 1, y - 2)
        VarSet xy = VarSet::xy();
        Poly tx = X() + Poly::constant(xy, Rat(1));
        Poly ty = Y() - Poly::constant(xy, Rat(2));
        PlaneMap G(F.f.compose(xy, tx, ty), F.g.compose(xy, tx, ty), F.d1, F.d2);
        CHECK(check_row(F, s) == check_row(G, s));
    }
}

TEST_CASE("full report") {
    CHECK(genericity_report(PlaneMap::of(P("x"), P("y")), 1).all_pass());

    GenericityReport g42 = genericity_report(generate_map(3, 2, 42), 42);
    CHECK(g42.all_pass());
    CHECK(g42.paperGenericEffective);

    GenericityReport bad = genericity_report(PlaneMap::of(P("x"), P("y^3")), 1);
    CHECK(bad.jTransversalInfinity == Verdict::fail);
    CHECK_FALSE(bad.paperGenericEffective);
}

TEST_CASE("budget exhaustion surfaces as a budget verdict") {
    GenericityReport g = genericity_report(generate_map(3, 3, 4), 4, 2);
    bool sawBudget = false;
    for (Verdict v : {g.gradTransversal, g.jJ11Transversal, g.rowCondition, g.noMixedVanishing})
        sawBudget = sawBudget || v == Verdict::budget;
    CHECK(sawBudget);
}
