#include <doctest.h>

#include "cuspcensus/generate.hpp"
#include "cuspcensus/jets.hpp"
#include "helpers.hpp"
#include "oracle_dense.hpp"

using namespace cuspcensus;
using namespace cuspcensus::testing;

TEST_CASE("plane map validation") {
    CHECK_THROWS(PlaneMap(P("x^2"), P("y"), 1, 1));       // degree above cap
    CHECK_THROWS(PlaneMap(P("x"), P("y"), 0, 1));         // cap below 1
    CHECK_THROWS(PlaneMap(P("z", VarSet::xyz()), P("y", VarSet::xyz()), 1, 1));
    PlaneMap F = PlaneMap::of(P("7"), P("y"));
    CHECK(F.d1 == 1);  // constant component still gets cap 1
    CHECK(F.d2 == 1);
}

TEST_CASE("jacobian curve") {
    CHECK(jacobian_curve(PlaneMap::of(P("x"), P("y^3 + x*y"))) == P("3*y^2 + x"));
    CHECK(jacobian_curve(PlaneMap::of(P("x"), P("y"))) == P("1"));
    CHECK(jacobian_curve(PlaneMap::of(P("x^2 + y^2"), P("x*y"))) == P("2*x^2 - 2*y^2"));
}

TEST_CASE("jet curves of the simple cusp normal form") {
    PlaneMap F = PlaneMap::of(P("x"), P("y^3 + x*y"));
    JetTriple t = jet_triple(F);
    CHECK(t.J == P("3*y^2 + x"));
    CHECK(t.J11 == P("-6*y"));
    CHECK(t.J12 == P("x - 3*y^2"));
    CHECK(j11_curve(F) == t.J11);
    CHECK(j12_curve(F) == t.J12);
}

TEST_CASE("jet curves of linear maps vanish") {
    for (auto [f, g] : {std::pair<const char*, const char*>{"x", "y"}, {"y", "x"}}) {
        JetTriple t = jet_triple(PlaneMap::of(P(f), P(g)));
        CHECK(t.J11.is_zero());
        CHECK(t.J12.is_zero());
    }
}

TEST_CASE("jet curves of (x^2, y^2) against the dense oracle") {
    PlaneMap F = PlaneMap::of(P("x^2"), P("y^2"));
    JetTriple t = jet_triple(F);
    DenseJets o = DenseJets::of(F.f, F.g);
    CHECK(o.J.matches(t.J));
    CHECK(o.J11.matches(t.J11));
    CHECK(o.J12.matches(t.J12));
    // the oracle values, frozen
    CHECK(t.J == P("4*x*y"));
    CHECK(t.J11 == P("-8*x^2"));
    CHECK(t.J12 == P("8*y^2"));
}

TEST_CASE("jet triple equals the dense oracle on random maps") {
    for (uint64_t s = 1; s <= 10; ++s) {
        PlaneMap F = generate_map(3, 2, s);
        JetTriple t = jet_triple(F);
        DenseJets o = DenseJets::of(F.f, F.g);
        CHECK(o.J.matches(t.J));
        CHECK(o.J11.matches(t.J11));
        CHECK(o.J12.matches(t.J12));
    }
}

TEST_CASE("swap antisymmetry of the jacobian") {
    for (uint64_t s = 1; s <= 6; ++s) {
        PlaneMap F = generate_map(2, 3, s);
        PlaneMap G = PlaneMap::of(F.g, F.f);
        CHECK(jacobian_curve(G) == -jacobian_curve(F));
    }
}

TEST_CASE("J and J11 vanish at rational gradient zeros") {
    // f = x^3 + y^3 has its gradient zero at the origin
    for (uint64_t s = 1; s <= 4; ++s) {
        Poly g = generate_map(2, 2, s).g;
        PlaneMap F = PlaneMap::of(P("x^3 + y^3"), g);
        JetTriple t = jet_triple(F);
        CHECK(t.J.eval(Rat(0), Rat(0)) == 0);
        CHECK(t.J11.eval(Rat(0), Rat(0)) == 0);
    }
}

TEST_CASE("degree bounds and generic equality") {
    for (uint64_t s = 1; s <= 8; ++s) {
        PlaneMap F = generate_map(3, 2, s);
        JetTriple t = jet_triple(F);
        CHECK(t.J.degree() == F.d1 + F.d2 - 2);  // generic equality
        CHECK(t.J11.degree() <= 2 * F.d1 + F.d2 - 4);
        CHECK(t.J12.degree() <= F.d1 + 2 * F.d2 - 4);
    }
}

TEST_CASE("d2 = 1 needs no special casing") {
    PlaneMap F = generate_map(3, 1, 5);
    JetTriple t = jet_triple(F);
    DenseJets o = DenseJets::of(F.f, F.g);
    CHECK(o.J.matches(t.J));
    CHECK(o.J11.matches(t.J11));
    CHECK(o.J12.matches(t.J12));
}
