#include <doctest.h>

#include "cuspcensus/generate.hpp"
#include "cuspcensus/poly_algebra.hpp"
#include "cuspcensus/poly_io.hpp"
#include "helpers.hpp"
#include "oracle_dense.hpp"

using namespace cuspcensus;
using namespace cuspcensus::testing;

TEST_CASE("arithmetic basics") {
    CHECK(P("x + y") + P("x - y") == P("2*x"));
    CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
    CHECK(P("3*x^2*y - 1/2*y^3") - P("3*x^2*y") == P("-1/2*y^3"));
    CHECK((P("x") - P("x")).is_zero());
}

TEST_CASE("ring axioms and degree multiplicativity on random samples") {
    for (uint64_t s = 1; s <= 8; ++s) {
        Poly a = generate_map(3, 2, s).f;
        Poly b = generate_map(2, 2, s + 100).f;
        Poly c = generate_map(2, 3, s + 200).g;
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("partial derivatives") {
    CHECK(P("y^3 + x*y").partial(Var::y) == P("3*y^2 + x"));
    CHECK(P("5").partial(Var::x).is_zero());
    CHECK(P("x^3 + y^3").partial(Var::x) == P("3*x^2"));
}

TEST_CASE("homogenize") {
    CHECK(homogenize(P("y^3 + x*y"), 3) == P("y^3 + x*y*z", VarSet::xyz()));
    CHECK(homogenize(P("x + 1"), 1) == P("x + z", VarSet::xyz()));
    CHECK(homogenize(P("x^2 + y"), 3) == P("x^2*z + y*z^2", VarSet::xyz()));
    CHECK_THROWS(homogenize(P("x^2"), 1));

    SUBCASE("setting z=1 recovers the input") {
        for (uint64_t s = 1; s <= 5; ++s) {
            Poly p = generate_map(3, 2, s).f;
            CHECK(homogenize(p, p.degree()).substitute_const(Var::z, Rat(1)) == p);
        }
    }
}

TEST_CASE("top form") {
    CHECK(top_form(P("y^3 + x*y + 1")) == P("y^3"));
    CHECK(top_form(P("x^2 - y^2 + x")) == P("x^2 - y^2"));
    CHECK(top_form(P("4*x*y")) == P("4*x*y"));
    CHECK_THROWS(top_form(Poly::zero(VarSet::xy())));
}

TEST_CASE("resultant examples") {
    // the result ring drops the eliminated variable
    VarSet vx = VarSet::of(Var::x);
    CHECK(resultant(P("y - x"), P("y + x"), Var::y) == P("2*x", vx));
    CHECK(resultant(P("x^2 + y^2"), P("y"), Var::y) == P("x^2", vx));
    CHECK(resultant(P("y"), P("1"), Var::y) == P("1", vx));
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    for (uint64_t s = 1; s <= 10; ++s) {
        Poly p = generate_map(3, 2, s).f;
        Poly q = generate_map(2, 2, s + 50).g;
        for (Var v : {Var::x, Var::y})
            CHECK(resultant(p, q, v) == sylvester_resultant(p, q, v));
    }
}

TEST_CASE("resultant vanishes exactly on shared factors") {
    for (uint64_t s = 1; s <= 6; ++s) {
        Poly a = generate_map(2, 1, s).f;
        Poly b = generate_map(1, 1, s + 30).f;
        Poly c = generate_map(2, 1, s + 60).g;  // shared factor, degree <= 2
        if (c.degree_in(Var::y) < 1) continue;
        Poly p = a * c, q = b * c;
        CHECK(resultant(p, q, Var::y).is_zero());
        CHECK(gcd_poly(p, q).degree_in(Var::y) >= 1);
    }
    // coprime pair: nonzero resultant
    CHECK_FALSE(resultant(P("x^2 + y + 1"), P("y^2 + x"), Var::y).is_zero());
}

TEST_CASE("gcd") {
    CHECK(gcd_poly(P("x^2*y"), P("x*y^2")) == P("x*y"));
    CHECK(gcd_poly(P("x^2 - y^2"), P("x - y")) == P("x - y"));
    CHECK(gcd_poly(P("x^2"), P("y^2")).is_constant());
}

TEST_CASE("gcd divides both inputs and captures planted factors") {
    for (uint64_t s = 1; s <= 6; ++s) {
        Poly a = generate_map(2, 1, s).f;
        Poly b = generate_map(1, 2, s + 11).g;
        Poly c = generate_map(2, 1, s + 80).f;
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        Poly g = gcd_poly(a * c, b * c);
        CHECK(g.degree() >= c.degree());
        // exact division by the gcd must succeed and invert multiplication
        Poly qa = exact_div(a * c, g);
        Poly qb = exact_div(b * c, g);
        CHECK(qa * g == a * c);
        CHECK(qb * g == b * c);
    }
}

TEST_CASE("squarefree binary forms") {
    CHECK(squarefree(BinaryForm::of(P("x*y"))));
    CHECK_FALSE(squarefree(BinaryForm::of(P("x^2*y"))));
    CHECK(squarefree(BinaryForm::of(P("x^2 - y^2"))));
    CHECK_THROWS(BinaryForm::of(P("x^2 + y")));  // not homogeneous
}

TEST_CASE("printing is canonical and parsing inverts it") {
    CHECK(to_string(P("3*x^2*y - 1/2*y^3 + x - 7")) == "3*x^2*y - 1/2*y^3 + x - 7");
    for (uint64_t s = 1; s <= 10; ++s) {
        Poly p = generate_map(3, 3, s).f;
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("x + * y"), ParseError);
    CHECK_THROWS_AS(parse_poly("w + 1"), ParseError);
    CHECK_THROWS_AS(parse_poly("z", VarSet::xy()), ParseError);  // z outside the ring
    try {
        parse_poly("x + @");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column >= 5);
    }
}

TEST_CASE("whitespace insensitivity") {
    CHECK(parse_poly("  3*x^2*y-1/2*y^3\t+ x -7 ") == P("3*x^2*y - 1/2*y^3 + x - 7"));
}
