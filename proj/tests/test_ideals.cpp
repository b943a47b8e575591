#include <doctest.h>

#include "cuspcensus/generate.hpp"
#include "cuspcensus/groebner.hpp"
#include "cuspcensus/poly_algebra.hpp"
#include "cuspcensus/poly_io.hpp"
#include "helpers.hpp"

using namespace cuspcensus;
using namespace cuspcensus::testing;

namespace {

std::string render(const std::vector<Poly>& basis) {
    std::string s;
    for (const auto& b : basis) s += to_string(b) + "; ";
    return s;
}

}  // namespace

TEST_CASE("groebner basics") {
    auto g1 = groebner(std::vector<Poly>{P("x"), P("y")});
    CHECK(g1.size() == 2);

    auto g2 = groebner(std::vector<Poly>{P("x"), P("x + 1")});
    REQUIRE(g2.size() == 1);
    CHECK(g2.front() == P("1"));

    auto q = quotient_dimension(std::vector<Poly>{P("x^2 - y"), P("y^2 - x")});
    CHECK(q.isZeroDimensional);
    CHECK(q.dimension == 4);  // Bezout 2*2, no common points at infinity
    CHECK(q.standardMonomials.size() == 4);
}

TEST_CASE("groebner is idempotent and deterministic") {
    std::vector<Poly> gens{P("x^2 - y"), P("y^2 - x"), P("x*y - 1")};
    auto g = groebner(gens);
    CHECK(groebner(g) == g);
    CHECK(render(groebner(gens)) == render(g));
}

TEST_CASE("groebner basis generates the same ideal") {
    // each original generator reduces to zero against the basis
    for (uint64_t s = 1; s <= 5; ++s) {
        PlaneMap F = generate_map(3, 2, s);
        std::vector<Poly> gens{F.f.partial(Var::x), F.f.partial(Var::y)};
        auto g = groebner(gens);
        long budget = kDefaultBudget;
        for (const auto& p : gens)
            CHECK(detail::normal_form(p, g, budget).is_zero());
    }
}

TEST_CASE("quotient dimensions") {
    Poly f = P("x^3 + y^3");
    auto q = quotient_dimension(std::vector<Poly>{f.partial(Var::x), f.partial(Var::y)});
    CHECK(q.dimension == 4);  // (d1-1)^2

    CHECK(quotient_dimension(std::vector<Poly>{P("x"), P("y")}).dimension == 1);

    auto inf = quotient_dimension(std::vector<Poly>{P("x")});
    CHECK_FALSE(inf.isZeroDimensional);
    CHECK_FALSE(inf.dimension.has_value());
}

TEST_CASE("contains one") {
    CHECK(contains_one(std::vector<Poly>{P("x"), P("y"), P("x + y + 1")}));
    CHECK_FALSE(contains_one(std::vector<Poly>{P("x"), P("y")}));
    // (f_x, f_y, g_x) for F = (x^2+y^2, x)
    CHECK(contains_one(std::vector<Poly>{P("2*x"), P("2*y"), P("1")}));

    SUBCASE("contains_one forces dimension zero with empty staircase") {
        auto q = quotient_dimension(std::vector<Poly>{P("x"), P("x + 1")});
        CHECK(q.isZeroDimensional);
        CHECK(q.dimension == 0);
        CHECK(q.standardMonomials.empty());
    }
}

TEST_CASE("Bezout equality for coprime top forms") {
    for (uint64_t s = 1; s <= 6; ++s) {
        PlaneMap F = generate_map(3, 2, s);
        if (!coprime(top_form(F.f), top_form(F.g))) continue;
        auto q = quotient_dimension(std::vector<Poly>{F.f, F.g});
        CHECK(q.dimension == F.f.degree() * F.g.degree());
    }
}

TEST_CASE("budget failure is loud, never a wrong answer") {
    std::vector<Poly> gens{P("x^3 - y^2 + x*y"), P("y^3 - x^2 + 1"), P("x^2*y^2 - x - y")};
    CHECK_THROWS_AS(groebner(gens, 3), BudgetExceeded);
}

TEST_CASE("prime-field dimensions match rational dimensions") {
    for (uint64_t s = 1; s <= 6; ++s) {
        PlaneMap F = generate_map(3, 3, s);
        std::vector<Poly> gens{F.f.partial(Var::x), F.f.partial(Var::y)};
        auto qr = quotient_dimension(gens);
        auto qp = quotient_dimension(to_fp(gens, kDefaultPrime));
        CHECK(qr.dimension == qp.dimension);
        CHECK(qr.standardMonomials.size() == qp.standardMonomials.size());
    }
}

TEST_CASE("zero generators are dropped and the zero ideal is infinite") {
    IdealBasis I({Poly::zero(VarSet::xy()), P("x")});
    CHECK(I.generators.size() == 1);
    auto q = quotient_dimension(std::vector<Poly>{Poly::zero(VarSet::xy())});
    CHECK_FALSE(q.dimension.has_value());
}
