#include "cuspcensus/localint.hpp"

#include "cuspcensus/poly_algebra.hpp"

namespace cuspcensus {

Poly translate_to_origin(const Poly& P, const RatPoint& a) {
    VarSet xy = VarSet::xy();
    Poly sx = Poly::variable(xy, Var::x) + Poly::constant(xy, a.x);
    Poly sy = Poly::variable(xy, Var::y) + Poly::constant(xy, a.y);
    return P.compose(xy, sx, sy);
}

namespace {

// restriction to the x-axis, as a polynomial in x only
Poly restrict_y0(const Poly& p) {
    Poly r(p.vars());
    for (const auto& [m, c] : p.terms())
        if (m[Var::y] == 0) r.add_term(m, c);
    return r;
}

long ord_x(const Poly& p) {
    long o = -1;
    for (const auto& [m, c] : p.terms()) {
        long e = long(m[Var::x]);
        if (o < 0 || e < o) o = e;
    }
    return o;
}

// factor out y: p = y * p1 (requires every term to carry y)
Poly div_y(const Poly& p) {
    Poly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Mono mm = m;
        mm[Var::y] = m[Var::y] - 1;
        r.add_term(mm, c);
    }
    return r;
}

// Fulton recursion at the origin; both P and Q vanish there and share no
// component through it.
long mult_at_origin(Poly P, Poly Q) {
    for (;;) {
        if (P.eval(Rat(0), Rat(0)) != 0 || Q.eval(Rat(0), Rat(0)) != 0) return 0;
        Poly p = restrict_y0(P);
        Poly q = restrict_y0(Q);
        int r = p.is_zero() ? -1 : p.degree_in(Var::x);
        int s = q.is_zero() ? -1 : q.degree_in(Var::x);
        if (r > s) {
            std::swap(P, Q);
            std::swap(p, q);
            std::swap(r, s);
        }
        if (r < 0) {
            // P = y * P1; I(y,Q) is the x-order of Q on the axis
            long n = ord_x(q);  // q != 0, else y divides both
            return n + mult_at_origin(div_y(P), Q);
        }
        // kill the leading axis term of Q with a multiple of P
        Rat c = q.lead_coef() / p.lead_coef();
        Poly shift = Poly::monomial(P.vars(), Mono::var(Var::x, uint32_t(s - r)), c);
        Q = Q - shift * P;
    }
}

}  // namespace

std::optional<long> intersection_number(const Poly& P, const Poly& Q, const RatPoint& a) {
    Poly P0 = translate_to_origin(P, a);
    Poly Q0 = translate_to_origin(Q, a);
    if (P0.eval(Rat(0), Rat(0)) != 0 || Q0.eval(Rat(0), Rat(0)) != 0) return 0;
    if (P0.is_zero() || Q0.is_zero()) return std::nullopt;
    Poly g = gcd_poly(P0, Q0);
    if (!g.is_constant() && g.eval(Rat(0), Rat(0)) == 0) return std::nullopt;
    return mult_at_origin(P0, Q0);
}

}  // namespace cuspcensus
