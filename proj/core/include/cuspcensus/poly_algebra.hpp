#pragma once

#include "cuspcensus/poly.hpp"

namespace cuspcensus {

// Homogeneous polynomial in {x,y}; projective roots are points of P^1.
struct BinaryForm {
    Poly poly;
    int degree = 0;

    static BinaryForm of(const Poly& p);  // throws if p is not homogeneous or not in {x,y}
};

// Scale to integer coefficients with content 1 and positive leading
// (grevlex) coefficient. normalize(0) = 0.
Poly normalize_primitive(const Poly& p);

// Exact quotient p/q; throws std::logic_error if q does not divide p.
Poly exact_div(const Poly& p, const Poly& q);

// Pseudo-remainder of A by B with respect to v: lc_v(B)^(deg_v A - deg_v B + 1) * A mod B.
Poly prem(const Poly& A, const Poly& B, Var v);

// gcd over Q[x,y,z] by content/primitive-part reduction and a primitive PRS.
// Result is normalized primitive; gcd_poly(0, q) = normalize(q).
Poly gcd_poly(const Poly& p, const Poly& q);

// Resultant with respect to v via the subresultant PRS. Vanishes identically
// iff p and q share a factor of positive v-degree. Result ring drops v.
// Standard conventions for degenerate degrees: Res_v(p, c) = c^(deg_v p).
Poly resultant(const Poly& p, const Poly& q, Var v);

// true iff gcd(b, db/dx, db/dy) is constant, i.e. distinct projective roots
bool squarefree(const BinaryForm& b);

// gcd of two binary forms is constant (no common projective root)
bool coprime(const Poly& a, const Poly& b);

}  // namespace cuspcensus
