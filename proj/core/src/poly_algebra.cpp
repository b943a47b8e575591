#include "cuspcensus/poly_algebra.hpp"

#include <stdexcept>

namespace cuspcensus {

namespace {

// leading coefficient with respect to v, kept in the same ring (v-free)
Poly lc_in(const Poly& p, Var v) {
    int d = p.degree_in(v);
    Poly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (int(m[v]) == d) {
            Mono mm = m;
            mm[v] = 0;
            r.add_term(mm, c);
        }
    }
    return r;
}

Poly pow_poly(const Poly& p, uint32_t k) {
    Poly r = Poly::constant(p.vars(), Rat(1));
    for (uint32_t i = 0; i < k; ++i) r = r * p;
    return r;
}

Poly var_power(VarSet vars, Var v, uint32_t k) {
    return Poly::monomial(vars, Mono::var(v, k), Rat(1));
}

// gcd of the v-coefficients (a v-free polynomial in the same ring)
Poly content_in(const Poly& p, Var v) {
    Poly c(p.vars());
    int d = p.degree_in(v);
    for (int k = 0; k <= d; ++k) {
        Poly ck(p.vars());
        for (const auto& [m, co] : p.terms()) {
            if (int(m[v]) == k) {
                Mono mm = m;
                mm[v] = 0;
                ck.add_term(mm, co);
            }
        }
        if (ck.is_zero()) continue;
        c = c.is_zero() ? normalize_primitive(ck) : gcd_poly(c, ck);
        if (c.is_constant() && !c.is_zero()) return Poly::constant(p.vars(), Rat(1));
    }
    return c;
}

Poly primitive_part(const Poly& p, Var v) {
    if (p.is_zero()) return p;
    Poly c = content_in(p, v);
    if (c.is_constant()) return normalize_primitive(p);
    return normalize_primitive(exact_div(p, c));
}

}  // namespace

BinaryForm BinaryForm::of(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero binary form");
    if (p.vars().contains(Var::z) && p.degree_in(Var::z) > 0)
        throw std::invalid_argument("binary form must live in {x,y}");
    int d = p.degree();
    for (const auto& [m, c] : p.terms())
        if (int(m.deg()) != d) throw std::invalid_argument("binary form must be homogeneous");
    return BinaryForm{p, d};
}

Poly normalize_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Int den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (p.lead_coef() < 0) scale = -scale;
    return p * scale;
}

Poly exact_div(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::logic_error("exact_div by zero");
    Poly r = p;
    Poly quot(p.vars());
    while (!r.is_zero()) {
        const Mono& lm = r.lead_mono();
        const Mono& lq = q.lead_mono();
        if (!lq.divides(lm)) throw std::logic_error("exact_div: not divisible");
        Mono t = lq.quotient_into(lm);
        Rat c = r.lead_coef() / q.lead_coef();
        quot.add_term(t, c);
        r = r - q.mul_mono(t, c);
    }
    return quot;
}

Poly prem(const Poly& A, const Poly& B, Var v) {
    int dB = B.degree_in(v);
    if (dB < 0) throw std::invalid_argument("prem by zero");
    Poly lB = lc_in(B, v);
    Poly R = A;
    int e = A.degree_in(v) - dB + 1;
    while (!R.is_zero() && R.degree_in(v) >= dB) {
        Poly lR = lc_in(R, v);
        uint32_t k = uint32_t(R.degree_in(v) - dB);
        R = R * lB - lR * var_power(R.vars(), v, k) * B;
        --e;
    }
    if (e > 0) R = R * pow_poly(lB, uint32_t(e));
    return R;
}

Poly gcd_poly(const Poly& p, const Poly& q) {
    if (!(p.vars() == q.vars())) throw VariableMismatch("gcd_poly: variable-list mismatch");
    if (p.is_zero()) return normalize_primitive(q);
    if (q.is_zero()) return normalize_primitive(p);
    if (p.is_constant() || q.is_constant()) return Poly::constant(p.vars(), Rat(1));

    // main variable: last of z,y,x with positive degree somewhere
    Var v = Var::x;
    for (Var cand : {Var::z, Var::y, Var::x}) {
        if (p.vars().contains(cand) && (p.degree_in(cand) > 0 || q.degree_in(cand) > 0)) {
            v = cand;
            break;
        }
    }
    int dp = p.degree_in(v), dq = q.degree_in(v);
    if (dp == 0) return gcd_poly(p, content_in(q, v));
    if (dq == 0) return gcd_poly(content_in(p, v), q);

    Poly cp = content_in(p, v), cq = content_in(q, v);
    Poly cg = gcd_poly(cp, cq);
    Poly A = cp.is_constant() ? normalize_primitive(p) : normalize_primitive(exact_div(p, cp));
    Poly B = cq.is_constant() ? normalize_primitive(q) : normalize_primitive(exact_div(q, cq));
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);

    // primitive PRS
    while (!B.is_zero()) {
        if (B.degree_in(v) == 0) return normalize_primitive(cg);  // coprime primitive parts
        Poly R = prem(A, B, v);
        A = B;
        B = primitive_part(R, v);
    }
    return normalize_primitive(cg * primitive_part(A, v));
}

Poly resultant(const Poly& p, const Poly& q, Var v) {
    if (!(p.vars() == q.vars())) throw VariableMismatch("resultant: variable-list mismatch");
    if (!p.vars().contains(v)) throw std::invalid_argument("resultant: variable outside the ring");
    VarSet out_vars = p.vars().without(v);
    auto strip = [&](const Poly& r) {
        // r is v-free here
        return r.substitute_const(v, Rat(0));
    };
    if (p.is_zero() || q.is_zero()) return Poly::zero(out_vars);

    Poly A = p, B = q;
    int dA = A.degree_in(v), dB = B.degree_in(v);
    int sign = 1;
    if (dA < dB) {
        std::swap(A, B);
        std::swap(dA, dB);
        if ((dA & 1) && (dB & 1)) sign = -sign;
    }
    if (dB == 0) {
        Poly r = pow_poly(B, uint32_t(dA));
        if (sign < 0) r = -r;
        return strip(r);
    }

    Poly g = Poly::constant(p.vars(), Rat(1));
    Poly h = g;
    for (;;) {
        dA = A.degree_in(v);
        dB = B.degree_in(v);
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) sign = -sign;
        Poly R = prem(A, B, v);
        A = B;
        B = exact_div(R, g * pow_poly(h, uint32_t(delta)));
        if (B.is_zero()) return Poly::zero(out_vars);  // shared factor of positive v-degree
        g = lc_in(A, v);
        if (delta > 0) h = exact_div(pow_poly(g, uint32_t(delta)), pow_poly(h, uint32_t(delta - 1)));
        if (B.degree_in(v) == 0) break;
    }
    int lambda = A.degree_in(v);
    Poly res = exact_div(pow_poly(B, uint32_t(lambda)), pow_poly(h, uint32_t(lambda - 1)));
    if (sign < 0) res = -res;
    return strip(res);
}

bool squarefree(const BinaryForm& b) {
    Poly g = gcd_poly(b.poly, b.poly.partial(Var::x));
    if (g.is_constant()) return true;
    return gcd_poly(g, b.poly.partial(Var::y)).is_constant();
}

bool coprime(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    return gcd_poly(a, b).is_constant();
}

}  // namespace cuspcensus
