#include "cuspcensus/genericity.hpp"

#include "cuspcensus/generate.hpp"
#include "cuspcensus/poly_algebra.hpp"

namespace cuspcensus {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "budget";
    }
}

namespace {

Poly det_jac(const Poly& P, const Poly& Q) {
    return P.partial(Var::x) * Q.partial(Var::y) - P.partial(Var::y) * Q.partial(Var::x);
}

Verdict as_verdict(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

template <class Fn>
Verdict guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const BudgetExceeded&) {
        return Verdict::budget;
    }
}

PlaneMap ordered(const PlaneMap& F) {
    if (F.d1 >= F.d2) return F;
    return PlaneMap(F.g, F.f, F.d2, F.d1);
}

// z^cap-homogenization restricted to z=0: the binary form seen at L_inf. Zero when the actual degree falls below the cap.
Poly cap_top(const Poly& p, int cap) {
    return homogenize(p, cap).substitute_const(Var::z, Rat(0));
}

struct GradVerdicts {
    Verdict transversal;  // Bezout-exact count and simple intersections
    Verdict at_infinity;  // top forms of f_x, f_y coprime
};

GradVerdicts grad_verdicts(const PlaneMap& F, long budget) {
    if (F.d1 == 1) return {Verdict::pass, Verdict::pass};  // vacuous
    Poly fx = F.f.partial(Var::x), fy = F.f.partial(Var::y);
    GradVerdicts v{};
    v.at_infinity = guarded([&] {
        if (fx.is_zero() || fy.is_zero()) return Verdict::fail;
        return as_verdict(coprime(top_form(fx), top_form(fy)));
    });
    v.transversal = guarded([&] {
        QuotientInfo q = quotient_dimension(IdealBasis({fx, fy}), budget);
        if (!q.dimension || *q.dimension != long(F.d1 - 1) * (F.d1 - 1)) return Verdict::fail;
        return as_verdict(contains_one(IdealBasis({fx, fy, det_jac(fx, fy)}), budget));
    });
    return v;
}

}  // namespace

Verdict check_grad_transversal(const PlaneMap& F, long budget) {
    GradVerdicts v = grad_verdicts(F, budget);
    if (v.transversal == Verdict::budget || v.at_infinity == Verdict::budget)
        return Verdict::budget;
    return as_verdict(v.transversal == Verdict::pass && v.at_infinity == Verdict::pass);
}

std::pair<Verdict, Verdict> check_j_infinity(const PlaneMap& F, long budget) {
    (void)budget;
    Poly J = jacobian_curve(F);
    if (J.is_zero()) return {Verdict::fail, Verdict::fail};
    if (J.is_constant()) return {Verdict::pass, Verdict::pass};  // vacuous, no points at infinity
    Poly J11 = j11_curve(F);
    Verdict disjoint = guarded([&] {
        if (J11.is_zero()) return Verdict::fail;
        return as_verdict(coprime(top_form(J), top_form(J11)));
    });
    Verdict transversal = guarded([&] {
        if (J.degree() != F.d1 + F.d2 - 2) return Verdict::fail;
        return as_verdict(squarefree(BinaryForm::of(top_form(J))));
    });
    return {disjoint, transversal};
}

Verdict check_mixed_vanishing(const PlaneMap& F, long budget) {
    Poly fx = F.f.partial(Var::x), fy = F.f.partial(Var::y);
    Poly gx = F.g.partial(Var::x), gy = F.g.partial(Var::y);
    return guarded([&] {
        return as_verdict(contains_one(IdealBasis({fx, fy, gx}), budget) &&
                          contains_one(IdealBasis({fx, fy, gy}), budget));
    });
}

Verdict check_grad_j12(const PlaneMap& F, long budget) {
    Poly fx = F.f.partial(Var::x), fy = F.f.partial(Var::y);
    return guarded([&] {
        return as_verdict(contains_one(IdealBasis({fx, fy, j12_curve(F)}), budget));
    });
}

Verdict check_j_j11_transversal(const PlaneMap& F, long budget) {
    Poly J = jacobian_curve(F);
    if (J.is_zero()) return Verdict::fail;
    if (J.is_constant()) return Verdict::pass;  // no intersections, vacuous
    Poly J11 = j11_curve(F);
    return guarded([&] {
        if (!gcd_poly(J, J11).is_constant()) return Verdict::fail;  // shared component
        return as_verdict(contains_one(IdealBasis({J, J11, det_jac(J, J11)}), budget));
    });
}

Verdict check_infinity_nonvanishing(const PlaneMap& F0, long budget) {
    (void)budget;
    PlaneMap F = ordered(F0);
    Poly J = jacobian_curve(F);
    if (J.is_zero()) return Verdict::fail;
    if (J.is_constant()) return Verdict::pass;  // no points at infinity on C(F)
    int D = F.d1 + F.d2 - 2;
    return guarded([&] {
        Poly topJ = cap_top(J, D);
        if (topJ.is_zero() || !squarefree(BinaryForm::of(topJ))) return Verdict::fail;
        Poly fh = homogenize(F.f, F.d1);
        Poly gh = homogenize(F.g, F.d2);
        Poly Jh = homogenize(J, D);
        Poly cf_full = fh.partial(Var::z) * Jh.partial(Var::x) - fh.partial(Var::x) * Jh.partial(Var::z);
        Poly cg_full = gh.partial(Var::z) * Jh.partial(Var::x) - gh.partial(Var::x) * Jh.partial(Var::z);
        Poly mix_full = gh * cf_full * Rat(F.d2) - fh * cg_full * Rat(F.d1);
        auto at_inf = [](const Poly& p) { return p.substitute_const(Var::z, Rat(0)); };
        for (const Poly& form : {cap_top(F.f, F.d1), cap_top(F.g, F.d2), at_inf(cf_full),
                                 at_inf(cg_full), at_inf(mix_full)}) {
            if (!coprime(form, topJ)) return Verdict::fail;
        }
        return Verdict::pass;
    });
}

Verdict check_row(const PlaneMap& F0, uint64_t seed, long* shear_out, long budget) {
    (void)budget;
    PlaneMap F = ordered(F0);
    int D = F.d1 + F.d2 - 2;
    if (shear_out) *shear_out = 0;
    if (D == 0) return Verdict::pass;  // vacuous
    Poly J = jacobian_curve(F);
    if (J.is_zero() || J.is_constant()) return Verdict::fail;
    return guarded([&] {
        Poly topJ = cap_top(J, D);
        Poly topf = cap_top(F.f, F.d1);
        Poly topg = cap_top(F.g, F.d2);
        if (topJ.is_zero() || !squarefree(BinaryForm::of(topJ))) return Verdict::fail;
        if (!coprime(topf, topJ) || !coprime(topg, topJ)) return Verdict::fail;

        // shear so all roots of the top form of J become affine in the chart y=1
        VarSet xy = VarSet::xy();
        SplitMix64 rng(seed ^ 0x726f77636865636bull);
        long s = long(rng.next() % 5);
        Poly shJ(xy), shf(xy), shg(xy);
        for (int tries = 0; tries <= D + 5; ++tries, ++s) {
            Poly sx = Poly::variable(xy, Var::x);
            Poly sy = Poly::variable(xy, Var::y) + Poly::monomial(xy, Mono::var(Var::x), Rat(s));
            shJ = topJ.compose(xy, sx, sy);
            if (shJ.eval(Rat(1), Rat(0)) != 0) {
                shf = topf.compose(xy, sx, sy);
                shg = topg.compose(xy, sx, sy);
                break;
            }
            shJ = Poly(xy);
        }
        if (shJ.is_zero()) return Verdict::fail;
        if (shear_out) *shear_out = s;

        Poly Jbar = embed(shJ.substitute_const(Var::y, Rat(1)), xy);
        Poly A = embed(shf.substitute_const(Var::y, Rat(1)), xy);
        Poly B = embed(shg.substitute_const(Var::y, Rat(1)), xy);
        Poly v = Poly::variable(xy, Var::y);
        Poly apow = Poly::constant(xy, Rat(1));
        for (int i = 0; i < F.d2; ++i) apow = apow * A;
        Poly bpow = Poly::constant(xy, Rat(1));
        for (int i = 0; i < F.d1; ++i) bpow = bpow * B;
        Poly R = resultant(Jbar, v * apow - bpow, Var::x);
        if (R.degree_in(Var::y) != D) return Verdict::fail;
        return as_verdict(gcd_poly(R, R.partial(Var::y)).is_constant());
    });
}

GenericityReport genericity_report(const PlaneMap& F, uint64_t seed, long budget) {
    GenericityReport r;
    GradVerdicts gv = grad_verdicts(F, budget);
    r.gradTransversal = gv.transversal;
    r.gradDisjointAtInfinity = gv.at_infinity;
    auto [disjoint, transversal] = check_j_infinity(F, budget);
    r.jJ11DisjointInfinity = disjoint;
    r.jTransversalInfinity = transversal;
    r.noMixedVanishing = check_mixed_vanishing(F, budget);
    r.gradDisjointJ12 = check_grad_j12(F, budget);
    r.jJ11Transversal = check_j_j11_transversal(F, budget);
    r.infinityNonvanishing = check_infinity_nonvanishing(F, budget);
    r.rowCondition = check_row(F, seed, &r.shear, budget);
    r.paperGenericEffective = r.all_pass();
    return r;
}

}  // namespace cuspcensus
