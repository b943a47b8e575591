#include "cuspcensus/census.hpp"

#include <numeric>
#include <stdexcept>

#include "cuspcensus/atinfinity.hpp"
#include "cuspcensus/generate.hpp"
#include "cuspcensus/poly_algebra.hpp"

namespace cuspcensus {

long cusp_count_formula(long d1, long d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("degrees must be at least 1");
    return d1 * d1 + d2 * d2 + 3 * d1 * d2 - 6 * d1 - 6 * d2 + 7;
}

long node_count_formula(long d1, long d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("degrees must be at least 1");
    long D = d1 + d2 - 2;
    long d = std::gcd(d1, d2);
    long twice = (d1 * d2 - 4) * (D * D - 2) - (d - 5) * D - 6;
    if (twice % 2 != 0) throw std::logic_error("node count formula must be integral");
    return twice / 2;
}

std::pair<long, long> critical_topology(long d1, long d2) {
    if (d1 + d2 < 3) return {0, 0};  // linear map, empty critical curve
    long D = d1 + d2 - 2;
    return {(D - 1) * (D - 2) / 2, D};
}

long discriminant_degree(long d1, long d2) {
    long hi = std::max(d1, d2);
    return hi * (d1 + d2 - 2);
}

long serre_residual(long d1, long d2) {
    long hi = std::max(d1, d2), lo = std::min(d1, d2);
    long D = hi + lo - 2;
    long dd = hi * D;
    return (dd - 1) * (dd - 2) / 2 - (D - 1) * (D - 2) / 2 - cusp_count_formula(hi, lo) -
           node_count_formula(hi, lo) - delta_at_infinity(hi, lo);
}

namespace {

QuotientInfo quotient_dim_mode(const IdealBasis& I, long budget, uint64_t prime) {
    if (prime == 0) return quotient_dimension(I, budget);
    return quotient_dimension(to_fp(I.generators, prime), budget);
}

bool contains_one_mode(const IdealBasis& I, long budget, uint64_t prime) {
    if (prime == 0) return contains_one(I, budget);
    return contains_one(to_fp(I.generators, prime), budget);
}

}  // namespace

ComputedCusps computed_cusp_count(const PlaneMap& F, long budget, uint64_t prime) {
    ComputedCusps out;
    JetTriple jets = jet_triple(F);
    try {
        if (jets.J.is_zero()) {
            out.diagnosis = "zero Jacobian";
            return out;
        }
        if (!jets.J.is_constant() && !gcd_poly(jets.J, jets.J11).is_constant()) {
            out.diagnosis = "J and J11 share a component";
            return out;
        }
        QuotientInfo qj = quotient_dim_mode(IdealBasis({jets.J, jets.J11}), budget, prime);
        if (!qj.dimension) {
            out.diagnosis = "(J, J11) is not zero-dimensional";
            return out;
        }
        out.dimJJ11 = *qj.dimension;
        Poly fx = F.f.partial(Var::x), fy = F.f.partial(Var::y);
        if (contains_one_mode(IdealBasis({fx, fy}), budget, prime)) {
            out.dimGrad = 0;
        } else {
            QuotientInfo qg = quotient_dim_mode(IdealBasis({fx, fy}), budget, prime);
            if (!qg.dimension) {
                out.diagnosis = "(f_x, f_y) is not zero-dimensional";
                return out;
            }
            out.dimGrad = *qg.dimension;
        }
        out.count = *out.dimJJ11 - *out.dimGrad;
    } catch (const BudgetExceeded& e) {
        out.budgetExhausted = true;
        out.diagnosis = e.what();
    }
    return out;
}

namespace {

Mat2 draw_matrix(SplitMix64& rng) {
    for (;;) {
        Mat2 t{Rat(rng.coefficient(5)), Rat(rng.coefficient(5)), Rat(rng.coefficient(5)),
               Rat(rng.coefficient(5))};
        if (t.det() != 0) return t;
    }
}

long index_with(const PlaneMap& F, const RatPoint& a, const Mat2& T) {
    Poly fp = F.f * T.a + F.g * T.b;
    Poly gp = F.f * T.c + F.g * T.d;
    PlaneMap Fp = PlaneMap::of(fp, gp);
    JetTriple jets = jet_triple(Fp);
    auto i1 = intersection_number(jets.J, jets.J11, a);
    if (!i1)
        throw std::domain_error("infinite local intersection of J and J11 (T not general enough?)");
    auto i2 = intersection_number(fp.partial(Var::x), fp.partial(Var::y), a);
    if (!i2) throw std::domain_error("infinite local intersection of the gradient ideal");
    return *i1 - *i2;
}

}  // namespace

long generalized_cusp_index(const PlaneMap& F, const RatPoint& a, std::optional<Mat2> T,
                            uint64_t seed) {
    Poly J = jacobian_curve(F);
    if (J.is_zero()) throw std::domain_error("not a generalized cusp: zero Jacobian");
    Poly g = gcd_poly(J, J.partial(Var::x));
    if (!g.is_constant()) g = gcd_poly(g, J.partial(Var::y));
    if (!g.is_constant()) throw std::domain_error("not a generalized cusp: J is non-reduced");
    if (T) {
        if (T->det() == 0) throw std::invalid_argument("target rotation must be invertible");
        return index_with(F, a, *T);
    }
    SplitMix64 rng(seed ^ 0x696e646578647277ull);
    Mat2 t1 = draw_matrix(rng);
    Mat2 t2 = draw_matrix(rng);
    long m1 = index_with(F, a, t1);
    long m2 = index_with(F, a, t2);
    if (m1 != m2)
        throw std::runtime_error("target rotations disagree: T not general enough or genuine ambiguity");
    return m1;
}

CuspSumBound cusp_sum_bound_check(const PlaneMap& F, const std::vector<RatPoint>& points,
                                  uint64_t seed) {
    CuspSumBound r;
    r.bound = cusp_count_formula(F.d1, F.d2);
    for (const auto& p : points) r.sum += generalized_cusp_index(F, p, std::nullopt, seed);
    r.ok = r.sum <= r.bound;
    return r;
}

CensusReport full_census(const PlaneMap& F, uint64_t seed, long budget, uint64_t prime) {
    CensusReport r;
    r.seed = seed;
    r.d1 = F.d1;
    r.d2 = F.d2;
    PlaneMap G = F;
    if (F.d1 < F.d2) {
        G = PlaneMap(F.g, F.f, F.d2, F.d1);  // the formulas assume d1 >= d2
        r.flags.push_back("swapped-components");
    }
    long hi = G.d1, lo = G.d2;
    r.D = hi + lo - 2;
    r.gcdDeg = std::gcd(hi, lo);
    r.cuspFormula = cusp_count_formula(hi, lo);
    r.nodeFormula = node_count_formula(hi, lo);
    auto [genus, punctures] = critical_topology(hi, lo);
    r.criticalGenus = genus;
    r.pointsAtInfinity = punctures;
    r.discriminantDegree = discriminant_degree(hi, lo);
    r.deltaInfinity = delta_at_infinity(hi, lo);
    r.serreResidual = serre_residual(hi, lo);

    r.genericity = genericity_report(G, seed, budget);
    r.computed = computed_cusp_count(G, budget, prime);
    r.computed.certified = r.genericity.jJ11DisjointInfinity == Verdict::pass &&
                           r.genericity.jJ11Transversal == Verdict::pass;

    r.flags.push_back("assumed-proper");
    if (prime != 0) r.flags.push_back("prime-field-mode");
    if (hi == 1 && lo == 1) r.flags.push_back("degenerate-linear");
    if (r.computed.count && !r.computed.certified) r.flags.push_back("non-certified");
    if (r.serreResidual != 0) throw std::logic_error("Serre residual must vanish");
    return r;
}

}  // namespace cuspcensus
