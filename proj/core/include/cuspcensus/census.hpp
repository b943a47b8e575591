#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspcensus/genericity.hpp"
#include "cuspcensus/localint.hpp"

namespace cuspcensus {

long cusp_count_formula(long d1, long d2);
long node_count_formula(long d1, long d2);
// (genus, punctures) of the critical curve; (0,0) for the linear case
std::pair<long, long> critical_topology(long d1, long d2);
long discriminant_degree(long d1, long d2);

// (d1*D - 1)(d1*D - 2)/2 - (D-1)(D-2)/2 - cusps - nodes - delta_at_infinity,
// with d1 >= d2; identically zero by the Serre identity.
long serre_residual(long d1, long d2);

struct ComputedCusps {
    std::optional<long> count;    // nullopt = "n/a"
    std::optional<long> dimJJ11;
    std::optional<long> dimGrad;
    bool certified = false;       // jet-curve genericity verdicts passed
    bool budgetExhausted = false;
    std::string diagnosis;
};

// dim Q[x,y]/(J, J11) - dim Q[x,y]/(f_x, f_y), the Groebner realization of
// the global cusp count. A nonzero prime switches the quotient dimensions to
// the F_p accelerator; accepted answers stay reproducible in rational mode.
ComputedCusps computed_cusp_count(const PlaneMap& F, long budget = kDefaultBudget,
                                  uint64_t prime = 0);

struct Mat2 {
    Rat a, b, c, d;  // rows (a b; c d)
    Rat det() const { return a * d - b * c; }
};

// Index of a generalized cusp at a rational point: the local intersection
// number I_a(J(F'), J11(F')) - I_a(f'_x, f'_y) for F' = T o F. With
// T = nullopt, two independent T draws from the seed must agree.
long generalized_cusp_index(const PlaneMap& F, const RatPoint& a,
                            std::optional<Mat2> T = std::nullopt, uint64_t seed = 0);

struct CuspSumBound {
    long sum = 0;
    long bound = 0;
    bool ok = false;
};

CuspSumBound cusp_sum_bound_check(const PlaneMap& F, const std::vector<RatPoint>& points,
                                  uint64_t seed = 0);

struct CensusReport {
    long d1 = 1, d2 = 1;
    long D = 0;
    long gcdDeg = 1;
    long cuspFormula = 0;
    long nodeFormula = 0;
    long criticalGenus = 0;
    long pointsAtInfinity = 0;
    long discriminantDegree = 0;
    long deltaInfinity = 0;
    ComputedCusps computed;
    GenericityReport genericity;
    long serreResidual = 0;
    uint64_t seed = 0;
    std::vector<std::string> flags;
};

CensusReport full_census(const PlaneMap& F, uint64_t seed, long budget = kDefaultBudget,
                         uint64_t prime = 0);

}  // namespace cuspcensus
