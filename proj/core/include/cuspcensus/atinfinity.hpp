#pragma once

#include <vector>

#include "cuspcensus/rational.hpp"

namespace cuspcensus {

// Puiseux characteristic data (a0; a1 < a2 < ...) of one branch.
struct ExponentSequence {
    long a0 = 1;
    std::vector<long> higher;

    ExponentSequence(long a0_, std::vector<long> higher_);
};

struct InfinityProfile {
    long branchCount = 0;
    Rat branchDelta;
    long pairwiseIntersection = 0;
    long totalDelta = 0;
    bool smoothAtInfinity = false;  // true iff d1 == d2
};

// 1/2 * sum_j (a_j - 1)(D_j - D_{j+1}) with D_j = gcd(a0,...,a_{j-1});
// requires the gcd chain to reach 1, and the result is always an integer.
Rat milnor_delta(const ExponentSequence& seq);

// (d1 - d2; d1, d1 + 1), the branch exponents of the discriminant at its
// single point at infinity; requires d1 > d2 >= 1.
ExponentSequence branch_exponents(long d1, long d2);

// Delta of one branch; the closed form and milnor_delta(branch_exponents)
// are computed on both routes and must agree.
Rat branch_delta(long d1, long d2);

// d1 * (d1 - d2); requires d1 > d2
long pairwise_intersection(long d1, long d2);

// Total delta invariant of the discriminant at infinity; 0 when d1 == d2.
// Computed by both the closed form and the structural branch sum; a
// disagreement is a hard failure.
long delta_at_infinity(long d1, long d2);

InfinityProfile infinity_profile(long d1, long d2);

}  // namespace cuspcensus
