#pragma once

#include <cstdint>
#include <string>

#include "cuspcensus/groebner.hpp"
#include "cuspcensus/jets.hpp"

namespace cuspcensus {

enum class Verdict { pass, fail, budget };

std::string to_string(Verdict v);

struct GenericityReport {
    Verdict gradTransversal = Verdict::fail;        // grad f transversal self-intersections
    Verdict gradDisjointAtInfinity = Verdict::fail; // closure of {f_x=0},{f_y=0} miss each other at infinity
    Verdict jTransversalInfinity = Verdict::fail;   // closure of J meets L_inf transversally
    Verdict jJ11DisjointInfinity = Verdict::fail;   // closures of J and J11 disjoint at infinity
    Verdict noMixedVanishing = Verdict::fail;       // grad f = 0 forces grad g != 0
    Verdict gradDisjointJ12 = Verdict::fail;        // {grad f = 0} misses J12
    Verdict jJ11Transversal = Verdict::fail;        // J and J11 cross transversally
    Verdict infinityNonvanishing = Verdict::fail;   // f, g and the branch coefficients alive at infinity
    Verdict rowCondition = Verdict::fail;           // pairwise distinct f^d2 g^-d1 values at infinity
    long shear = 0;                                 // recorded shear used by the row check
    bool paperGenericEffective = false;

    bool all_pass() const {
        for (Verdict v : {gradTransversal, gradDisjointAtInfinity, jTransversalInfinity,
                          jJ11DisjointInfinity, noMixedVanishing, gradDisjointJ12,
                          jJ11Transversal, infinityNonvanishing, rowCondition})
            if (v != Verdict::pass) return false;
        return true;
    }
};

Verdict check_grad_transversal(const PlaneMap& F, long budget = kDefaultBudget);
// (disjoint-at-infinity verdict for J/J11, transversal-to-L_inf verdict)
std::pair<Verdict, Verdict> check_j_infinity(const PlaneMap& F, long budget = kDefaultBudget);
Verdict check_mixed_vanishing(const PlaneMap& F, long budget = kDefaultBudget);
Verdict check_grad_j12(const PlaneMap& F, long budget = kDefaultBudget);
Verdict check_j_j11_transversal(const PlaneMap& F, long budget = kDefaultBudget);
Verdict check_infinity_nonvanishing(const PlaneMap& F, long budget = kDefaultBudget);
// shear (recorded in *shear_out) is drawn deterministically from the seed
Verdict check_row(const PlaneMap& F, uint64_t seed, long* shear_out = nullptr,
                  long budget = kDefaultBudget);

GenericityReport genericity_report(const PlaneMap& F, uint64_t seed,
                                   long budget = kDefaultBudget);

}  // namespace cuspcensus
