#pragma once

#include <optional>

#include "cuspcensus/poly.hpp"

namespace cuspcensus {

struct RatPoint {
    Rat x;
    Rat y;

    static RatPoint origin() { return RatPoint{Rat(0), Rat(0)}; }
};

// P(x + a.x, y + a.y)
Poly translate_to_origin(const Poly& P, const RatPoint& a);

// Local intersection multiplicity I_a(P,Q) of two plane curves at a rational
// point, by the classical axiomatic recursion. nullopt encodes "infinite"
// (P and Q share an irreducible component through a).
std::optional<long> intersection_number(const Poly& P, const Poly& Q, const RatPoint& a);

}  // namespace cuspcensus
