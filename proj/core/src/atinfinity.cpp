#include "cuspcensus/atinfinity.hpp"

#include <numeric>
#include <stdexcept>

namespace cuspcensus {

ExponentSequence::ExponentSequence(long a0_, std::vector<long> higher_)
    : a0(a0_), higher(std::move(higher_)) {
    if (a0 < 1) throw std::invalid_argument("a0 must be a positive integer");
    long prev = 0;
    long g = a0;
    for (long a : higher) {
        if (a <= prev || a < 1) throw std::invalid_argument("exponents must increase strictly");
        prev = a;
        g = std::gcd(g, a);
    }
    if (g != 1) throw std::invalid_argument("incomplete exponent sequence: gcd chain never reaches 1");
}

Rat milnor_delta(const ExponentSequence& seq) {
    long D = seq.a0;
    Rat sum(0);
    for (long a : seq.higher) {
        long Dnext = std::gcd(D, a);
        sum += Rat(a - 1) * Rat(D - Dnext);
        D = Dnext;
    }
    Rat delta = sum / 2;
    if (!is_integer(delta)) throw std::logic_error("delta of a complete sequence must be integral");
    return delta;
}

ExponentSequence branch_exponents(long d1, long d2) {
    if (!(d1 > d2 && d2 >= 1)) throw std::invalid_argument("branch exponents need d1 > d2 >= 1");
    return ExponentSequence(d1 - d2, {d1, d1 + 1});
}

Rat branch_delta(long d1, long d2) {
    Rat via_exponents = milnor_delta(branch_exponents(d1, d2));
    long d = std::gcd(d1, d2);
    Rat closed = Rat((d1 - 1) * (d1 - d2 - 1) + (d - 1)) / 2;
    if (via_exponents != closed)
        throw std::logic_error("branch delta: exponent route and closed form disagree");
    return closed;
}

long pairwise_intersection(long d1, long d2) {
    if (d1 <= d2) throw std::invalid_argument("pairwise intersection needs d1 > d2");
    return d1 * (d1 - d2);
}

long delta_at_infinity(long d1, long d2) {
    if (!(d1 >= d2 && d2 >= 1)) throw std::invalid_argument("delta at infinity needs d1 >= d2 >= 1");
    if (d1 == d2) return 0;
    long D = d1 + d2 - 2;
    long d = std::gcd(d1, d2);
    Rat closed = Rat(d1 * (d1 - d2)) * Rat(D) * Rat(D) / 2 + Rat((-2 * d1 + d2 + d)) * Rat(D) / 2;
    Rat structural = Rat(D) * branch_delta(d1, d2) +
                     Rat(D * (D - 1) / 2) * Rat(pairwise_intersection(d1, d2));
    if (closed != structural)
        throw std::logic_error("delta at infinity: closed form and branch sum disagree");
    if (!is_integer(closed)) throw std::logic_error("delta at infinity must be integral");
    return long(closed.get_num().get_si());
}

InfinityProfile infinity_profile(long d1, long d2) {
    if (!(d1 >= d2 && d2 >= 1)) throw std::invalid_argument("infinity profile needs d1 >= d2 >= 1");
    InfinityProfile p;
    p.branchCount = d1 + d2 - 2;
    p.smoothAtInfinity = d1 == d2;
    if (d1 == d2) {
        p.branchDelta = Rat(0);
        p.pairwiseIntersection = 0;
        p.totalDelta = 0;
        return p;
    }
    p.branchDelta = branch_delta(d1, d2);
    p.pairwiseIntersection = pairwise_intersection(d1, d2);
    p.totalDelta = delta_at_infinity(d1, d2);
    return p;
}

}  // namespace cuspcensus
