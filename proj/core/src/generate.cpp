#include "cuspcensus/generate.hpp"

#include <stdexcept>

namespace cuspcensus {

namespace {

Poly dense_random(int d, SplitMix64& rng, long bound) {
    Poly p(VarSet::xy());
    for (int t = 0; t <= d; ++t)
        for (int i = t; i >= 0; --i) {
            long c = rng.coefficient(bound);
            if (c != 0) p.add_term(Mono{{uint32_t(i), uint32_t(t - i), 0}}, Rat(c));
        }
    return p;
}

}  // namespace

PlaneMap generate_map(int d1, int d2, uint64_t seed, long coeff_bound) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("degrees must be at least 1");
    if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
    SplitMix64 rng(seed);
    Poly f = dense_random(d1, rng, coeff_bound);
    Poly g = dense_random(d2, rng, coeff_bound);
    return PlaneMap(std::move(f), std::move(g), d1, d2);
}

}  // namespace cuspcensus
