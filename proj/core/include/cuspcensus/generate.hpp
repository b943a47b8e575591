#pragma once

#include <cstdint>

#include "cuspcensus/jets.hpp"

namespace cuspcensus {

// splitmix64: the documented deterministic generator behind `gen`, the row
// check's shear and the auto-drawn target rotations.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4B9C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [-bound, bound]
    long coefficient(long bound) {
        return long(next() % uint64_t(2 * bound + 1)) - bound;
    }
};

// Dense map with integer coefficients drawn uniformly from
// [-coeffBound, coeffBound]; identical (seed, d1, d2, coeffBound) give a
// byte-identical map. Coefficients of f come first, then g; within a
// component, monomials are visited by total degree 0..d and x-exponent
// descending within each degree.
PlaneMap generate_map(int d1, int d2, uint64_t seed, long coeff_bound = 10);

}  // namespace cuspcensus
