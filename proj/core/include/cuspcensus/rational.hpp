#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cuspcensus {

// Exact rational coefficient. GMP keeps the canonical form
// (coprime numerator/denominator, denominator >= 1) for us.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "-3", "1/2", "7"
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace cuspcensus
