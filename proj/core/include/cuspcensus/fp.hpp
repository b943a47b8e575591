#pragma once

#include <cstdint>
#include <stdexcept>

#include "cuspcensus/rational.hpp"

namespace cuspcensus {

// Largest prime below 2^63; the documented default modulus of prime mode.
inline constexpr uint64_t kDefaultPrime = 9223372036854775783ull;

// Element of F_p for a runtime prime p < 2^63. Elements with p == 0 are
// integer literals produced by generic code; they adopt a modulus on first
// contact with a genuine field element.
struct FpElt {
    uint64_t v = 0;
    uint64_t p = 0;

    FpElt() = default;
    FpElt(long n) : v(uint64_t(n >= 0 ? n : -n)), neg_(n < 0) {}  // NOLINT: generic literal
    FpElt(uint64_t value, uint64_t prime) : v(value % prime), p(prime) {}

    static FpElt from_rat(const Rat& r, uint64_t prime) {
        Int num = r.get_num() % Int(prime);
        if (num < 0) num += Int(prime);
        Int den = r.get_den() % Int(prime);
        if (den == 0) throw std::domain_error("denominator divisible by the prime modulus");
        FpElt a(num.get_ui(), prime);
        FpElt b(den.get_ui(), prime);
        return a / b;
    }

    uint64_t reduced(uint64_t prime) const {
        uint64_t r = v % prime;
        if (neg_ && r != 0) r = prime - r;
        return r;
    }

    friend uint64_t common_prime(const FpElt& a, const FpElt& b) {
        if (a.p && b.p && a.p != b.p) throw std::logic_error("mixed prime moduli");
        return a.p ? a.p : b.p;
    }

    friend FpElt operator+(const FpElt& a, const FpElt& b) {
        uint64_t q = common_prime(a, b);
        if (q == 0) throw std::logic_error("Fp arithmetic on bare literals");
        uint64_t x = a.reduced(q), y = b.reduced(q);
        uint64_t s = x + y >= q || x + y < x ? x - (q - y) : x + y;
        return FpElt(s, q);
    }
    friend FpElt operator-(const FpElt& a, const FpElt& b) { return a + (-b); }
    FpElt operator-() const {
        if (p == 0) {
            FpElt r = *this;
            r.neg_ = !r.neg_;
            return r;
        }
        return FpElt(v == 0 ? 0 : p - v, p);
    }
    friend FpElt operator*(const FpElt& a, const FpElt& b) {
        uint64_t q = common_prime(a, b);
        if (q == 0) throw std::logic_error("Fp arithmetic on bare literals");
        unsigned __int128 prod = (unsigned __int128)a.reduced(q) * b.reduced(q);
        return FpElt(uint64_t(prod % q), q);
    }
    friend FpElt operator/(const FpElt& a, const FpElt& b) {
        uint64_t q = common_prime(a, b);
        uint64_t bv = b.reduced(q);
        if (bv == 0) throw std::domain_error("division by zero in F_p");
        // inverse via Fermat
        uint64_t base = bv, e = q - 2, acc = 1;
        while (e) {
            if (e & 1) acc = uint64_t((unsigned __int128)acc * base % q);
            base = uint64_t((unsigned __int128)base * base % q);
            e >>= 1;
        }
        return a * FpElt(acc, q);
    }
    FpElt& operator+=(const FpElt& o) { return *this = *this + o; }
    FpElt& operator*=(const FpElt& o) { return *this = *this * o; }

    friend bool operator==(const FpElt& a, const FpElt& b) {
        uint64_t q = common_prime(a, b);
        if (q == 0) return a.v == b.v && (a.v == 0 || a.neg_ == b.neg_);
        return a.reduced(q) == b.reduced(q);
    }

private:
    bool neg_ = false;
};

}  // namespace cuspcensus
