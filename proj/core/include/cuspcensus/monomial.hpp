#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cuspcensus {

// The ambient variable universe is fixed: x, y and the homogenizer z.
enum class Var : uint8_t { x = 0, y = 1, z = 2 };

inline char var_name(Var v) { return "xyz"[static_cast<int>(v)]; }

// Ordered subset of {x,y,z}, as a bitmask.
class VarSet {
public:
    constexpr VarSet() = default;
    constexpr explicit VarSet(uint8_t mask) : mask_(mask) {}

    static constexpr VarSet xy() { return VarSet(0b011); }
    static constexpr VarSet xyz() { return VarSet(0b111); }
    static constexpr VarSet of(Var v) { return VarSet(uint8_t(1u << static_cast<int>(v))); }

    constexpr bool contains(Var v) const { return mask_ & (1u << static_cast<int>(v)); }
    constexpr bool operator==(const VarSet&) const = default;
    constexpr VarSet with(Var v) const { return VarSet(uint8_t(mask_ | (1u << static_cast<int>(v)))); }
    constexpr VarSet without(Var v) const { return VarSet(uint8_t(mask_ & ~(1u << static_cast<int>(v)))); }
    constexpr uint8_t mask() const { return mask_; }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < 3; ++i)
            if (mask_ & (1u << i)) s += var_name(static_cast<Var>(i));
        return s;
    }

private:
    uint8_t mask_ = 0;
};

// Exponent vector over the fixed universe; slots of variables outside the
// owning polynomial's VarSet stay zero.
struct Mono {
    std::array<uint32_t, 3> e{0, 0, 0};

    uint32_t deg() const { return e[0] + e[1] + e[2]; }
    uint32_t operator[](Var v) const { return e[static_cast<size_t>(v)]; }
    uint32_t& operator[](Var v) { return e[static_cast<size_t>(v)]; }

    bool operator==(const Mono&) const = default;

    bool divides(const Mono& m) const {
        return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
    }

    Mono operator*(const Mono& m) const {
        return Mono{{e[0] + m.e[0], e[1] + m.e[1], e[2] + m.e[2]}};
    }

    // quotient of m by *this must exist (divides)
    Mono quotient_into(const Mono& m) const {
        return Mono{{m.e[0] - e[0], m.e[1] - e[1], m.e[2] - e[2]}};
    }

    static Mono lcm(const Mono& a, const Mono& b) {
        return Mono{{std::max(a.e[0], b.e[0]), std::max(a.e[1], b.e[1]),
                     std::max(a.e[2], b.e[2])}};
    }

    static Mono one() { return Mono{}; }
    static Mono var(Var v, uint32_t k = 1) {
        Mono m;
        m[v] = k;
        return m;
    }
};

// Graded reverse-lexicographic: higher total degree wins; on ties the
// monomial whose last nonzero exponent difference is negative is larger.
inline int grevlex_cmp(const Mono& a, const Mono& b) {
    uint32_t da = a.deg(), db = b.deg();
    if (da != db) return da < db ? -1 : 1;
    for (int i = 2; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

// Descending order, so map::begin() is the leading term.
struct GrevlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grevlex_cmp(a, b) > 0; }
};

}  // namespace cuspcensus
