#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "cuspcensus/fp.hpp"
#include "cuspcensus/poly.hpp"

namespace cuspcensus {

inline constexpr long kDefaultBudget = 200000;

// Ideal in Q[x,y] under the fixed graded reverse-lexicographic order.
struct IdealBasis {
    std::vector<Poly> generators;

    explicit IdealBasis(std::vector<Poly> gens) {
        for (auto& g : gens)
            if (!g.is_zero()) generators.push_back(std::move(g));
    }
};

struct QuotientInfo {
    bool isZeroDimensional = false;
    std::optional<long> dimension;  // nullopt = infinite
    std::vector<Mono> standardMonomials;
};

namespace detail {

template <class C>
PolyT<C> make_monic(const PolyT<C>& p) {
    if (p.is_zero()) return p;
    return p * (C(1) / p.lead_coef());
}

// full normal form; every cancellation step costs one unit of budget
template <class C>
PolyT<C> normal_form(PolyT<C> f, const std::vector<PolyT<C>>& basis, long& budget) {
    PolyT<C> r(f.vars());
    while (!f.is_zero()) {
        const Mono& lm = f.lead_mono();
        bool reduced = false;
        for (const auto& b : basis) {
            if (b.is_zero() || !b.lead_mono().divides(lm)) continue;
            if (--budget < 0) throw BudgetExceeded("Groebner reduction budget exceeded");
            f = f - b.mul_mono(b.lead_mono().quotient_into(lm), f.lead_coef() / b.lead_coef());
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(lm, f.lead_coef());
            f = f - PolyT<C>::monomial(f.vars(), lm, f.lead_coef());
        }
    }
    return r;
}

struct Pair {
    long sugar;
    Mono lcm;
    size_t i, j;
    bool operator<(const Pair& o) const {
        if (sugar != o.sugar) return sugar < o.sugar;
        int c = grevlex_cmp(lcm, o.lcm);
        if (c != 0) return c < 0;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

}  // namespace detail

// Buchberger with the sugar selection strategy and both classical criteria.
// Returns the reduced Groebner basis (monic, interreduced, descending lead
// monomials). Throws BudgetExceeded rather than degrading.
template <class C>
std::vector<PolyT<C>> groebner(const std::vector<PolyT<C>>& generators,
                               long budget = kDefaultBudget) {
    using P = PolyT<C>;
    std::vector<P> basis;
    std::vector<long> sugar;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        basis.push_back(detail::make_monic(g));
        sugar.push_back(g.degree());
    }
    if (basis.empty()) return {};
    VarSet vars = basis.front().vars();

    std::set<detail::Pair> pairs;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (basis[i].is_zero()) continue;
            Mono l = Mono::lcm(basis[i].lead_mono(), basis[j].lead_mono());
            long s = std::max(sugar[i] + long(l.deg()) - long(basis[i].lead_mono().deg()),
                              sugar[j] + long(l.deg()) - long(basis[j].lead_mono().deg()));
            pairs.insert(detail::Pair{s, l, i, j});
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    auto pending = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        Mono l = Mono::lcm(basis[a].lead_mono(), basis[b].lead_mono());
        long s = std::max(sugar[a] + long(l.deg()) - long(basis[a].lead_mono().deg()),
                          sugar[b] + long(l.deg()) - long(basis[b].lead_mono().deg()));
        return pairs.count(detail::Pair{s, l, a, b}) > 0;
    };

    while (!pairs.empty()) {
        detail::Pair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const P &bi = basis[pr.i], &bj = basis[pr.j];
        if (bi.is_zero() || bj.is_zero()) continue;

        // Buchberger 1: coprime leading monomials
        Mono prod = bi.lead_mono() * bj.lead_mono();
        if (prod == pr.lcm) continue;
        // chain criterion
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j || basis[k].is_zero()) continue;
            if (basis[k].lead_mono().divides(pr.lcm) && !pending(pr.i, k) && !pending(pr.j, k))
                chained = true;
        }
        if (chained) continue;

        P s = bi.mul_mono(bi.lead_mono().quotient_into(pr.lcm), C(1)) -
              bj.mul_mono(bj.lead_mono().quotient_into(pr.lcm), C(1));
        P r = detail::normal_form(s, basis, budget);
        if (r.is_zero()) continue;
        basis.push_back(detail::make_monic(r));
        sugar.push_back(pr.sugar);
        push_pairs(basis.size() - 1);
    }

    // interreduce to the reduced basis
    std::vector<P> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].is_zero()) continue;
            if (basis[j].lead_mono().divides(basis[i].lead_mono()) &&
                !(j > i && basis[j].lead_mono() == basis[i].lead_mono())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<P> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = detail::make_monic(detail::normal_form(reduced[i], others, budget));
    }
    std::erase_if(reduced, [](const P& p) { return p.is_zero(); });
    std::sort(reduced.begin(), reduced.end(), [](const P& a, const P& b) {
        return grevlex_cmp(a.lead_mono(), b.lead_mono()) > 0;
    });
    (void)vars;
    return reduced;
}

// Quotient-algebra dimension over the base field: zero-dimensional iff each
// of x,y has a pure-power leading monomial in the reduced basis; the
// dimension counts standard monomials below the staircase.
template <class C>
QuotientInfo quotient_dimension_basis(const std::vector<PolyT<C>>& reduced) {
    QuotientInfo info;
    if (reduced.empty()) return info;  // zero ideal: infinite
    if (reduced.size() == 1 && reduced.front().is_constant()) {
        info.isZeroDimensional = true;
        info.dimension = 0;
        return info;
    }
    long ax = -1, ay = -1;
    for (const auto& g : reduced) {
        const Mono& m = g.lead_mono();
        if (m[Var::y] == 0 && m[Var::z] == 0) ax = long(m[Var::x]);
        if (m[Var::x] == 0 && m[Var::z] == 0 && m[Var::y] > 0) ay = long(m[Var::y]);
    }
    if (ax < 0 || ay < 0) return info;  // positive-dimensional
    info.isZeroDimensional = true;
    long count = 0;
    for (long i = 0; i < ax; ++i)
        for (long j = 0; j < ay; ++j) {
            Mono m{{uint32_t(i), uint32_t(j), 0}};
            bool standard = true;
            for (const auto& g : reduced)
                if (g.lead_mono().divides(m)) {
                    standard = false;
                    break;
                }
            if (standard) {
                info.standardMonomials.push_back(m);
                ++count;
            }
        }
    info.dimension = count;
    return info;
}

template <class C>
QuotientInfo quotient_dimension(const std::vector<PolyT<C>>& generators,
                                long budget = kDefaultBudget) {
    return quotient_dimension_basis(groebner(generators, budget));
}

inline QuotientInfo quotient_dimension(const IdealBasis& I, long budget = kDefaultBudget) {
    return quotient_dimension(I.generators, budget);
}

template <class C>
bool contains_one(const std::vector<PolyT<C>>& generators, long budget = kDefaultBudget) {
    auto g = groebner(generators, budget);
    return g.size() == 1 && g.front().is_constant() && !g.front().is_zero();
}

inline bool contains_one(const IdealBasis& I, long budget = kDefaultBudget) {
    return contains_one(I.generators, budget);
}

// Prime-field image of a rational ideal; throws std::domain_error if a
// denominator or a needed leading coefficient vanishes mod p.
std::vector<PolyT<FpElt>> to_fp(const std::vector<Poly>& gens, uint64_t prime);

}  // namespace cuspcensus
