#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cuspcensus/errors.hpp"
#include "cuspcensus/monomial.hpp"
#include "cuspcensus/rational.hpp"

namespace cuspcensus {

// Sparse polynomial over a field coefficient type C (exact rationals in
// production, a prime field for the probabilistic accelerator). Stored
// coefficients are never zero; terms iterate in descending grevlex order.
template <class C>
class PolyT {
public:
    using coef_type = C;
    using term_map = std::map<Mono, C, GrevlexGreater>;

    PolyT() : vars_(VarSet::xy()) {}
    explicit PolyT(VarSet vars) : vars_(vars) {}

    static PolyT zero(VarSet vars) { return PolyT(vars); }

    static PolyT constant(VarSet vars, const C& c) {
        PolyT p(vars);
        p.add_term(Mono::one(), c);
        return p;
    }

    static PolyT monomial(VarSet vars, const Mono& m, const C& c) {
        PolyT p(vars);
        p.check_mono(m);
        p.add_term(m, c);
        return p;
    }

    static PolyT variable(VarSet vars, Var v) {
        if (!vars.contains(v))
            throw VariableMismatch("variable not in ring: " + std::string(1, var_name(v)));
        PolyT p(vars);
        p.add_term(Mono::var(v), C(1));
        return p;
    }

    VarSet vars() const { return vars_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono::one());
    }
    size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial
    int degree() const { return terms_.empty() ? -1 : int(terms_.begin()->first.deg()); }

    int degree_in(Var v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, int(m[v]));
        return d;
    }

    const Mono& lead_mono() const { return terms_.begin()->first; }
    const C& lead_coef() const { return terms_.begin()->second; }

    C coef(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Mono& m, const C& c) {
        if (c == C(0)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    PolyT operator-() const {
        PolyT r(vars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    PolyT operator+(const PolyT& o) const {
        check_same_ring(o);
        PolyT r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    PolyT operator-(const PolyT& o) const {
        check_same_ring(o);
        PolyT r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    PolyT operator*(const PolyT& o) const {
        check_same_ring(o);
        PolyT r(vars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    PolyT operator*(const C& c) const {
        PolyT r(vars_);
        if (c == C(0)) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    PolyT mul_mono(const Mono& m, const C& c) const {
        PolyT r(vars_);
        if (c == C(0)) return r;
        for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
        return r;
    }

    bool operator==(const PolyT& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    // formal partial derivative
    PolyT partial(Var v) const {
        if (!vars_.contains(v))
            throw VariableMismatch("partial with respect to a variable outside the ring");
        PolyT r(vars_);
        for (const auto& [m, c] : terms_) {
            uint32_t e = m[v];
            if (e == 0) continue;
            Mono d = m;
            d[v] = e - 1;
            r.add_term(d, c * C(long(e)));
        }
        return r;
    }

    C eval(const C& x, const C& y, const C& z = C(0)) const {
        C acc(0);
        for (const auto& [m, c] : terms_) {
            C t = c;
            for (uint32_t i = 0; i < m[Var::x]; ++i) t *= x;
            for (uint32_t i = 0; i < m[Var::y]; ++i) t *= y;
            for (uint32_t i = 0; i < m[Var::z]; ++i) t *= z;
            acc += t;
        }
        return acc;
    }

    // Substitute a polynomial for each variable; result lives in `target`.
    PolyT compose(VarSet target, const PolyT& sx, const PolyT& sy,
                  const PolyT& sz = PolyT()) const {
        PolyT r(target);
        for (const auto& [m, c] : terms_) {
            PolyT t = PolyT::constant(target, c);
            for (uint32_t i = 0; i < m[Var::x]; ++i) t = t * sx;
            for (uint32_t i = 0; i < m[Var::y]; ++i) t = t * sy;
            for (uint32_t i = 0; i < m[Var::z]; ++i) t = t * sz;
            r = r + t;
        }
        return r;
    }

    // Set one variable to a constant; the variable leaves the ring.
    PolyT substitute_const(Var v, const C& val) const {
        if (!vars_.contains(v)) throw VariableMismatch("substituted variable outside the ring");
        PolyT r(vars_.without(v));
        for (const auto& [m, c] : terms_) {
            C t = c;
            for (uint32_t i = 0; i < m[v]; ++i) t *= val;
            Mono mm = m;
            mm[v] = 0;
            r.add_term(mm, t);
        }
        return r;
    }

private:
    void check_same_ring(const PolyT& o) const {
        if (!(vars_ == o.vars_))
            throw VariableMismatch("variable-list mismatch: {" + vars_.to_string() + "} vs {" +
                                   o.vars_.to_string() + "}");
    }
    void check_mono(const Mono& m) const {
        for (int i = 0; i < 3; ++i)
            if (m.e[i] > 0 && !vars_.contains(static_cast<Var>(i)))
                throw VariableMismatch("exponent on a variable outside the ring");
    }

    VarSet vars_;
    term_map terms_;
};

using Poly = PolyT<Rat>;

// z^target * p(x/z, y/z); setting z=1 recovers p.
inline Poly homogenize(const Poly& p, int target_deg, Var new_var = Var::z) {
    if (p.vars().contains(new_var))
        throw VariableMismatch("homogenizer already in the ring");
    if (target_deg < p.degree())
        throw std::invalid_argument("homogenize: target degree below deg p");
    Poly r(p.vars().with(new_var));
    for (const auto& [m, c] : p.terms()) {
        Mono mm = m;
        mm[new_var] = uint32_t(target_deg) - m.deg();
        r.add_term(mm, c);
    }
    return r;
}

// Homogeneous component of top degree. For polynomials in {x,y} this is the
// binary form whose projective roots are the points at infinity.
inline Poly top_form(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("top_form of the zero polynomial");
    uint32_t d = uint32_t(p.degree());
    Poly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (m.deg() == d) r.add_term(m, c);
    }
    return r;
}

// Reinterpret p in a larger (or equal) ring.
inline Poly embed(const Poly& p, VarSet vars) {
    Poly r(vars);
    for (const auto& [m, c] : p.terms()) r.add_term(m, c);  // add_term keeps canonical form
    for (int i = 0; i < 3; ++i) {
        Var v = static_cast<Var>(i);
        if (!vars.contains(v) && p.degree_in(v) > 0)
            throw VariableMismatch("embed: target ring lacks a used variable");
    }
    return r;
}

}  // namespace cuspcensus
