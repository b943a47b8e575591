#include "cuspcensus/jets.hpp"

#include <stdexcept>

namespace cuspcensus {

PlaneMap::PlaneMap(Poly f_, Poly g_, int d1_, int d2_) : f(std::move(f_)), g(std::move(g_)), d1(d1_), d2(d2_) {
    if (!(f.vars() == VarSet::xy()) || !(g.vars() == VarSet::xy()))
        throw VariableMismatch("plane map components must live in {x,y}");
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("degree caps must be at least 1");
    if (f.degree() > d1 || g.degree() > d2)
        throw std::invalid_argument("component degree exceeds its declared cap");
}

PlaneMap PlaneMap::of(Poly f_, Poly g_) {
    int c1 = std::max(1, f_.degree());
    int c2 = std::max(1, g_.degree());
    return PlaneMap(std::move(f_), std::move(g_), c1, c2);
}

namespace {

struct Partials {
    Poly fx, fy, gx, gy, fxx, fxy, fyy, gxx, gxy, gyy;
};

Partials partials_of(const PlaneMap& F) {
    Partials p{F.f.partial(Var::x), F.f.partial(Var::y), F.g.partial(Var::x),
               F.g.partial(Var::y), Poly(),              Poly(),
               Poly(),              Poly(),              Poly(),
               Poly()};
    p.fxx = p.fx.partial(Var::x);
    p.fxy = p.fx.partial(Var::y);
    p.fyy = p.fy.partial(Var::y);
    p.gxx = p.gx.partial(Var::x);
    p.gxy = p.gx.partial(Var::y);
    p.gyy = p.gy.partial(Var::y);
    return p;
}

// the two brackets shared by L2 and L3
Poly bracket1(const Partials& p) { return p.fxx * p.gy + p.fx * p.gxy - p.fxy * p.gx - p.fy * p.gxx; }
Poly bracket2(const Partials& p) { return p.fxy * p.gy + p.fx * p.gyy - p.fyy * p.gx - p.fy * p.gxy; }

}  // namespace

Poly jacobian_curve(const PlaneMap& F) {
    Partials p = partials_of(F);
    return p.fx * p.gy - p.fy * p.gx;
}

Poly j11_curve(const PlaneMap& F) {
    Partials p = partials_of(F);
    return bracket1(p) * p.fy - bracket2(p) * p.fx;
}

Poly j12_curve(const PlaneMap& F) {
    Partials p = partials_of(F);
    return bracket1(p) * p.gy - bracket2(p) * p.gx;
}

JetTriple jet_triple(const PlaneMap& F) {
    Partials p = partials_of(F);
    Poly b1 = bracket1(p), b2 = bracket2(p);
    return JetTriple{p.fx * p.gy - p.fy * p.gx, b1 * p.fy - b2 * p.fx, b1 * p.gy - b2 * p.gx};
}

}  // namespace cuspcensus
