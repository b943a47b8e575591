#pragma once

#include "cuspcensus/poly.hpp"

namespace cuspcensus {

// Polynomial plane map F = (f, g) with declared degree caps.
struct PlaneMap {
    Poly f;
    Poly g;
    int d1 = 1;
    int d2 = 1;

    PlaneMap(Poly f_, Poly g_, int d1_, int d2_);

    // caps taken from the actual degrees (at least 1)
    static PlaneMap of(Poly f_, Poly g_);
};

// The critical curve and the two second-order jet curves.
struct JetTriple {
    Poly J;    // f_x g_y - f_y g_x
    Poly J11;  // bracket1 * f_y - bracket2 * f_x
    Poly J12;  // bracket1 * g_y - bracket2 * g_x
};

Poly jacobian_curve(const PlaneMap& F);
Poly j11_curve(const PlaneMap& F);
Poly j12_curve(const PlaneMap& F);
JetTriple jet_triple(const PlaneMap& F);

}  // namespace cuspcensus
