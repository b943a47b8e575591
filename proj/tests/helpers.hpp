#pragma once

#include <string>

#include "cuspcensus/poly_io.hpp"

namespace cuspcensus::testing {

inline Poly P(const std::string& s, VarSet vars = VarSet::xy()) { return parse_poly(s, vars); }

inline Poly X() { return Poly::variable(VarSet::xy(), Var::x); }
inline Poly Y() { return Poly::variable(VarSet::xy(), Var::y); }

}  // namespace cuspcensus::testing
