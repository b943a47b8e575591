#pragma once

#include <string>

#include "cuspcensus/poly.hpp"

namespace cuspcensus {

// Canonical rendering: terms in descending grevlex, exact rational
// coefficients, e.g. "3*x^2*y - 1/2*y^3 + x - 7". parse(to_string(p)) == p.
std::string to_string(const Poly& p);

// Grammar (whitespace-insensitive):
//   poly  := ("-")? term (("+"|"-") term)*
//   term  := coeff ("*" mono)? | mono
//   coeff := int | int "/" posint
//   mono  := var ("^" posint)? ("*" var ("^" posint)?)*
//   var   := "x" | "y" | "z"
// Throws ParseError with line/column. Variables must lie in `vars`.
Poly parse_poly(const std::string& text, VarSet vars = VarSet::xy());

}  // namespace cuspcensus
