#ifndef BSARR_PARSE_HPP
#define BSARR_PARSE_HPP

#include <string>
#include <vector>

#include "bsarr/poly.hpp"

namespace bsarr {

// Restricted infix grammar: integer coefficients, variables x,y,z,w or
// x1..xn, operators + - * ^ and parentheses. Throws StructuralError with
// position info on malformed input.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);

// Same, with the ambient variable list inferred from the variables that
// appear (canonically ordered: x<y<z<w, or x1<x2<...).
Poly parse_poly(const std::string& text);

std::vector<std::string> infer_poly_vars(const std::string& text);

}  // namespace bsarr

#endif
