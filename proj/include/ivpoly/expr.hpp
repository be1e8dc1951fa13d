#ifndef IVPOLY_EXPR_HPP
#define IVPOLY_EXPR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ivpoly/poly.hpp"
#include "ivpoly/rational.hpp"

namespace ivpoly {

// Parses a polynomial expression over x (or X): integer and rational
// literals, + - * / ^, parentheses, implicit multiplication (e.g.
// "(x-1)(x-3)/3"). Division is only allowed by nonzero constants. Throws
// ParseError with the offending position.
PolyQ parse_poly(std::string_view text);

// Canonical printing: terms in descending degree, coefficients in lowest
// terms, deterministic spacing. parse_poly(poly_to_string(f)) == f.
std::string poly_to_string(const PolyQ& f);

// Comma-separated rationals ("1,3" or "1/2,-5/3").
std::vector<Rat> parse_rat_list(std::string_view text);

// Comma-separated integers.
std::vector<Int> parse_int_list(std::string_view text);

} // namespace ivpoly

#endif
