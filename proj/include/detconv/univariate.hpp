#pragma once

#include <string_view>
#include <vector>

#include "detconv/multipoly.hpp"
#include "detconv/rational_matrix.hpp"

namespace detconv {

// Univariate polynomials are arity-1 MultiPolys in the variable x.

// Parses shorthand such as "x^2-1", "x^3 - 2*x + 1/2", "3x^2+x". Terms are
// [coeff][*]x[^k] or a bare rational coefficient.
MultiPoly parse_univariate(std::string_view text);

// Coefficients c[0..deg], lowest degree first. Requires arity 1.
std::vector<Rational> univariate_coefficients(const MultiPoly& p);
MultiPoly univariate_from_coefficients(const std::vector<Rational>& c);

bool is_monic(const MultiPoly& p);

// Companion matrix whose characteristic polynomial det(xI - C) is p (monic).
RationalMatrix companion_of(const MultiPoly& p);

// det(x I - A) as a univariate polynomial.
MultiPoly characteristic_polynomial(const RationalMatrix& a);

}  // namespace detconv
