#pragma once

#include "detconv/multipoly.hpp"
#include "detconv/rational_matrix.hpp"
#include "detconv/univariate.hpp"

namespace testing {

using namespace detconv;

inline MultiPoly var(std::size_t arity, std::size_t i) { return MultiPoly::variable(arity, i); }
inline MultiPoly cst(std::size_t arity, const Rational& c) { return MultiPoly(arity, c); }
inline MultiPoly uni(const char* text) { return parse_univariate(text); }
inline Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace testing
