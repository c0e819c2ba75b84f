#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "detconv/convolve.hpp"
#include "detconv/gsvd.hpp"
#include "detconv/permanent.hpp"
#include "detconv/rng.hpp"

// Seeded random instances shared by the verify suites and the tests.
namespace detconv::instances {

RationalMatrix integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo = -3, int hi = 3);
// Entries p/q with p in [-5, 5], q in [1, 4].
RationalMatrix rational_matrix(Rng& rng, std::size_t rows, std::size_t cols);
// Integer entries on a constant PolyMatrix of the given arity.
PolyMatrix integer_poly_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t arity, int lo = -3,
                               int hi = 3);

// Arity 2 (x, y) with integer entries in [-3, 3].
LocalInstance local(Rng& rng, std::size_t d, std::size_t m);
GlobalInstance global(Rng& rng, std::size_t n, std::size_t d);
GsvcpInstance gsvcp(Rng& rng, std::size_t m, std::size_t s, std::size_t t);
RankDecomposition rank_decomposition(Rng& rng, std::size_t n, std::size_t k, int lo = -3, int hi = 3);

// Monic polynomial prod (x - r_i) with integer roots in [-3, 3].
std::vector<Rational> integer_roots(Rng& rng, std::size_t d);

}  // namespace detconv::instances
