#include "detconv/instances.hpp"

namespace detconv::instances {

RationalMatrix integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.integer_in(lo, hi));
  return m;
}

RationalMatrix rational_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.integer_in(-5, 5)) / Rational(rng.integer_in(1, 4));
  return m;
}

PolyMatrix integer_poly_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t arity, int lo, int hi) {
  return PolyMatrix(integer_matrix(rng, rows, cols, lo, hi), arity);
}

LocalInstance local(Rng& rng, std::size_t d, std::size_t m) {
  LocalInstance inst;
  inst.d = d;
  inst.m = m;
  inst.u = integer_poly_matrix(rng, d, d, 2);
  inst.a1 = integer_poly_matrix(rng, d, m, 2);
  inst.a2 = integer_poly_matrix(rng, d, m, 2);
  inst.b1 = integer_poly_matrix(rng, m, d, 2);
  inst.b2 = integer_poly_matrix(rng, m, d, 2);
  return inst;
}

GlobalInstance global(Rng& rng, std::size_t n, std::size_t d) {
  GlobalInstance inst;
  for (std::size_t i = 0; i < n; ++i) {
    inst.a.push_back(integer_matrix(rng, d, d));
    inst.b.push_back(integer_matrix(rng, d, d));
  }
  return inst;
}

GsvcpInstance gsvcp(Rng& rng, std::size_t m, std::size_t s, std::size_t t) {
  return make_gsvcp_instance(integer_matrix(rng, s, m), integer_matrix(rng, t, m));
}

RankDecomposition rank_decomposition(Rng& rng, std::size_t n, std::size_t k, int lo, int hi) {
  RankDecomposition dec;
  dec.n = n;
  dec.a.assign(k, std::vector<Rational>(n));
  dec.b.assign(k, std::vector<Rational>(n));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      dec.a[r][i] = Rational(rng.integer_in(lo, hi));
      dec.b[r][i] = Rational(rng.integer_in(lo, hi));
    }
  return dec;
}

std::vector<Rational> integer_roots(Rng& rng, std::size_t d) {
  std::vector<Rational> roots;
  for (std::size_t i = 0; i < d; ++i) roots.emplace_back(rng.integer_in(-3, 3));
  return roots;
}

}  // namespace detconv::instances
