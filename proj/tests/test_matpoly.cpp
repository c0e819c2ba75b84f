#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "detconv/error.hpp"
#include "detconv/index_set.hpp"
#include "detconv/instances.hpp"
#include "detconv/poly_matrix.hpp"
#include "detconv/rng.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

PolyMatrix from_rows(std::initializer_list<std::initializer_list<MultiPoly>> rows) {
  const std::size_t r = rows.size(), c = rows.begin()->size();
  PolyMatrix m(r, c, rows.begin()->begin()->arity());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& e : row) m.set(i, j++, e);
    ++i;
  }
  return m;
}

// Leibniz formula over all permutations: independent determinant oracle.
MultiPoly leibniz(const PolyMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  MultiPoly sum(a.arity());
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) sign = -sign;
    MultiPoly term(a.arity(), Rational(sign));
    for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
    sum += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

IndexSet random_subset(Rng& rng, std::size_t ambient, std::size_t k) {
  std::vector<std::size_t> idx(ambient);
  std::iota(idx.begin(), idx.end(), 1);
  for (std::size_t j = ambient; j > 1; --j) std::swap(idx[j - 1], idx[rng.below(j)]);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return IndexSet(ambient, idx);
}

}  // namespace

TEST_CASE("index sets") {
  const IndexSet s(5, {1, 3, 4});
  CHECK(s.norm1() == 8);
  CHECK(s.relabel(IndexSet(3, {1, 3})) == IndexSet(5, {1, 4}));
  CHECK(s.complement() == IndexSet(5, {2, 5}));
  CHECK(s.str() == "{1,3,4}");
  CHECK(IndexSet::from_mask(5, s.mask()) == s);
  CHECK_THROWS_AS(IndexSet(3, {2, 1}), InputError);
  CHECK_THROWS_AS(IndexSet(3, {4}), InputError);
  CHECK(subsets_of_size(4, 2).size() == 6);
  CHECK(subsets_of_size(4, 2).front() == IndexSet(4, {1, 2}));
  // Parity identity: (-1)^{||S||+||T||} depends only on the sums.
  const IndexSet t(5, {2, 5});
  CHECK((s.norm1() + t.norm1()) % 2 == 1);
}

TEST_CASE("determinant examples") {
  CHECK(determinant(PolyMatrix::identity(3, 1)) == cst(1, 1));
  const MultiPoly x = var(1, 0), one = cst(1, 1);
  CHECK(determinant(from_rows({{x, one}, {one, x}})) == uni("x^2-1"));
  const RationalMatrix c = companion_of(uni("x^2-1"));
  PolyMatrix xi_c = x * PolyMatrix::identity(2, 1) - PolyMatrix(c, 1);
  CHECK(determinant(xi_c) == uni("x^2-1"));
  CHECK_THROWS_AS(determinant(PolyMatrix(2, 3, 1)), InputError);
}

TEST_CASE("determinant agrees with Leibniz and is multiplicative") {
  Rng rng(21, 0);
  for (std::size_t n = 1; n <= 5; ++n) {
    PolyMatrix a(n, n, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a.set(i, j, Rational(rng.integer_in(-2, 2)) * var(2, 0) + cst(2, Rational(rng.integer_in(-2, 2))) +
                        Rational(rng.integer_in(-1, 1)) * var(2, 1));
      }
    CHECK(determinant(a) == leibniz(a));
    CHECK(determinant(a.transpose()) == determinant(a));
    if (n >= 2) {
      PolyMatrix swapped = a;
      for (std::size_t j = 0; j < n; ++j) {
        swapped.set(0, j, a(1, j));
        swapped.set(1, j, a(0, j));
      }
      CHECK(determinant(swapped) == -determinant(a));
    }
    const RationalMatrix r1 = instances::rational_matrix(rng, n, n), r2 = instances::rational_matrix(rng, n, n);
    CHECK(determinant(r1 * r2) == determinant(r1) * determinant(r2));
    CHECK(determinant(PolyMatrix(r1, 1)) == cst(1, determinant(r1)));
  }
}

TEST_CASE("minor examples") {
  const PolyMatrix a(RationalMatrix{{1, 2}, {3, 4}}, 1);
  CHECK(minor(a, IndexSet(2, {}), IndexSet(2, {})) == cst(1, 1));
  CHECK(minor(a, IndexSet(2, {1, 2}), IndexSet(2, {1, 2})) == cst(1, -2));
  const PolyMatrix id = PolyMatrix::identity(3, 1);
  for (std::size_t k = 0; k <= 3; ++k)
    for (const auto& s : subsets_of_size(3, k))
      for (const auto& v : subsets_of_size(3, k)) CHECK(minor(id, s, v) == cst(1, s == v ? 1 : 0));
  CHECK_THROWS_AS(minor(a, IndexSet(2, {1}), IndexSet(2, {1, 2})), InputError);
}

TEST_CASE("minor of a product") {
  const PolyMatrix a(RationalMatrix{{1, 2}}, 1);
  const PolyMatrix b(RationalMatrix{{3}, {4}}, 1);
  CHECK(minor_of_product(a, b, IndexSet(1, {1}), IndexSet(1, {1})) == cst(1, 11));
  const PolyMatrix c(RationalMatrix{{1, 2}, {3, 5}}, 1), d(RationalMatrix{{2, 1}, {7, 3}}, 1);
  CHECK(minor_of_product(c, d, IndexSet::full(2), IndexSet::full(2)) == determinant(c) * determinant(d));
  const PolyMatrix tall(RationalMatrix{{1}, {2}}, 1), wide(RationalMatrix{{3, 4}}, 1);
  CHECK(minor_of_product(tall, wide, IndexSet::full(2), IndexSet::full(2)).is_zero());
}

TEST_CASE("minor of a sum") {
  const PolyMatrix a(RationalMatrix{{2}}, 1), b(RationalMatrix{{5}}, 1);
  CHECK(minor_of_sum(a, b, IndexSet(1, {1}), IndexSet(1, {1})) == cst(1, 7));
  const PolyMatrix id = PolyMatrix::identity(2, 1);
  CHECK(minor_of_sum(id, id, IndexSet::full(2), IndexSet::full(2)) == cst(1, 4));
  Rng rng(22, 0);
  const PolyMatrix r = instances::integer_poly_matrix(rng, 4, 4, 1);
  const IndexSet s(4, {1, 3}), t(4, {2, 4});
  CHECK(minor_of_sum(r, PolyMatrix(4, 4, 1), s, t) == minor(r, s, t));
}

TEST_CASE("minor expansions on random instances") {
  Rng rng(23, 0);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng.below(4), inner = 1 + rng.below(4), k = rng.below(n + 1);
    const IndexSet s = random_subset(rng, n, k), t = random_subset(rng, n, k);
    const PolyMatrix a = instances::integer_poly_matrix(rng, n, inner, 1);
    const PolyMatrix b = instances::integer_poly_matrix(rng, inner, n, 1);
    CHECK(minor_of_product(a, b, s, t) == minor(a * b, s, t));
    const PolyMatrix e = instances::integer_poly_matrix(rng, n, n, 1), f = instances::integer_poly_matrix(rng, n, n, 1);
    CHECK(minor_of_sum(e, f, s, t) == minor(e + f, s, t));
  }
  // The off-principal case where the relabeled sign would go wrong.
  const PolyMatrix e = instances::integer_poly_matrix(rng, 3, 3, 1), f = instances::integer_poly_matrix(rng, 3, 3, 1);
  const IndexSet s(3, {1, 3});
  CHECK(minor_of_sum(e, f, s, s) == minor(e + f, s, s));
}

TEST_CASE("mixed discriminant examples") {
  const std::vector<PolyMatrix> ids(2, PolyMatrix::identity(2, 1));
  CHECK(mixed_discriminant(ids) == cst(1, 2));
  const MultiPoly x = var(1, 0);
  PolyMatrix one(1, 1, 1);
  one.set(0, 0, x);
  CHECK(mixed_discriminant(std::vector<PolyMatrix>{one}) == x);
  const std::vector<RationalMatrix> e{RationalMatrix{{1, 0}, {0, 0}}, RationalMatrix{{0, 0}, {0, 1}}};
  CHECK(mixed_discriminant(e) == 1);
  CHECK_THROWS_AS(mixed_discriminant(std::vector<RationalMatrix>{RationalMatrix::identity(2)}), InputError);
}

TEST_CASE("mixed discriminant lemma properties on random 3x3") {
  Rng rng(24, 0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<RationalMatrix> xs;
    for (int i = 0; i < 3; ++i) xs.push_back(instances::rational_matrix(rng, 3, 3));
    const RationalMatrix y = instances::rational_matrix(rng, 3, 3);
    const Rational base = mixed_discriminant(xs);
    const Rational a = q(rng.integer_in(-4, 4), 3), b = q(rng.integer_in(-4, 4), 2);

    auto lin = xs;
    lin[0] = a * xs[0] + b * y;
    auto ys = xs;
    ys[0] = y;
    CHECK(mixed_discriminant(lin) == a * base + b * mixed_discriminant(ys));

    auto perm = xs;
    std::swap(perm[0], perm[2]);
    CHECK(mixed_discriminant(perm) == base);
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    CHECK(mixed_discriminant(perm) == base);

    std::vector<RationalMatrix> right, left;
    for (const auto& x : xs) {
      right.push_back(x * y);
      left.push_back(y * x);
    }
    CHECK(mixed_discriminant(right) == determinant(y) * base);
    CHECK(mixed_discriminant(left) == determinant(y) * base);

    RationalMatrix u = instances::integer_matrix(rng, 3, 3), v = instances::integer_matrix(rng, 3, 3);
    std::vector<RationalMatrix> ranks;
    for (std::size_t k = 0; k < 3; ++k) {
      RationalMatrix r(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = u(i, k) * v(j, k);
      ranks.push_back(r);
    }
    CHECK(mixed_discriminant(ranks) == determinant(u) * determinant(v));

    std::vector<PolyMatrix> polys;
    for (const auto& x : xs) polys.push_back(PolyMatrix(x, 1));
    CHECK(mixed_discriminant(polys) == cst(1, base));
  }
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(mixed_discriminant(std::vector<RationalMatrix>(n, RationalMatrix::identity(n))) == Rational(factorial(n)));
  }
}

TEST_CASE("rational matrices") {
  const RationalMatrix a{{2, 1}, {1, 1}};
  CHECK(inverse(a) == RationalMatrix{{1, -1}, {-1, 2}});
  CHECK(a * inverse(a) == RationalMatrix::identity(2));
  CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2}, {2, 4}}), DegenerateInput);
  CHECK(determinant(RationalMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(a.transpose().transpose() == a);
  const PolyMatrix p(a, 2);
  CHECK(p.transpose().transpose() == p);
}
