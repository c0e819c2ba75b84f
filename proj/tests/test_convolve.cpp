#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detconv/convolve.hpp"
#include "detconv/ensembles.hpp"
#include "detconv/error.hpp"
#include "detconv/instances.hpp"
#include "detconv/rng.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

MultiPoly x1x2() { return var(2, 0) * var(2, 1); }

MultiPoly from_roots(const std::vector<Rational>& roots) {
  MultiPoly p(1, Rational(1));
  for (const auto& r : roots) p *= var(1, 0) - cst(1, r);
  return p;
}

PolyMatrix scalar(const Rational& v, std::size_t arity) { return PolyMatrix(RationalMatrix{{v}}, arity); }

}  // namespace

TEST_CASE("star convolution examples") {
  const MultiPoly x = var(2, 0), y = var(2, 1);
  CHECK(star_convolve(x1x2(), pow(x + y, 2), 2) == x1x2());
  CHECK(star_convolve(x * x, x1x2(), 2).is_zero());
  const MultiPoly q = Rational(2) * x * x + Rational(10) * x * y + Rational(12) * y * y;
  CHECK(star_convolve(x1x2(), q, 2) == Rational(5) * x1x2());
  CHECK_THROWS_AS(star_convolve(x + cst(2, 1), x, 1), InputError);
  CHECK_THROWS_AS(star_convolve(x, var(3, 0), 1), InputError);
  CHECK_THROWS_AS(star_convolve(x * x, x, 2), InputError);
}

TEST_CASE("star convolution is bilinear, symmetric, with a two-sided identity") {
  Rng rng(51, 0);
  const MultiPoly one = pow(var(3, 0) + var(3, 1) + var(3, 2), 3);
  for (int i = 0; i < 10; ++i) {
    const auto a = instances::global(rng, 3, 3);
    const MultiPoly p = det_pencil(a.a), q = det_pencil(a.b);
    const MultiPoly r = det_pencil(instances::global(rng, 3, 3).a);
    CHECK(star_convolve(p, q, 3) == star_convolve(q, p, 3));
    CHECK(star_convolve(p, one, 3) == p);
    CHECK(star_convolve(one, p, 3) == p);
    CHECK(star_convolve(p + Rational(2) * r, q, 3) == star_convolve(p, q, 3) + Rational(2) * star_convolve(r, q, 3));
  }
}

TEST_CASE("L operator examples and monomial rule") {
  const MultiPoly x = var(3, 0), y = var(3, 1), w = var(3, 2);
  CHECK(l_operator(x * y, 2, 0, 1) == q(1, 2) * x * y);
  CHECK(l_operator(x * y, 1, 0, 1).is_zero());
  CHECK(l_operator(cst(3, 1), 5, 0, 1) == cst(3, 1));
  CHECK(l_operator(x * x * w, 2, 0, 1) == x * x * w);
  for (unsigned m = 0; m <= 5; ++m)
    for (unsigned i = 0; i <= m + 1; ++i)
      for (unsigned j = 0; j <= m + 1; ++j) {
        const Rational c = l_coefficient(m, i, j);
        if (i + j > m) {
          CHECK(c == 0);
        } else if (i == 0 || j == 0) {
          CHECK(c == 1);
        } else {
          CHECK(c < Rational(1));
          CHECK(c > Rational(0));
        }
      }
  CHECK_THROWS_AS(l_operator(x, 2, 0, 0), InputError);
}

TEST_CASE("local theorem examples") {
  LocalInstance inst;
  inst.d = inst.m = 1;
  inst.u = scalar(2, 2);
  inst.a1 = scalar(3, 2);
  inst.a2 = scalar(5, 2);
  inst.b1 = scalar(-1, 2);
  inst.b2 = scalar(4, 2);
  const MultiPoly want = cst(2, 2) + Rational(-3) * var(2, 0) + Rational(20) * var(2, 1);
  CHECK(local_convolution(inst) == want);
  CHECK(local_expectation_oracle(inst) == want);

  LocalInstance id;
  id.d = id.m = 2;
  id.u = PolyMatrix(2, 2, 2);
  id.a1 = id.a2 = id.b1 = id.b2 = PolyMatrix::identity(2, 2);
  const MultiPoly x = var(2, 0), y = var(2, 1);
  CHECK(local_convolution(id) == x * x + x * y + y * y);
  CHECK(local_expectation_oracle(id) == x * x + x * y + y * y);

  Rng rng(52, 0);
  LocalInstance z = instances::local(rng, 2, 3);
  z.a2 = PolyMatrix(2, 3, 2);
  const MultiPoly plain = determinant(z.u + x * (z.a1 * z.b1));
  CHECK(local_convolution(z) == plain);
  CHECK(local_expectation_oracle(z) == plain);
}

TEST_CASE("local theorem on random instances, d, m <= 3") {
  Rng rng(53, 0);
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t m = 1; m <= 3; ++m)
      for (int i = 0; i < 3; ++i) {
        const LocalInstance inst = instances::local(rng, d, m);
        CHECK(local_expectation_oracle(inst) == local_convolution(inst));
      }
}

TEST_CASE("local theorem with an extra variable in the blocks") {
  Rng rng(54, 0);
  // Arity 3: x, y and a free parameter w that may appear in U, A and B.
  LocalInstance inst;
  inst.d = 2;
  inst.m = 2;
  const MultiPoly w = var(3, 2);
  inst.u = PolyMatrix(instances::integer_matrix(rng, 2, 2), 3) + w * PolyMatrix::identity(2, 3);
  inst.a1 = PolyMatrix(instances::integer_matrix(rng, 2, 2), 3);
  inst.a2 = w * PolyMatrix(instances::integer_matrix(rng, 2, 2), 3);
  inst.b1 = PolyMatrix(instances::integer_matrix(rng, 2, 2), 3);
  inst.b2 = PolyMatrix(instances::integer_matrix(rng, 2, 2), 3) + w * PolyMatrix::identity(2, 3);
  CHECK(local_expectation_oracle(inst) == local_convolution(inst));
  LocalInstance bad = inst;
  bad.u = var(3, 0) * PolyMatrix::identity(2, 3);
  CHECK_THROWS_AS(local_convolution(bad), InputError);
}

TEST_CASE("lemma: product of minors averages to a pairing") {
  Rng rng(55, 0);
  const std::size_t d = 3, m = 3;
  const RationalMatrix a1 = instances::integer_matrix(rng, d, m), b1 = instances::integer_matrix(rng, m, d);
  const RationalMatrix a2 = instances::integer_matrix(rng, d, m), b2 = instances::integer_matrix(rng, m, d);
  const PolyMatrix pa1(a1, 1), pb1(b1, 1), pa2(a2, 1), pb2(b2, 1);
  const auto group = enumerate_signed_permutations(m);
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t l = 0; l <= 2; ++l) {
      const IndexSet s = subsets_of_size(d, k).back(), t = subsets_of_size(d, k).front();
      const IndexSet u = subsets_of_size(d, l).front(), v = subsets_of_size(d, l).back();
      Rational sum(0);
      for (const auto& r : group) {
        const PolyMatrix left(a1 * r.left_apply(b1), 1);
        const PolyMatrix right(a2 * r.transpose().left_apply(b2), 1);
        sum += (minor(left, s, t) * minor(right, u, v)).constant_term();
      }
      sum /= Rational(static_cast<long>(group.size()));
      Rational want(0);
      if (k == l) {
        want = (minor(pa1 * pb2, s, v) * minor(pa2 * pb1, u, t)).constant_term() /
               Rational(binomial(static_cast<long>(m), static_cast<long>(k)));
      }
      CHECK(sum == want);
    }
}

TEST_CASE("corollary: mixed-pairing minors via the derivative sum at zero") {
  // E_R [x A1 R B2 + y A2 R^T B1]_{S,T} =
  //   sum_i (-1)^i (m-i)!/(m! i!) d_w^i d_z^i [w x A1 B1 + y z A2 B2]_{S,T} at w = z = 0
  Rng rng(64, 0);
  const std::size_t d = 3, m = 2;
  const MultiPoly x = var(4, 0), y = var(4, 1);
  const PolyMatrix a1(instances::integer_matrix(rng, d, m), 4), a2(instances::integer_matrix(rng, d, m), 4);
  const PolyMatrix b1(instances::integer_matrix(rng, m, d), 4), b2(instances::integer_matrix(rng, m, d), 4);
  const std::vector<MultiPoly> at_zero{x, y, cst(4, 0), cst(4, 0)};
  for (std::size_t k = 1; k <= d; ++k)
    for (const auto& s : subsets_of_size(d, k))
      for (const auto& t : subsets_of_size(d, k)) {
        const MultiPoly lhs = exhaustive_expectation(m, kDefaultExhaustiveCap, 1, [&](const SignedPermutation& r) {
          return minor(x * (a1 * r.left_apply(b2)) + y * (a2 * r.transpose().left_apply(b1)), s, t);
        });
        const MultiPoly base = minor((var(4, 2) * x) * (a1 * b1) + (y * var(4, 3)) * (a2 * b2), s, t);
        MultiPoly rhs(4);
        for (unsigned i = 0; i <= k && i <= m; ++i) {
          Rational c(factorial(static_cast<unsigned>(m - i)), BigInt(factorial(static_cast<unsigned>(m)) * factorial(i)));
          if (i % 2 == 1) c = -c;
          rhs += c * partial_derivative(partial_derivative(base, 2, i), 3, i).substitute(at_zero);
        }
        CHECK(lhs == rhs);
      }
}

TEST_CASE("corollary: local minors via the derivative sum") {
  // E_R [(x A1 + y A2 R)(B1 + R^T B2)]_{S,T} =
  //   sum_i (-1)^i (m-i)!/(m! i!) d_w^i d_z^i [w x A1 B1 + y z A2 B2]_{S,T} at w = z = 1
  Rng rng(56, 0);
  const std::size_t d = 3, m = 2;
  const MultiPoly x = var(4, 0), y = var(4, 1), w = var(4, 2), z = var(4, 3);
  const PolyMatrix a1(instances::integer_matrix(rng, d, m), 4), a2(instances::integer_matrix(rng, d, m), 4);
  const PolyMatrix b1(instances::integer_matrix(rng, m, d), 4), b2(instances::integer_matrix(rng, m, d), 4);
  const std::vector<MultiPoly> at_one{x, y, cst(4, 1), cst(4, 1)};
  for (std::size_t k = 1; k <= d; ++k) {
    const IndexSet s = subsets_of_size(d, k).front(), t = subsets_of_size(d, k).back();
    const MultiPoly lhs = exhaustive_expectation(m, kDefaultExhaustiveCap, 1, [&](const SignedPermutation& r) {
      return minor((x * a1 + y * r.right_apply(a2)) * (b1 + r.transpose().left_apply(b2)), s, t);
    });
    const MultiPoly base = minor((w * x) * (a1 * b1) + (y * z) * (a2 * b2), s, t);
    MultiPoly rhs(4);
    for (unsigned i = 0; i <= k; ++i) {
      if (i > m) continue;
      Rational c(factorial(static_cast<unsigned>(m - i)), BigInt(factorial(static_cast<unsigned>(m)) * factorial(i)));
      if (i % 2 == 1) c = -c;
      rhs += c * partial_derivative(partial_derivative(base, 2, i), 3, i).substitute(at_one);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("global theorem examples") {
  GlobalInstance diag;
  diag.a = {RationalMatrix::diagonal({1, 0}), RationalMatrix::diagonal({0, 1})};
  diag.b = {RationalMatrix::diagonal({1, 2}), RationalMatrix::diagonal({3, 4})};
  CHECK(global_convolution(diag) == Rational(5) * x1x2());
  CHECK(global_expectation_oracle(diag) == Rational(5) * x1x2());

  Rng rng(57, 0);
  GlobalInstance ident = instances::global(rng, 3, 3);
  ident.b.assign(3, RationalMatrix::identity(3));
  CHECK(global_convolution(ident) == det_pencil(ident.a));
  CHECK(global_expectation_oracle(ident) == det_pencil(ident.a));

  GlobalInstance single;
  single.a = {RationalMatrix{{2}}};
  single.b = {RationalMatrix{{5}}};
  CHECK(global_convolution(single) == Rational(10) * var(1, 0));
  CHECK(global_expectation_oracle(single) == Rational(10) * var(1, 0));
}

TEST_CASE("global theorem on random instances, n, d <= 3") {
  Rng rng(58, 0);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t d = 1; d <= 3; ++d)
      for (int i = 0; i < 3; ++i) {
        const GlobalInstance inst = instances::global(rng, n, d);
        CHECK(global_expectation_oracle(inst) == global_convolution(inst));
      }
}

TEST_CASE("mixed discriminant form of the global theorem") {
  const std::vector<RationalMatrix> one_a{RationalMatrix{{3}}}, one_b{RationalMatrix{{-2}}};
  const auto c1 = mixed_discriminant_identity_check(one_a, one_b);
  CHECK(c1.pass);
  CHECK(c1.lhs == -6);
  const std::vector<RationalMatrix> ids(2, RationalMatrix::identity(2));
  const auto c2 = mixed_discriminant_identity_check(ids, ids);
  CHECK(c2.lhs == 2);
  CHECK(c2.rhs == 2);
  CHECK(*c2.ratio == 1);
  Rng rng(59, 0);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int i = 0; i < 3; ++i) {
      std::vector<RationalMatrix> a, b;
      for (std::size_t k = 0; k < n; ++k) {
        a.push_back(instances::rational_matrix(rng, n, n));
        b.push_back(instances::rational_matrix(rng, n, n));
      }
      CHECK(mixed_discriminant_identity_check(a, b).pass);
      CHECK(mixed_discriminant_identity_check(a, b, {kDefaultExhaustiveCap, 3}).lhs ==
            mixed_discriminant_identity_check(a, b).lhs);
    }
}

TEST_CASE("binomial identity for m <= 8") {
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned a = 0; a <= m; ++a)
      for (unsigned b = 0; a + b <= m; ++b) {
        const auto [lhs, rhs] = local_binomial_identity(m, a, b);
        CHECK(lhs == rhs);
      }
  CHECK_THROWS_AS(local_binomial_identity(2, 2, 1), InputError);
}

TEST_CASE("additive convolution") {
  const MultiPoly p = uni("x^2-1");
  CHECK(boxplus(p, p) == uni("x^2-2"));
  const RationalMatrix d = RationalMatrix::diagonal({1, -1});
  CHECK(boxplus_oracle(d, d) == uni("x^2-2"));
  CHECK(boxplus(p, uni("x^2")) == p);
  Rng rng(60, 0);
  for (int i = 0; i < 5; ++i) {
    const auto ra = instances::integer_roots(rng, 3), rb = instances::integer_roots(rng, 3);
    const MultiPoly a = from_roots(ra), b = from_roots(rb);
    CHECK(boxplus(a, b) == boxplus(b, a));
    CHECK(boxplus(a, b) == boxplus(a, b, RationalMatrix::diagonal(ra), RationalMatrix::diagonal(rb)));
    CHECK(boxplus(a, b) == boxplus_oracle(RationalMatrix::diagonal(ra), RationalMatrix::diagonal(rb)));
    CHECK(boxplus_oracle(companion_of(a), companion_of(b)) == boxplus(a, b));
  }
  CHECK_THROWS_AS(boxplus(p, uni("x^3")), InputError);
  CHECK_THROWS_AS(boxplus(p, uni("2x^2")), InputError);
  CHECK_THROWS_AS(boxplus(p, p, RationalMatrix::identity(2)), InputError);
}

TEST_CASE("multiplicative convolution") {
  const MultiPoly p = uni("x^2-1");
  CHECK(boxtimes(p, p) == uni("x^2+1"));
  const RationalMatrix d = RationalMatrix::diagonal({1, -1});
  CHECK(boxtimes_oracle(d, d) == uni("x^2+1"));
  CHECK(boxtimes(p, uni("x^2-2x+1")) == p);
  CHECK(boxtimes(p, uni("x^2")) == uni("x^2"));
  Rng rng(61, 0);
  for (int i = 0; i < 5; ++i) {
    const auto ra = instances::integer_roots(rng, 3), rb = instances::integer_roots(rng, 3);
    const MultiPoly a = from_roots(ra), b = from_roots(rb);
    CHECK(boxtimes(a, b) == boxtimes(b, a));
    CHECK(boxtimes(a, b) == boxtimes_oracle(RationalMatrix::diagonal(ra), RationalMatrix::diagonal(rb)));
    CHECK(boxtimes(a, b) == boxtimes(a, b, RationalMatrix::diagonal(ra), RationalMatrix::diagonal(rb)));
  }
}

TEST_CASE("rectangular additive convolution") {
  Rng rng(62, 0);
  for (int i = 0; i < 5; ++i) {
    const Rational a(rng.integer_in(-3, 3)), b(rng.integer_in(-3, 3));
    const MultiPoly want = var(1, 0) - cst(1, a * a + b * b);
    CHECK(rect_boxplus(RationalMatrix{{a}}, RationalMatrix{{b}}) == want);
    CHECK(rect_boxplus_oracle(RationalMatrix{{a}}, RationalMatrix{{b}}) == want);
  }
  const RationalMatrix a{{1, 0}}, b{{0, 1}};
  CHECK(rect_boxplus(a, b) == rect_boxplus_oracle(a, b));
  const RationalMatrix m = instances::integer_matrix(rng, 2, 3);
  CHECK(rect_boxplus(m, RationalMatrix(2, 3)) == characteristic_polynomial(m * m.transpose()));
  for (int i = 0; i < 3; ++i) {
    const RationalMatrix p = instances::integer_matrix(rng, 2, 3), r = instances::integer_matrix(rng, 2, 3);
    CHECK(rect_boxplus(p, r) == rect_boxplus_oracle(p, r));
  }
  CHECK_THROWS_AS(rect_boxplus(RationalMatrix(2, 1), RationalMatrix(2, 1)), InputError);
  CHECK_THROWS_AS(rect_boxplus_oracle(instances::integer_matrix(rng, 3, 4), instances::integer_matrix(rng, 3, 4),
                                      {1000, 1}),
                  CapExceeded);
}

TEST_CASE("non-Hermitian multiplicative convolution") {
  const Rational h1 = 2, k1 = -1, h2 = 3, k2 = 5;
  const MultiPoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
  const MultiPoly want = x + (h1 * h2 - k1 * k2) * y + (h1 * k2 + k1 * h2) * z;
  const RationalMatrix H1{{h1}}, K1{{k1}}, H2{{h2}}, K2{{k2}};
  CHECK(nonhermitian_mult(H1, K1, H2, K2) == want);
  CHECK(nonhermitian_oracle(H1, K1, H2, K2) == want);

  Rng rng(63, 0);
  const RationalMatrix a = instances::integer_matrix(rng, 2, 2), b = instances::integer_matrix(rng, 2, 2);
  const std::vector<RationalMatrix> pencil{RationalMatrix::identity(2), a, b};
  CHECK(nonhermitian_mult(a, b, RationalMatrix::identity(2), RationalMatrix(2, 2)) == det_pencil(pencil));
  for (int i = 0; i < 5; ++i) {
    const RationalMatrix p1 = instances::integer_matrix(rng, 2, 2), q1 = instances::integer_matrix(rng, 2, 2);
    const RationalMatrix p2 = instances::integer_matrix(rng, 2, 2), q2 = instances::integer_matrix(rng, 2, 2);
    CHECK(nonhermitian_mult(p1, q1, p2, q2) == nonhermitian_oracle(p1, q1, p2, q2));
  }
}
