#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detconv/error.hpp"
#include "detconv/gsvd.hpp"
#include "detconv/instances.hpp"
#include "detconv/rng.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

MultiPoly x() { return var(3, 0); }
MultiPoly y() { return var(3, 1); }
MultiPoly z() { return var(3, 2); }

GsvcpInstance scalar_instance(long a, long b) { return make_gsvcp_instance(RationalMatrix{{a}}, RationalMatrix{{b}}); }

}  // namespace

TEST_CASE("gsvcp examples") {
  CHECK(gsvcp(scalar_instance(1, 2)) == x() + y() + Rational(4) * z());
  CHECK(gsvcp(make_gsvcp_instance(RationalMatrix::identity(2), RationalMatrix(2, 2))) == pow(x() + y(), 2));
  Rng rng(71, 0);
  for (int i = 0; i < 5; ++i) {
    const GsvcpInstance inst = instances::gsvcp(rng, 2, 2, 2);
    const PolyMatrix pm = x() * PolyMatrix::identity(2, 3) +
                          y() * PolyMatrix(inst.a1.transpose() * inst.a1, 3) +
                          z() * PolyMatrix(inst.a2.transpose() * inst.a2, 3);
    const MultiPoly cofactor = pm(0, 0) * pm(1, 1) - pm(0, 1) * pm(1, 0);
    CHECK(gsvcp(inst) == cofactor);
  }
  CHECK_THROWS_AS(make_gsvcp_instance(RationalMatrix(1, 2), RationalMatrix(1, 3)), InputError);
}

TEST_CASE("coefficient extraction and reconstruction") {
  const GsvcpCoeffs c = extract_gsvcp_coeffs(gsvcp(scalar_instance(3, 5)), 1, 1, 1);
  CHECK(c.grid[0][0] == 1);
  CHECK(c.grid[1][0] == 9);
  CHECK(c.grid[0][1] == 25);
  CHECK(c.grid[1][1] == 0);

  const GsvcpCoeffs xm = extract_gsvcp_coeffs(x() * x(), 2, 1, 1);
  CHECK(xm.grid[0][0] == 2);
  CHECK(reconstruct_gsvcp(xm) == x() * x());

  Rng rng(72, 0);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t s = 1; s <= 3; ++s)
      for (std::size_t t = 1; t <= 2; ++t) {
        const GsvcpInstance inst = instances::gsvcp(rng, m, s, t);
        const MultiPoly p = gsvcp(inst);
        const GsvcpCoeffs g = extract_gsvcp_coeffs(p, m, s, t);
        CHECK(reconstruct_gsvcp(g) == p);
        CHECK(extract_gsvcp_coeffs(reconstruct_gsvcp(g), m, s, t) == g);
        for (std::size_t j = 0; j <= s; ++j)
          for (std::size_t k = 0; k <= t; ++k)
            if (!g.admissible(j, k)) CHECK(g.grid[j][k] == 0);
      }
  CHECK_THROWS_AS(extract_gsvcp_coeffs(pow(y(), 2), 2, 1, 1), InputError);
  CHECK_THROWS_AS(extract_gsvcp_coeffs(x() + cst(3, 1), 1, 1, 1), InputError);
}

TEST_CASE("convolution formula, scalar case") {
  const long a = 2, b = -1, c = 3, d = 4;
  const GsvcpInstance m = scalar_instance(a, b), n = scalar_instance(c, d);
  const GsvcpCoeffs r = gsvd_convolve(extract_gsvcp_coeffs(gsvcp(m), 1, 1, 1), extract_gsvcp_coeffs(gsvcp(n), 1, 1, 1));
  CHECK(r.grid[0][0] == 1);
  CHECK(r.grid[1][0] == a * a + c * c);
  CHECK(r.grid[0][1] == b * b + d * d);
  CHECK(r.grid[1][1] == 0);
  CHECK(gsvd_expectation_oracle(m, n) == r);
}

TEST_CASE("adding zero leaves the coefficients unchanged") {
  Rng rng(73, 0);
  for (std::size_t m = 1; m <= 2; ++m) {
    const GsvcpInstance inst = instances::gsvcp(rng, m, 2, 2);
    const GsvcpInstance zero = make_gsvcp_instance(RationalMatrix(2, m), RationalMatrix(2, m));
    const GsvcpCoeffs p = extract_gsvcp_coeffs(gsvcp(inst), m, 2, 2);
    const GsvcpCoeffs q = extract_gsvcp_coeffs(gsvcp(zero), m, 2, 2);
    CHECK(gsvd_convolve(p, q) == p);
    CHECK(gsvd_expectation_oracle(inst, zero) == p);
  }
}

TEST_CASE("convolution is symmetric") {
  Rng rng(74, 0);
  const GsvcpCoeffs p = extract_gsvcp_coeffs(gsvcp(instances::gsvcp(rng, 2, 2, 1)), 2, 2, 1);
  const GsvcpCoeffs q = extract_gsvcp_coeffs(gsvcp(instances::gsvcp(rng, 2, 2, 1)), 2, 2, 1);
  CHECK(gsvd_convolve(p, q) == gsvd_convolve(q, p));
  CHECK_THROWS_AS(gsvd_convolve(p, GsvcpCoeffs::zeros(2, 1, 1)), InputError);
}

TEST_CASE("expectation over (R1, R2, Q) matches the formula for m, s, t <= 2") {
  Rng rng(75, 0);
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t s = 1; s <= 2; ++s)
      for (std::size_t t = 1; t <= 2; ++t) {
        const GsvcpInstance a = instances::gsvcp(rng, m, s, t), b = instances::gsvcp(rng, m, s, t);
        const GsvcpCoeffs p = extract_gsvcp_coeffs(gsvcp(a), m, s, t);
        const GsvcpCoeffs q = extract_gsvcp_coeffs(gsvcp(b), m, s, t);
        CHECK(gsvd_expectation_oracle(a, b) == gsvd_convolve(p, q));
      }
  const GsvcpInstance big = make_gsvcp_instance(RationalMatrix(3, 3), RationalMatrix(3, 3));
  CHECK_THROWS_AS(gsvd_expectation_oracle(big, big, {1000, 1}), CapExceeded);
}

TEST_CASE("operator form") {
  const long a = 2, b = -1, c = 3, d = 4;
  const GsvcpCoeffs p = extract_gsvcp_coeffs(gsvcp(scalar_instance(a, b)), 1, 1, 1);
  const GsvcpCoeffs q = extract_gsvcp_coeffs(gsvcp(scalar_instance(c, d)), 1, 1, 1);
  const MultiPoly u = var(2, 0), v = var(2, 1);
  CHECK(gsvcp_operator_form(p) == cst(2, 1) + Rational(a * a) * u + Rational(b * b) * v);
  CHECK(apply_gsvcp_operator(gsvcp_operator_form(p), 1, 1, 1) == reciprocal_form(p));
  const PolyIdentityCheck chk = gsvd_operator_check(p, q);
  CHECK(chk.pass);
  CHECK(chk.lhs == x() * y() * z() + Rational(a * a + c * c) * z() + Rational(b * b + d * d) * y());

  const GsvcpCoeffs xm = extract_gsvcp_coeffs(pow(x(), 2), 2, 2, 1);
  CHECK(gsvcp_operator_form(xm) == cst(2, 1));

  Rng rng(76, 0);
  for (std::size_t m = 1; m <= 3; ++m) {
    const GsvcpCoeffs g = extract_gsvcp_coeffs(gsvcp(instances::gsvcp(rng, m, 2, 2)), m, 2, 2);
    const GsvcpCoeffs h = extract_gsvcp_coeffs(gsvcp(instances::gsvcp(rng, m, 2, 2)), m, 2, 2);
    CHECK(apply_gsvcp_operator(gsvcp_operator_form(g), m, 2, 2) == reciprocal_form(g));
    CHECK(gsvd_operator_check(g, h).pass);
  }
}

TEST_CASE("reciprocal form") {
  const GsvcpCoeffs p = extract_gsvcp_coeffs(gsvcp(scalar_instance(3, 5)), 1, 1, 1);
  CHECK(reciprocal_form(p) == x() * y() * z() + Rational(9) * z() + Rational(25) * y());
}

TEST_CASE("characteristic polynomial identity") {
  const auto scalar = gsvd_charpoly_identity_check(RationalMatrix{{2}}, RationalMatrix{{3}});
  CHECK(scalar.pass);
  CHECK(scalar.lhs == uni("x - 2/5"));
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto id = gsvd_charpoly_identity_check(RationalMatrix::identity(m), RationalMatrix(m, m));
    CHECK(id.pass);
    CHECK(id.lhs == pow(uni("x-1"), static_cast<unsigned>(m)));
  }
  Rng rng(77, 0);
  int checked = 0;
  while (checked < 5) {
    const RationalMatrix a1 = instances::integer_matrix(rng, 3, 3), a2 = instances::integer_matrix(rng, 3, 3);
    const RationalMatrix w1 = a1.transpose() * a1, w2 = a2.transpose() * a2;
    if (determinant(w1 + w2).is_zero()) continue;
    CHECK(gsvd_charpoly_identity_check(w1, w2).pass);
    ++checked;
  }
  CHECK_THROWS_AS(gsvd_charpoly_identity_check(RationalMatrix(2, 2), RationalMatrix(2, 2)), DegenerateInput);
}

TEST_CASE("block determinant identity") {
  const long a = 2, b = 3;
  const auto chk = block_determinant_identity_check(scalar_instance(a, b));
  CHECK(chk.pass);
  CHECK(chk.lhs == y() * z() * (x() * y() * z() - Rational(a * a) * z() - Rational(b * b) * y()));
  const auto zero = block_determinant_identity_check(make_gsvcp_instance(RationalMatrix(2, 2), RationalMatrix(1, 2)));
  CHECK(zero.pass);
  Rng rng(78, 0);
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t t = 1; t <= 3; ++t) CHECK(block_determinant_identity_check(instances::gsvcp(rng, 2, s, t)).pass);
}
