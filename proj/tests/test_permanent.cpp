#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "detconv/error.hpp"
#include "detconv/instances.hpp"
#include "detconv/permanent.hpp"
#include "detconv/rng.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

RankDecomposition dec(std::vector<std::vector<Rational>> a, std::vector<std::vector<Rational>> b) {
  RankDecomposition d;
  d.n = a.front().size();
  d.a = std::move(a);
  d.b = std::move(b);
  return d;
}

std::vector<double> to_doubles(const RationalMatrix& m) {
  std::vector<double> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j).to_double());
  return out;
}

}  // namespace

TEST_CASE("Ryser examples") {
  CHECK(ryser_permanent(RationalMatrix::identity(2)) == 1);
  CHECK(ryser_permanent(RationalMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 6);
  CHECK(ryser_permanent(RationalMatrix{{1, 2}, {3, 4}}) == 10);
  CHECK(ryser_permanent(RationalMatrix{{q(1, 2), 1}, {1, q(1, 3)}}) == q(7, 6));
  CHECK(ryser_permanent(RationalMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(ryser_permanent(RationalMatrix(2, 3)), InputError);
}

TEST_CASE("Ryser agrees with the permutation sum and across workers") {
  Rng rng(81, 0);
  const RationalMatrix m = instances::rational_matrix(rng, 4, 4);
  Rational direct(0);
  std::vector<std::size_t> perm{0, 1, 2, 3};
  do {
    Rational t(1);
    for (std::size_t i = 0; i < 4; ++i) t *= m(i, perm[i]);
    direct += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(ryser_permanent(m) == direct);
  CHECK(ryser_permanent(m, 3) == direct);
}

TEST_CASE("low-rank permanent examples") {
  CHECK(lowrank_permanent(dec({{1, 1}}, {{1, 1}})) == 2);
  CHECK(lowrank_permanent(dec({{1, 2}}, {{3, 4}})) == 48);
  CHECK(ryser_permanent(RationalMatrix{{3, 4}, {6, 8}}) == 48);
  // Rows of [[1,2],[3,4]]: e_1 (1,2)^T + e_2 (3,4)^T.
  const RankDecomposition rows = dec({{1, 0}, {0, 1}}, {{1, 2}, {3, 4}});
  CHECK(reconstruct(rows) == RationalMatrix{{1, 2}, {3, 4}});
  CHECK(lowrank_permanent(rows) == 10);
  CHECK(diagonal_pencil_det(rows.a, 2) == var(2, 0) * var(2, 1));
  CHECK_THROWS_AS(lowrank_permanent(dec({{1, 2}}, {{3}})), InputError);
  RankDecomposition empty;
  empty.n = 2;
  CHECK_THROWS_AS(lowrank_permanent(empty), InputError);
}

TEST_CASE("low-rank permanent matches Ryser on random decompositions") {
  Rng rng(82, 0);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= 3; ++k) {
      const RankDecomposition d = instances::rank_decomposition(rng, n, k);
      CHECK(lowrank_permanent(d) == ryser_permanent(reconstruct(d)));
    }
}

TEST_CASE("term count bound") {
  CHECK(term_count_report(30, 2) == 31);
  CHECK(term_count_report(2, 2) == 3);
  CHECK(term_count_report(5, 1) == 1);
  Rng rng(83, 0);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k <= 3; ++k) {
      const RankDecomposition d = instances::rank_decomposition(rng, n, k);
      CHECK(BigInt(diagonal_pencil_det(d.a, n).term_count()) <= term_count_report(n, k));
      CHECK(BigInt(diagonal_pencil_det(d.b, n).term_count()) <= term_count_report(n, k));
    }
}

TEST_CASE("double-precision Ryser tracks the exact value") {
  Rng rng(84, 0);
  for (std::size_t n = 1; n <= 10; ++n) {
    const RationalMatrix m = instances::integer_matrix(rng, n, n, -2, 2);
    const double exact = ryser_permanent(m).to_double();
    for (unsigned w : {1u, 3u}) {
      for (kernels::Isa isa : {kernels::Isa::Scalar, kernels::Isa::Avx2}) {
        const double approx = ryser_permanent_f64(to_doubles(m), n, w, isa);
        CHECK(std::abs(approx - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
      }
    }
  }
}

TEST_CASE("bench row at a small size") {
  const BenchRow row = permanent_bench(8, 2, 5);
  CHECK(row.terms == 9);
  CHECK(std::abs(row.lowrank_value.to_double() - row.ryser_value) <= 1e-9 * std::max(1.0, std::abs(row.ryser_value)));
  CHECK(row.time_lowrank >= 0);
  CHECK(row.time_ryser >= 0);
}
