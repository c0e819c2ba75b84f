#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "detconv/kernels.hpp"
#include "detconv/multipoly.hpp"
#include "detconv/rational_matrix.hpp"

namespace detconv {

// M = sum_r a_r b_r^T with k pairs of length-n vectors.
struct RankDecomposition {
  std::size_t n = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<std::vector<Rational>> b;

  std::size_t k() const { return a.size(); }
};

void validate(const RankDecomposition& dec);
RationalMatrix reconstruct(const RankDecomposition& dec);

// Ryser inclusion-exclusion over the 2^n column subsets, exact.
Rational ryser_permanent(const RationalMatrix& m, unsigned workers = 1);
// Gray-code Ryser in double precision on the selected kernel, split over
// `workers` contiguous Gray ranges.
double ryser_permanent_f64(const std::vector<double>& row_major, std::size_t n, unsigned workers = 1,
                           kernels::Isa isa = kernels::active_isa());

// det(sum_r x_r diag(a_r)) = prod_i sum_r a_r[i] x_r
MultiPoly diagonal_pencil_det(const std::vector<std::vector<Rational>>& vectors, std::size_t n);

// n! [p * q](1, ..., 1) for the two diagonal pencils.
Rational lowrank_permanent(const RankDecomposition& dec);

// binom(n + k - 1, k - 1)
BigInt term_count_report(std::size_t n, std::size_t k);

struct BenchRow {
  std::size_t n = 0;
  std::size_t k = 0;
  BigInt terms;
  double time_lowrank = 0;  // seconds
  double time_ryser = 0;
  Rational lowrank_value;
  double ryser_value = 0;
};

// Random integer decomposition (entries in [-2, 2]) timed with both methods.
BenchRow permanent_bench(std::size_t n, std::size_t k, std::uint64_t seed, unsigned workers = 1);

}  // namespace detconv
