#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "detconv/index_set.hpp"
#include "detconv/multipoly.hpp"
#include "detconv/signed_permutation.hpp"

namespace detconv {

enum class EnsembleKind { SignedPermutationExhaustive, SignedPermutationSampled, HaarOrthogonalSampled };

std::string to_string(EnsembleKind kind);
// "signed-permutation-exhaustive" | "signed-permutation-sampled" | "haar-orthogonal-sampled"
EnsembleKind parse_ensemble_kind(const std::string& name);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::SignedPermutationExhaustive;
  std::size_t n = 1;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultExhaustiveCap;
};

// Checks size, cap (exhaustive) and sample count (sampled kinds).
void validate(const EnsembleSpec& spec);

// Dense row-major double matrix; only used by the Haar statistics.
struct RealMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  RealMatrix() = default;
  RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Gaussian matrix, Householder QR, then columns rescaled by sign(R_ii) so the
// result is Haar distributed rather than merely orthogonal.
RealMatrix haar_orthogonal_sample(std::size_t n, Rng& rng);
// max |(Q Q^T - I)_ij|
double orthogonality_defect(const RealMatrix& q);
// det of the (rows, cols) submatrix by partially pivoted elimination.
double real_minor(const RealMatrix& m, const IndexSet& rows, const IndexSet& cols);

struct EnsembleAverage {
  MultiPoly mean;
  std::uint64_t sample_count = 0;
  bool exact = false;
};

// Exhaustive kind: exact average over the whole group. Signed-permutation
// sampled kind: empirical mean of `sample_count` seeded draws. The Haar kind
// does not produce signed permutations and is rejected.
EnsembleAverage expectation_over_ensemble(const EnsembleSpec& spec,
                                          const std::function<MultiPoly(const SignedPermutation&)>& f,
                                          unsigned workers = 1);

// Exact E_Q[f(Q)] over the full group of size n.
MultiPoly exhaustive_expectation(std::size_t n, std::uint64_t cap, unsigned workers,
                                 const std::function<MultiPoly(const SignedPermutation&)>& f);

struct MinorOrthEntry {
  IndexSet s, t, u, v;
  Rational expected;
  // Exact average for signed-permutation kinds; unset for Haar.
  std::optional<Rational> observed_exact;
  double observed = 0.0;
  double deviation = 0.0;
  bool pass = false;
};

struct MinorOrthReport {
  EnsembleSpec spec;
  std::size_t k_max = 0;
  std::size_t l_max = 0;
  bool exact = false;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  std::uint64_t samples = 0;
  std::vector<MinorOrthEntry> entries;
  bool pass = false;
};

struct MinorOrthOptions {
  double tolerance = 0.05;  // sampled kinds only
  unsigned workers = 1;
  // Left-multiply every ensemble element by this fixed signed permutation
  // (signed-permutation kinds).
  std::optional<SignedPermutation> left_rotation;
};

// Checks E[[R]_{S,T} [R^T]_{U,V}] = delta(S = V) delta(T = U) / binom(n, k)
// for every |S| = |T| = k <= k_max and |U| = |V| = l <= l_max (k, l >= 0).
MinorOrthReport verify_minor_orthogonality(const EnsembleSpec& spec, std::size_t k_max, std::size_t l_max,
                                           const MinorOrthOptions& options = {});

}  // namespace detconv
