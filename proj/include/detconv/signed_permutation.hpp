#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "detconv/index_set.hpp"
#include "detconv/poly_matrix.hpp"
#include "detconv/rational_matrix.hpp"
#include "detconv/rng.hpp"

namespace detconv {

inline constexpr std::uint64_t kDefaultExhaustiveCap = 1'000'000;

// Q = E_chi P_pi stored by rows: row i has its single nonzero entry sign(i)
// in column column(i).
class SignedPermutation {
 public:
  SignedPermutation(std::vector<std::size_t> columns, std::vector<int> signs);
  static SignedPermutation identity(std::size_t n);

  std::size_t size() const { return columns_.size(); }
  std::size_t column(std::size_t row) const { return columns_[row]; }
  int sign(std::size_t row) const { return signs_[row]; }
  // sign(pi) * prod chi_i
  int determinant() const;

  RationalMatrix matrix() const;
  SignedPermutation transpose() const;
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  // [Q]_{S,T}, always in {-1, 0, 1}.
  int minor(const IndexSet& rows, const IndexSet& cols) const;

  // Q M and M Q without a general multiply.
  RationalMatrix left_apply(const RationalMatrix& m) const;
  RationalMatrix right_apply(const RationalMatrix& m) const;
  PolyMatrix left_apply(const PolyMatrix& m) const;
  PolyMatrix right_apply(const PolyMatrix& m) const;

 private:
  std::vector<std::size_t> columns_;
  std::vector<int> signs_;
};

// 2^n n!, saturating at UINT64_MAX.
std::uint64_t signed_permutation_count(std::size_t n);
// Throws CapExceeded when 2^n n! > cap.
void require_within_cap(std::size_t n, std::uint64_t cap);
// Saturating product of group orders, for multi-group oracles.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

// Element `index` of the deterministic enumeration: permutations in
// lexicographic order (index >> n), sign masks within (bit i set -> row i
// negated).
SignedPermutation signed_permutation_at(std::size_t n, std::uint64_t index);
std::vector<SignedPermutation> enumerate_signed_permutations(std::size_t n,
                                                             std::uint64_t cap = kDefaultExhaustiveCap);
SignedPermutation sample_signed_permutation(std::size_t n, Rng& rng);

}  // namespace detconv
