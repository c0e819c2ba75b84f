#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "detconv/index_set.hpp"
#include "detconv/multipoly.hpp"
#include "detconv/rational_matrix.hpp"

namespace detconv {

// Rectangular matrix with MultiPoly entries of a shared arity.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t arity);
  // Rational matrix promoted to constant polynomials.
  PolyMatrix(const RationalMatrix& m, std::size_t arity);

  static PolyMatrix identity(std::size_t n, std::size_t arity);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t arity() const { return arity_; }
  bool is_square() const { return rows_ == cols_; }

  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, MultiPoly v);

  bool is_constant() const;
  // Only valid when is_constant().
  RationalMatrix to_rational() const;

  PolyMatrix transpose() const;
  PolyMatrix submatrix(const IndexSet& rows, const IndexSet& cols) const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const MultiPoly& c, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t arity_;
  std::vector<MultiPoly> data_;
};

// Subset-memoized Laplace expansion (division free); constant matrices go
// through fraction elimination instead.
MultiPoly determinant(const PolyMatrix& a);

// [A]_{S,T}; [A]_{empty,empty} = 1.
MultiPoly minor(const PolyMatrix& a, const IndexSet& rows, const IndexSet& cols);

// Cauchy-Binet: sum over U in binom([inner], k) of [A]_{S,U} [B]_{U,T}.
MultiPoly minor_of_product(const PolyMatrix& a, const PolyMatrix& b, const IndexSet& rows,
                           const IndexSet& cols);

// Sum over i and U, V in binom([k], i) of
//   (-1)^{||U||_1 + ||V||_1} [A]_{U(S),V(T)} [B]_{comp U(S), comp V(T)}.
MultiPoly minor_of_sum(const PolyMatrix& a, const PolyMatrix& b, const IndexSet& rows,
                       const IndexSet& cols);

// Coefficient of t_1 ... t_n in det(sum_i t_i X_i), without a 1/n! factor,
// so D(I, ..., I) = n!.
MultiPoly mixed_discriminant(std::span<const PolyMatrix> xs);
Rational mixed_discriminant(std::span<const RationalMatrix> xs);

}  // namespace detconv
