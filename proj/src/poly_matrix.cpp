#include "detconv/poly_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "detconv/error.hpp"

namespace detconv {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
    : rows_(rows), cols_(cols), arity_(arity), data_(rows * cols, MultiPoly(arity)) {}

PolyMatrix::PolyMatrix(const RationalMatrix& m, std::size_t arity)
    : PolyMatrix(m.rows(), m.cols(), arity) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = MultiPoly(arity, m(i, j));
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t arity) {
  return PolyMatrix(RationalMatrix::identity(n), arity);
}

void PolyMatrix::set(std::size_t i, std::size_t j, MultiPoly v) {
  if (v.arity() != arity_) throw InputError("matrix entry arity mismatch");
  data_[i * cols_ + j] = std::move(v);
}

bool PolyMatrix::is_constant() const {
  return std::all_of(data_.begin(), data_.end(), [](const MultiPoly& p) { return p.is_constant(); });
}

RationalMatrix PolyMatrix::to_rational() const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const MultiPoly& p = (*this)(i, j);
      if (!p.is_constant()) throw InputError("to_rational: entry is not constant");
      m(i, j) = p.constant_term();
    }
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, arity_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  if (rows.ambient() > rows_ || cols.ambient() > cols_) throw InputError("submatrix: index out of range");
  PolyMatrix s(rows.size(), cols.size(), arity_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      s.data_[i * cols.size() + j] = (*this)(rows[i] - 1, cols[j] - 1);
  return s;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix add: shape mismatch");
  if (arity_ != o.arity_) throw InputError("matrix add: arity mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix subtract: shape mismatch");
  if (arity_ != o.arity_) throw InputError("matrix subtract: arity mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix multiply: inner dimension mismatch");
  if (a.arity_ != b.arity_) throw InputError("matrix multiply: arity mismatch");
  PolyMatrix r(a.rows_, b.cols_, a.arity_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const MultiPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r.data_[i * b.cols_ + j] += aik * b(k, j);
      }
    }
  return r;
}

PolyMatrix operator*(const MultiPoly& c, const PolyMatrix& a) {
  if (c.arity() != a.arity_) throw InputError("scalar multiply: arity mismatch");
  PolyMatrix r = a;
  for (auto& v : r.data_) v = c * v;
  return r;
}

MultiPoly determinant(const PolyMatrix& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return MultiPoly(a.arity(), Rational(1));
  if (a.is_constant()) return MultiPoly(a.arity(), determinant(a.to_rational()));
  if (n > 24) throw InputError("determinant: polynomial matrix too large for subset expansion");

  // minors[mask] = det of the first popcount(mask) rows restricted to the
  // columns in mask, expanded along its last row.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<MultiPoly> minors(full + 1, MultiPoly(a.arity()));
  minors[0] = MultiPoly(a.arity(), Rational(1));
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    MultiPoly acc(a.arity());
    std::size_t above = 0;  // columns of mask to the right of j
    for (std::size_t jj = n; jj-- > 0;) {
      if (!(mask >> jj & 1U)) continue;
      const MultiPoly& entry = a(row, jj);
      const MultiPoly& sub = minors[mask & ~(std::size_t{1} << jj)];
      if (!entry.is_zero() && !sub.is_zero()) {
        if (above % 2 == 0) {
          acc += entry * sub;
        } else {
          acc -= entry * sub;
        }
      }
      ++above;
    }
    minors[mask] = std::move(acc);
  }
  return minors[full];
}

MultiPoly minor(const PolyMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw InputError("minor: |S| != |T|");
  if (rows.ambient() > a.rows() || cols.ambient() > a.cols()) throw InputError("minor: index out of range");
  if (rows.empty()) return MultiPoly(a.arity(), Rational(1));
  return determinant(a.submatrix(rows, cols));
}

MultiPoly minor_of_product(const PolyMatrix& a, const PolyMatrix& b, const IndexSet& rows,
                           const IndexSet& cols) {
  if (a.cols() != b.rows()) throw InputError("minor_of_product: inner dimension mismatch");
  if (a.arity() != b.arity()) throw InputError("minor_of_product: arity mismatch");
  if (rows.size() != cols.size()) throw InputError("minor_of_product: |S| != |T|");
  MultiPoly total(a.arity());
  for (const IndexSet& u : subsets_of_size(a.cols(), rows.size())) {
    MultiPoly left = minor(a, rows, u);
    if (left.is_zero()) continue;
    total += left * minor(b, u, cols);
  }
  return total;
}

MultiPoly minor_of_sum(const PolyMatrix& a, const PolyMatrix& b, const IndexSet& rows,
                       const IndexSet& cols) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square()) {
    throw InputError("minor_of_sum: matrices must be square and of equal shape");
  }
  if (rows.size() != cols.size()) throw InputError("minor_of_sum: |S| != |T|");
  const std::size_t k = rows.size();
  MultiPoly total(a.arity());
  for (std::size_t i = 0; i <= k; ++i) {
    const auto choices = subsets_of_size(k, i);
    for (const IndexSet& u : choices) {
      const IndexSet a_rows = rows.relabel(u);
      const IndexSet b_rows = rows.relabel(u.complement());
      for (const IndexSet& v : choices) {
        MultiPoly left = minor(a, a_rows, cols.relabel(v));
        if (left.is_zero()) continue;
        MultiPoly term = left * minor(b, b_rows, cols.relabel(v.complement()));
        if ((u.norm1() + v.norm1()) % 2 == 0) {
          total += term;
        } else {
          total -= term;
        }
      }
    }
  }
  return total;
}

MultiPoly mixed_discriminant(std::span<const PolyMatrix> xs) {
  const std::size_t n = xs.size();
  if (n == 0) throw InputError("mixed_discriminant: need at least one matrix");
  const std::size_t arity = xs[0].arity();
  for (const auto& x : xs) {
    if (x.rows() != n || x.cols() != n) throw InputError("mixed_discriminant: need n matrices of size n x n");
    if (x.arity() != arity) throw InputError("mixed_discriminant: arity mismatch");
  }
  // Row multilinearity: only assignments of distinct matrices to rows
  // contribute to the t_1...t_n coefficient.
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  MultiPoly total(arity);
  do {
    PolyMatrix m(n, n, arity);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, xs[sigma[r]](r, c));
    total += determinant(m);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Rational mixed_discriminant(std::span<const RationalMatrix> xs) {
  std::vector<PolyMatrix> ps;
  ps.reserve(xs.size());
  for (const auto& x : xs) ps.emplace_back(x, 1);
  return mixed_discriminant(std::span<const PolyMatrix>(ps)).constant_term();
}

}  // namespace detconv
