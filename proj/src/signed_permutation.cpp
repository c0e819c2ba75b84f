#include "detconv/signed_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "detconv/error.hpp"

namespace detconv {

namespace {

int inversion_parity(const std::vector<std::size_t>& v) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j] ? 1 : 0;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<std::size_t> columns, std::vector<int> signs)
    : columns_(std::move(columns)), signs_(std::move(signs)) {
  const std::size_t n = columns_.size();
  if (signs_.size() != n) throw InputError("signed permutation: sign vector has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (columns_[i] >= n || seen[columns_[i]]) throw InputError("signed permutation: not a bijection");
    seen[columns_[i]] = true;
    if (signs_[i] != 1 && signs_[i] != -1) throw InputError("signed permutation: signs must be +-1");
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<std::size_t> c(n);
  std::iota(c.begin(), c.end(), 0);
  return SignedPermutation(std::move(c), std::vector<int>(n, 1));
}

int SignedPermutation::determinant() const {
  int d = inversion_parity(columns_);
  for (int s : signs_) d *= s;
  return d;
}

RationalMatrix SignedPermutation::matrix() const {
  RationalMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, columns_[i]) = signs_[i];
  return m;
}

SignedPermutation SignedPermutation::transpose() const {
  std::vector<std::size_t> c(size());
  std::vector<int> s(size());
  for (std::size_t i = 0; i < size(); ++i) {
    c[columns_[i]] = i;
    s[columns_[i]] = signs_[i];
  }
  return SignedPermutation(std::move(c), std::move(s));
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw InputError("signed permutation product: size mismatch");
  std::vector<std::size_t> c(a.size());
  std::vector<int> s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t k = a.columns_[i];
    c[i] = b.columns_[k];
    s[i] = a.signs_[i] * b.signs_[k];
  }
  return SignedPermutation(std::move(c), std::move(s));
}

int SignedPermutation::minor(const IndexSet& rows, const IndexSet& cols) const {
  if (rows.size() != cols.size()) throw InputError("minor: |S| != |T|");
  std::vector<std::size_t> images;
  images.reserve(rows.size());
  int sign = 1;
  for (auto r : rows.indices()) {
    images.push_back(columns_[r - 1] + 1);
    sign *= signs_[r - 1];
  }
  std::vector<std::size_t> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), cols.indices().begin(), cols.indices().end())) return 0;
  return sign * inversion_parity(images);
}

RationalMatrix SignedPermutation::left_apply(const RationalMatrix& m) const {
  if (m.rows() != size()) throw InputError("left_apply: dimension mismatch");
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = signs_[i] < 0 ? -m(columns_[i], j) : m(columns_[i], j);
  return r;
}

RationalMatrix SignedPermutation::right_apply(const RationalMatrix& m) const {
  if (m.cols() != size()) throw InputError("right_apply: dimension mismatch");
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i)
      r(i, columns_[k]) = signs_[k] < 0 ? -m(i, k) : m(i, k);
  return r;
}

PolyMatrix SignedPermutation::left_apply(const PolyMatrix& m) const {
  if (m.rows() != size()) throw InputError("left_apply: dimension mismatch");
  PolyMatrix r(m.rows(), m.cols(), m.arity());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.set(i, j, signs_[i] < 0 ? -m(columns_[i], j) : m(columns_[i], j));
  return r;
}

PolyMatrix SignedPermutation::right_apply(const PolyMatrix& m) const {
  if (m.cols() != size()) throw InputError("right_apply: dimension mismatch");
  PolyMatrix r(m.rows(), m.cols(), m.arity());
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i)
      r.set(i, columns_[k], signs_[k] < 0 ? -m(i, k) : m(i, k));
  return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t signed_permutation_count(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= n; ++i) c = saturating_mul(c, 2 * i);
  return c;
}

void require_within_cap(std::size_t n, std::uint64_t cap) {
  const std::uint64_t c = signed_permutation_count(n);
  if (c > cap) {
    throw CapExceeded("exhaustive signed-permutation ensemble of size " + std::to_string(n) + " has " +
                      (c == UINT64_MAX ? std::string("too many") : std::to_string(c)) +
                      " elements, above the cap of " + std::to_string(cap) +
                      "; use a sampled ensemble (--samples)");
  }
}

SignedPermutation signed_permutation_at(std::size_t n, std::uint64_t index) {
  if (index >= signed_permutation_count(n)) throw InputError("signed permutation index out of range");
  const std::uint64_t sign_mask = n >= 64 ? index : index & ((std::uint64_t{1} << n) - 1);
  std::uint64_t rank = n >= 64 ? 0 : index >> n;
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<std::size_t> columns;
  columns.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = fact[n - 1 - i];
    const auto pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    columns.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = (sign_mask >> i & 1U) ? -1 : 1;
  return SignedPermutation(std::move(columns), std::move(signs));
}

std::vector<SignedPermutation> enumerate_signed_permutations(std::size_t n, std::uint64_t cap) {
  require_within_cap(n, cap);
  const std::uint64_t count = signed_permutation_count(n);
  std::vector<SignedPermutation> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(signed_permutation_at(n, i));
  return out;
}

SignedPermutation sample_signed_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> columns(n);
  std::iota(columns.begin(), columns.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(columns[i - 1], columns[j]);
  }
  std::vector<int> signs(n);
  for (auto& s : signs) s = rng.coin() ? -1 : 1;
  return SignedPermutation(std::move(columns), std::move(signs));
}

}  // namespace detconv
