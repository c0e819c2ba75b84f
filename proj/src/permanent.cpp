#include "detconv/permanent.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>
#include <thread>

#include "detconv/error.hpp"
#include "detconv/parallel.hpp"
#include "detconv/rng.hpp"

namespace detconv {

void validate(const RankDecomposition& dec) {
  if (dec.n == 0) throw InputError("rank decomposition: n must be positive");
  if (dec.a.empty()) throw InputError("rank decomposition: need k >= 1 vector pairs");
  if (dec.a.size() != dec.b.size()) throw InputError("rank decomposition: a and b hold different numbers of vectors");
  for (std::size_t r = 0; r < dec.a.size(); ++r) {
    if (dec.a[r].size() != dec.n || dec.b[r].size() != dec.n) {
      throw InputError("rank decomposition: vector pair " + std::to_string(r) + " does not have length " +
                       std::to_string(dec.n));
    }
  }
}

RationalMatrix reconstruct(const RankDecomposition& dec) {
  validate(dec);
  RationalMatrix m(dec.n, dec.n);
  for (std::size_t r = 0; r < dec.k(); ++r)
    for (std::size_t i = 0; i < dec.n; ++i)
      for (std::size_t j = 0; j < dec.n; ++j) m(i, j) += dec.a[r][i] * dec.b[r][j];
  return m;
}

Rational ryser_permanent(const RationalMatrix& m, unsigned workers) {
  if (!m.is_square()) throw InputError("ryser_permanent: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n > 30) throw InputError("ryser_permanent: exact Ryser is limited to n <= 30");
  const std::uint64_t count = std::uint64_t{1} << n;
  Rational sum = parallel_sum(count - 1, workers, Rational(0), [&](std::uint64_t i) {
    const std::uint64_t mask = i + 1;
    Rational prod(1);
    for (std::size_t r = 0; r < n && !prod.is_zero(); ++r) {
      Rational row(0);
      for (std::size_t c = 0; c < n; ++c)
        if (mask >> c & 1U) row += m(r, c);
      prod *= row;
    }
    return (std::popcount(mask) % 2 == 1) ? -prod : prod;
  });
  return n % 2 == 1 ? -sum : sum;
}

double ryser_permanent_f64(const std::vector<double>& row_major, std::size_t n, unsigned workers, kernels::Isa isa) {
  const kernels::RyserColumns cols = kernels::make_ryser_columns(row_major, n);
  const std::uint64_t count = std::uint64_t{1} << n;
  const unsigned w = std::max(1U, workers);
  std::vector<double> partial(w, 0.0);
  {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < w; ++t) {
      threads.emplace_back([&, t] {
        const std::uint64_t lo = count / w * t;
        const std::uint64_t hi = t + 1 == w ? count : count / w * (t + 1);
        partial[t] = kernels::ryser_gray_range(cols, lo, hi, isa);
      });
    }
  }
  double sum = 0.0;
  for (double p : partial) sum += p;
  return n % 2 == 1 ? -sum : sum;
}

MultiPoly diagonal_pencil_det(const std::vector<std::vector<Rational>>& vectors, std::size_t n) {
  const std::size_t k = vectors.size();
  MultiPoly p(k, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly f(k);
    for (std::size_t r = 0; r < k; ++r) {
      if (vectors[r][i].is_zero()) continue;
      ExponentVector e(k);
      e[r] = 1;
      f.add_term(e, vectors[r][i]);
    }
    p *= f;
    if (p.is_zero()) break;
  }
  return p;
}

Rational lowrank_permanent(const RankDecomposition& dec) {
  validate(dec);
  const MultiPoly p = diagonal_pencil_det(dec.a, dec.n);
  const MultiPoly q = diagonal_pencil_det(dec.b, dec.n);
  // n! [p * q](1,...,1) = sum_alpha p_alpha q_alpha alpha!
  Rational sum(0);
  for (const auto& [alpha, c] : p.terms()) {
    const Rational other = q.coefficient(alpha);
    if (!other.is_zero()) sum += c * other * Rational(alpha.factorial());
  }
  return sum;
}

BigInt term_count_report(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw InputError("term_count_report: n and k must be positive");
  return binomial(static_cast<long>(n + k - 1), static_cast<long>(k - 1));
}

BenchRow permanent_bench(std::size_t n, std::size_t k, std::uint64_t seed, unsigned workers) {
  if (n == 0 || n > 40) throw InputError("permanent bench: n must be in 1..40");
  if (k == 0) throw InputError("permanent bench: k must be positive");
  Rng rng(seed, streams::kInstances);
  RankDecomposition dec;
  dec.n = n;
  dec.a.assign(k, std::vector<Rational>(n));
  dec.b.assign(k, std::vector<Rational>(n));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      dec.a[r][i] = Rational(rng.integer_in(-2, 2));
      dec.b[r][i] = Rational(rng.integer_in(-2, 2));
    }
  const RationalMatrix m = reconstruct(dec);
  std::vector<double> dense(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dense[i * n + j] = m(i, j).to_double();

  using clock = std::chrono::steady_clock;
  BenchRow row;
  row.n = n;
  row.k = k;
  row.terms = term_count_report(n, k);
  auto t0 = clock::now();
  row.lowrank_value = lowrank_permanent(dec);
  auto t1 = clock::now();
  row.ryser_value = ryser_permanent_f64(dense, n, workers);
  auto t2 = clock::now();
  row.time_lowrank = std::chrono::duration<double>(t1 - t0).count();
  row.time_ryser = std::chrono::duration<double>(t2 - t1).count();
  return row;
}

}  // namespace detconv
