#include "detconv/ensembles.hpp"

#include <algorithm>
#include <cmath>

#include "detconv/error.hpp"
#include "detconv/kernels.hpp"
#include "detconv/parallel.hpp"

namespace detconv {

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::SignedPermutationExhaustive: return "signed-permutation-exhaustive";
    case EnsembleKind::SignedPermutationSampled: return "signed-permutation-sampled";
    case EnsembleKind::HaarOrthogonalSampled: return "haar-orthogonal-sampled";
  }
  return "unknown";
}

EnsembleKind parse_ensemble_kind(const std::string& name) {
  if (name == "signed-permutation-exhaustive" || name == "exhaustive") return EnsembleKind::SignedPermutationExhaustive;
  if (name == "signed-permutation-sampled" || name == "sampled") return EnsembleKind::SignedPermutationSampled;
  if (name == "haar-orthogonal-sampled" || name == "haar") return EnsembleKind::HaarOrthogonalSampled;
  throw InputError("unknown ensemble kind '" + name + "'");
}

void validate(const EnsembleSpec& spec) {
  if (spec.n == 0) throw InputError("ensemble size must be positive");
  if (spec.kind == EnsembleKind::SignedPermutationExhaustive) {
    require_within_cap(spec.n, spec.cap);
  } else if (spec.sample_count == 0) {
    throw InputError("sampled ensemble needs a positive sample count");
  }
}

RealMatrix haar_orthogonal_sample(std::size_t n, Rng& rng) {
  if (n == 0) throw InputError("haar sample: n must be positive");
  // Column-major working copy so Householder updates touch contiguous memory.
  std::vector<double> a(n * n);
  for (auto& v : a) v = rng.normal();
  std::vector<std::vector<double>> reflectors(n);
  std::vector<double> diag_sign(n, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::span<double> x(a.data() + k * n + k, n - k);
    const double norm = std::sqrt(kernels::dot(x, x));
    if (norm == 0.0) continue;
    const double alpha = x[0] > 0 ? -norm : norm;
    std::vector<double> v(x.begin(), x.end());
    v[0] -= alpha;
    const double vnorm = std::sqrt(kernels::dot(v, v));
    if (vnorm == 0.0) {
      diag_sign[k] = alpha < 0 ? -1.0 : 1.0;
      continue;
    }
    for (auto& e : v) e /= vnorm;
    for (std::size_t j = k; j < n; ++j) {
      std::span<double> col(a.data() + j * n + k, n - k);
      kernels::axpy(-2.0 * kernels::dot(v, col), v, col);
    }
    diag_sign[k] = alpha < 0 ? -1.0 : 1.0;  // R_kk = alpha
    reflectors[k] = std::move(v);
  }
  // Q = H_0 H_1 ... H_{n-1}, accumulated column-major.
  std::vector<double> q(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  for (std::size_t k = n; k-- > 0;) {
    const auto& v = reflectors[k];
    if (v.empty()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::span<double> col(q.data() + j * n + k, n - k);
      kernels::axpy(-2.0 * kernels::dot(v, col), v, col);
    }
  }
  RealMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out(i, j) = q[j * n + i] * diag_sign[j];
  return out;
}

double orthogonality_defect(const RealMatrix& q) {
  double worst = 0.0;
  for (std::size_t i = 0; i < q.rows; ++i)
    for (std::size_t j = 0; j < q.rows; ++j) {
      const std::span<const double> ri(q.data.data() + i * q.cols, q.cols);
      const std::span<const double> rj(q.data.data() + j * q.cols, q.cols);
      const double v = kernels::dot(ri, rj) - (i == j ? 1.0 : 0.0);
      worst = std::max(worst, std::abs(v));
    }
  return worst;
}

double real_minor(const RealMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  const std::size_t k = rows.size();
  if (k != cols.size()) throw InputError("minor: |S| != |T|");
  if (k == 0) return 1.0;
  std::vector<double> s(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s[i * k + j] = m(rows[i] - 1, cols[j] - 1);
  double det = 1.0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (std::abs(s[r * k + c]) > std::abs(s[p * k + c])) p = r;
    }
    if (s[p * k + c] == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(s[p * k + j], s[c * k + j]);
      det = -det;
    }
    det *= s[c * k + c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const double f = s[r * k + c] / s[c * k + c];
      for (std::size_t j = c; j < k; ++j) s[r * k + j] -= f * s[c * k + j];
    }
  }
  return det;
}

MultiPoly exhaustive_expectation(std::size_t n, std::uint64_t cap, unsigned workers,
                                 const std::function<MultiPoly(const SignedPermutation&)>& f) {
  require_within_cap(n, cap);
  const std::uint64_t count = signed_permutation_count(n);
  // Arity is taken from the first evaluation.
  MultiPoly first = f(signed_permutation_at(n, 0));
  MultiPoly rest = parallel_sum(count - 1, workers, MultiPoly(first.arity()),
                                [&](std::uint64_t i) { return f(signed_permutation_at(n, i + 1)); });
  first += rest;
  first *= Rational(BigInt(1), BigInt(std::to_string(count)));
  return first;
}

EnsembleAverage expectation_over_ensemble(const EnsembleSpec& spec,
                                          const std::function<MultiPoly(const SignedPermutation&)>& f,
                                          unsigned workers) {
  validate(spec);
  switch (spec.kind) {
    case EnsembleKind::SignedPermutationExhaustive:
      return {exhaustive_expectation(spec.n, spec.cap, workers, f), signed_permutation_count(spec.n), true};
    case EnsembleKind::SignedPermutationSampled: {
      Rng rng(spec.seed, streams::kSignedPermutation);
      std::vector<SignedPermutation> draws;
      draws.reserve(spec.sample_count);
      for (std::uint64_t i = 0; i < spec.sample_count; ++i) draws.push_back(sample_signed_permutation(spec.n, rng));
      MultiPoly first = f(draws[0]);
      MultiPoly rest = parallel_sum(spec.sample_count - 1, workers, MultiPoly(first.arity()),
                                    [&](std::uint64_t i) { return f(draws[i + 1]); });
      first += rest;
      first *= Rational(BigInt(1), BigInt(std::to_string(spec.sample_count)));
      return {std::move(first), spec.sample_count, false};
    }
    case EnsembleKind::HaarOrthogonalSampled:
      break;
  }
  throw InputError("expectation_over_ensemble: Haar ensemble has no exact polynomial expectation");
}

namespace {

// All subsets of [n] of size <= max_size, grouped by size.
std::vector<std::vector<IndexSet>> subsets_by_size(std::size_t n, std::size_t max_size) {
  std::vector<std::vector<IndexSet>> out;
  for (std::size_t k = 0; k <= max_size; ++k) out.push_back(subsets_of_size(n, k));
  return out;
}

// Sum over subsets tables indexed [tuple] of minor products accumulated over
// a batch of ensemble elements.
template <class Value, class MinorFn>
void accumulate_products(const std::vector<std::vector<IndexSet>>& sets, std::size_t k_max, std::size_t l_max,
                         MinorFn&& minor_of, std::vector<Value>& sums) {
  // Cache all minors of this element by size.
  const std::size_t top = std::max(k_max, l_max);
  std::vector<std::vector<Value>> table(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    const auto& ks = sets[k];
    table[k].resize(ks.size() * ks.size());
    for (std::size_t a = 0; a < ks.size(); ++a)
      for (std::size_t b = 0; b < ks.size(); ++b) table[k][a * ks.size() + b] = minor_of(ks[a], ks[b]);
  }
  std::size_t idx = 0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const std::size_t nk = sets[k].size();
    for (std::size_t si = 0; si < nk; ++si)
      for (std::size_t ti = 0; ti < nk; ++ti) {
        const Value rst = table[k][si * nk + ti];
        for (std::size_t l = 0; l <= l_max; ++l) {
          const std::size_t nl = sets[l].size();
          if (rst == Value(0)) {
            idx += nl * nl;
            continue;
          }
          for (std::size_t ui = 0; ui < nl; ++ui)
            for (std::size_t vi = 0; vi < nl; ++vi) {
              // [R^T]_{U,V} = [R]_{V,U}
              sums[idx++] += rst * table[l][vi * nl + ui];
            }
        }
      }
  }
}

std::size_t tuple_count(const std::vector<std::vector<IndexSet>>& sets, std::size_t k_max, std::size_t l_max) {
  std::size_t a = 0;
  std::size_t b = 0;
  for (std::size_t k = 0; k <= k_max; ++k) a += sets[k].size() * sets[k].size();
  for (std::size_t l = 0; l <= l_max; ++l) b += sets[l].size() * sets[l].size();
  return a * b;
}

// Vector-valued accumulator usable with parallel_sum.
template <class Value>
struct Sums {
  std::vector<Value> v;
  Sums& operator+=(const Sums& o) {
    if (v.empty()) {
      v = o.v;
    } else {
      for (std::size_t i = 0; i < o.v.size(); ++i) v[i] += o.v[i];
    }
    return *this;
  }
};

}  // namespace

MinorOrthReport verify_minor_orthogonality(const EnsembleSpec& spec, std::size_t k_max, std::size_t l_max,
                                           const MinorOrthOptions& options) {
  validate(spec);
  const std::size_t n = spec.n;
  if (k_max > n || l_max > n) throw InputError("minor orthogonality: k_max and l_max must not exceed n");
  if (n > 62) throw InputError("minor orthogonality: n too large");

  const auto sets = subsets_by_size(n, std::max(k_max, l_max));
  const std::size_t tuples = tuple_count(sets, k_max, l_max);

  MinorOrthReport report;
  report.spec = spec;
  report.k_max = k_max;
  report.l_max = l_max;
  report.tolerance = options.tolerance;

  std::vector<Rational> observed_exact;
  std::vector<double> observed(tuples, 0.0);

  auto rotate = [&](SignedPermutation q) {
    if (options.left_rotation) q = *options.left_rotation * q;
    return q;
  };

  if (spec.kind == EnsembleKind::HaarOrthogonalSampled) {
    Rng rng(spec.seed, streams::kHaar);
    std::vector<double> sums(tuples, 0.0);
    for (std::uint64_t s = 0; s < spec.sample_count; ++s) {
      const RealMatrix q = haar_orthogonal_sample(n, rng);
      accumulate_products<double>(
          sets, k_max, l_max, [&](const IndexSet& a, const IndexSet& b) { return real_minor(q, a, b); }, sums);
    }
    for (std::size_t i = 0; i < tuples; ++i) observed[i] = sums[i] / static_cast<double>(spec.sample_count);
    report.samples = spec.sample_count;
  } else {
    std::uint64_t count = 0;
    std::function<SignedPermutation(std::uint64_t)> element;
    std::vector<SignedPermutation> draws;
    if (spec.kind == EnsembleKind::SignedPermutationExhaustive) {
      count = signed_permutation_count(n);
      element = [&](std::uint64_t i) { return rotate(signed_permutation_at(n, i)); };
      report.exact = true;
    } else {
      Rng rng(spec.seed, streams::kSignedPermutation);
      count = spec.sample_count;
      for (std::uint64_t i = 0; i < count; ++i) draws.push_back(rotate(sample_signed_permutation(n, rng)));
      element = [&](std::uint64_t i) { return draws[i]; };
    }
    // Integer sums: every minor of a signed permutation is -1, 0 or 1.
    Sums<long long> zero;
    Sums<long long> total = parallel_sum(count, options.workers, zero, [&](std::uint64_t i) {
      Sums<long long> acc;
      acc.v.assign(tuples, 0);
      const SignedPermutation q = element(i);
      accumulate_products<long long>(
          sets, k_max, l_max, [&](const IndexSet& a, const IndexSet& b) { return static_cast<long long>(q.minor(a, b)); },
          acc.v);
      return acc;
    });
    if (total.v.empty()) total.v.assign(tuples, 0);
    const BigInt denom(std::to_string(count));
    observed_exact.reserve(tuples);
    for (std::size_t i = 0; i < tuples; ++i) {
      observed_exact.emplace_back(BigInt(std::to_string(total.v[i])), denom);
      observed[i] = observed_exact.back().to_double();
    }
    report.samples = count;
  }

  report.entries.reserve(tuples);
  std::size_t idx = 0;
  bool all = true;
  for (std::size_t k = 0; k <= k_max; ++k)
    for (const auto& s : sets[k])
      for (const auto& t : sets[k])
        for (std::size_t l = 0; l <= l_max; ++l)
          for (const auto& u : sets[l])
            for (const auto& v : sets[l]) {
              MinorOrthEntry e{s, t, u, v, Rational(0), std::nullopt, observed[idx], 0.0, false};
              if (s == v && t == u) e.expected = Rational(BigInt(1), binomial(static_cast<long>(n), static_cast<long>(k)));
              if (report.exact) {
                e.observed_exact = observed_exact[idx];
                e.deviation = abs(*e.observed_exact - e.expected).to_double();
                e.pass = *e.observed_exact == e.expected;
              } else {
                if (!observed_exact.empty()) e.observed_exact = observed_exact[idx];
                e.deviation = std::abs(e.observed - e.expected.to_double());
                e.pass = e.deviation < options.tolerance;
              }
              report.max_deviation = std::max(report.max_deviation, e.deviation);
              all = all && e.pass;
              report.entries.push_back(std::move(e));
              ++idx;
            }
  report.pass = all;
  return report;
}

}  // namespace detconv
