// Built with -mavx2 -mfma; only reached through the runtime dispatcher.
#include <immintrin.h>

#include <bit>
#include <vector>

#include "detconv/kernels.hpp"

namespace detconv::kernels::avx2 {

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double hprod(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d p = _mm_mul_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_mul_sd(p, _mm_unpackhi_pd(p, p)));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double ryser_gray_range(const RyserColumns& cols, std::uint64_t begin, std::uint64_t end) {
  const std::size_t n = cols.n;
  const std::size_t stride = cols.stride;
  if (begin >= end) return 0.0;
  // Padding lanes hold 1.0 so they drop out of the row-sum product; the
  // padded column entries are zero and never disturb them.
  std::vector<double> sums(stride, 1.0);
  for (std::size_t i = 0; i < n; ++i) sums[i] = 0.0;
  const std::uint64_t start = begin ^ (begin >> 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (start >> j & 1U) {
      const double* c = cols.data.data() + j * stride;
      for (std::size_t i = 0; i < n; ++i) sums[i] += c[i];
    }
  }
  double* s = sums.data();
  const std::size_t blocks = stride / 4;
  auto product = [&] {
    __m256d p = _mm256_loadu_pd(s);
    for (std::size_t b = 1; b < blocks; ++b) p = _mm256_mul_pd(p, _mm256_loadu_pd(s + 4 * b));
    return hprod(p);
  };
  double acc = 0.0;
  if (start != 0) acc = (begin & 1U) ? -product() : product();
  for (std::uint64_t g = begin + 1; g < end; ++g) {
    const auto j = static_cast<std::size_t>(std::countr_zero(g));
    const double* c = cols.data.data() + j * stride;
    const std::uint64_t gray = g ^ (g >> 1);
    __m256d p;
    if (gray >> j & 1U) {
      __m256d v = _mm256_add_pd(_mm256_loadu_pd(s), _mm256_loadu_pd(c));
      _mm256_storeu_pd(s, v);
      p = v;
      for (std::size_t b = 1; b < blocks; ++b) {
        v = _mm256_add_pd(_mm256_loadu_pd(s + 4 * b), _mm256_loadu_pd(c + 4 * b));
        _mm256_storeu_pd(s + 4 * b, v);
        p = _mm256_mul_pd(p, v);
      }
    } else {
      __m256d v = _mm256_sub_pd(_mm256_loadu_pd(s), _mm256_loadu_pd(c));
      _mm256_storeu_pd(s, v);
      p = v;
      for (std::size_t b = 1; b < blocks; ++b) {
        v = _mm256_sub_pd(_mm256_loadu_pd(s + 4 * b), _mm256_loadu_pd(c + 4 * b));
        _mm256_storeu_pd(s + 4 * b, v);
        p = _mm256_mul_pd(p, v);
      }
    }
    const double prod = hprod(p);
    acc += (g & 1U) ? -prod : prod;
  }
  return acc;
}

}  // namespace detconv::kernels::avx2
