#include <bit>
#include <vector>

#include "detconv/kernels.hpp"

namespace detconv::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double ryser_gray_range(const RyserColumns& cols, std::uint64_t begin, std::uint64_t end) {
  const std::size_t n = cols.n;
  if (begin >= end) return 0.0;
  std::vector<double> sums(n, 0.0);
  const std::uint64_t start = begin ^ (begin >> 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (start >> j & 1U) {
      const double* c = cols.data.data() + j * cols.stride;
      for (std::size_t i = 0; i < n; ++i) sums[i] += c[i];
    }
  }
  auto product = [&] {
    double p = 1.0;
    for (std::size_t i = 0; i < n; ++i) p *= sums[i];
    return p;
  };
  double acc = 0.0;
  if (start != 0) acc = (begin & 1U) ? -product() : product();
  for (std::uint64_t g = begin + 1; g < end; ++g) {
    const auto j = static_cast<std::size_t>(std::countr_zero(g));
    const double* c = cols.data.data() + j * cols.stride;
    const std::uint64_t gray = g ^ (g >> 1);
    if (gray >> j & 1U) {
      for (std::size_t i = 0; i < n; ++i) sums[i] += c[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) sums[i] -= c[i];
    }
    const double p = product();
    acc += (g & 1U) ? -p : p;
  }
  return acc;
}

}  // namespace detconv::kernels::scalar
