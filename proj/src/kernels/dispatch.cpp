#include <atomic>
#include <stdexcept>

#include "detconv/kernels.hpp"

namespace detconv::kernels {

namespace {

// -1: no override; otherwise static_cast<int>(Isa).
std::atomic<int> g_override{-1};

bool cpu_has_avx2() {
#if defined(DETCONV_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel operands differ in length");
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

Isa active_isa() {
  const int o = g_override.load(std::memory_order_relaxed);
  if (o < 0) return detected_isa();
  const auto isa = static_cast<Isa>(o);
  return (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) ? Isa::Scalar : isa;
}

void set_isa_override(std::optional<Isa> isa) {
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

double dot(std::span<const double> a, std::span<const double> b, Isa isa) {
  require_same_size(a.size(), b.size());
#if defined(DETCONV_HAVE_AVX2)
  if (isa == Isa::Avx2 && detected_isa() == Isa::Avx2) return avx2::dot(a.data(), b.data(), a.size());
#endif
  (void)isa;
  return scalar::dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y, Isa isa) {
  require_same_size(x.size(), y.size());
#if defined(DETCONV_HAVE_AVX2)
  if (isa == Isa::Avx2 && detected_isa() == Isa::Avx2) {
    avx2::axpy(alpha, x.data(), y.data(), x.size());
    return;
  }
#endif
  (void)isa;
  scalar::axpy(alpha, x.data(), y.data(), x.size());
}

RyserColumns make_ryser_columns(std::span<const double> row_major, std::size_t n) {
  if (row_major.size() != n * n) throw std::invalid_argument("ryser: matrix must be n x n");
  if (n == 0 || n > 62) throw std::invalid_argument("ryser: need 1 <= n <= 62");
  RyserColumns c;
  c.n = n;
  c.stride = (n + 3) / 4 * 4;
  c.data.assign(c.stride * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.data[j * c.stride + i] = row_major[i * n + j];
  return c;
}

double ryser_gray_range(const RyserColumns& cols, std::uint64_t begin, std::uint64_t end, Isa isa) {
#if defined(DETCONV_HAVE_AVX2)
  if (isa == Isa::Avx2 && detected_isa() == Isa::Avx2) return avx2::ryser_gray_range(cols, begin, end);
#endif
  (void)isa;
  return scalar::ryser_gray_range(cols, begin, end);
}

}  // namespace detconv::kernels
