#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

// Floating-point inner loops with a scalar reference implementation and an
// AVX2/FMA variant chosen at runtime. Only the statistical and benchmark paths
// use these; the exact core never touches floating point.
namespace detconv::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
// Best variant the CPU and the build support.
Isa detected_isa();
// detected_isa() unless an override is installed.
Isa active_isa();
// Force a variant (tests, benchmarks). Requesting Avx2 on a CPU without it
// falls back to Scalar.
void set_isa_override(std::optional<Isa> isa);

double dot(std::span<const double> a, std::span<const double> b, Isa isa = active_isa());
// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y, Isa isa = active_isa());

// Column-major copy of an n x n matrix, each column zero-padded to `stride`
// (a multiple of 4) for the Gray-code Ryser sweep.
struct RyserColumns {
  std::size_t n = 0;
  std::size_t stride = 0;
  std::vector<double> data;
};

RyserColumns make_ryser_columns(std::span<const double> row_major, std::size_t n);

// Sum over Gray-code positions g in [begin, end) of
// (-1)^{|S_g|} prod_i sum_{j in S_g} a_ij with S_g = gray(g). The permanent is
// (-1)^n times the sum over [0, 2^n).
double ryser_gray_range(const RyserColumns& cols, std::uint64_t begin, std::uint64_t end,
                        Isa isa = active_isa());

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double ryser_gray_range(const RyserColumns& cols, std::uint64_t begin, std::uint64_t end);
}  // namespace scalar

#if defined(DETCONV_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double ryser_gray_range(const RyserColumns& cols, std::uint64_t begin, std::uint64_t end);
}  // namespace avx2
#endif

}  // namespace detconv::kernels
