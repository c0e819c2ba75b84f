#pragma once

#include <cstdint>
#include <random>

namespace detconv {

// Seedable, portable generator. Each (seed, stream) pair selects an
// independent std::mt19937_64 whose 64-bit seed is
//   splitmix64(seed ^ splitmix64(stream + 1)).
// Everything built on top (bounded integers by rejection, 53-bit uniforms,
// Box-Muller normals) avoids the implementation-defined std distributions, so
// a given (seed, stream) yields the same draws on every conforming platform.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [lo, hi].
  std::int64_t integer_in(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

// Named streams used by the library so that, e.g., R1, R2 and Q draws never
// share a generator.
namespace streams {
inline constexpr std::uint64_t kSignedPermutation = 1;
inline constexpr std::uint64_t kHaar = 2;
inline constexpr std::uint64_t kInstances = 3;
}  // namespace streams

}  // namespace detconv
