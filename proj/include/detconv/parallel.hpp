#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace detconv {

// Sum term(i) for i in [0, count) on up to `workers` threads. Each worker owns
// a contiguous block and the partial sums are combined in block order, so any
// exact (associative) value type gives the same result for every worker count.
template <class T, class Term>
T parallel_sum(std::uint64_t count, unsigned workers, T zero, Term&& term) {
  if (workers <= 1 || count < 2) {
    T acc = zero;
    for (std::uint64_t i = 0; i < count; ++i) acc += term(i);
    return acc;
  }
  const std::uint64_t w = std::min<std::uint64_t>(workers, count);
  std::vector<T> partial(w, zero);
  std::vector<std::exception_ptr> errors(w);
  {
    std::vector<std::jthread> threads;
    threads.reserve(w);
    for (std::uint64_t t = 0; t < w; ++t) {
      threads.emplace_back([&, t] {
        try {
          const std::uint64_t lo = count * t / w;
          const std::uint64_t hi = count * (t + 1) / w;
          for (std::uint64_t i = lo; i < hi; ++i) partial[t] += term(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc = std::move(partial[0]);
  for (std::uint64_t t = 1; t < w; ++t) acc += partial[t];
  return acc;
}

}  // namespace detconv
