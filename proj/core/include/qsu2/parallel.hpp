#pragma once

// Deterministic fan-out over independent work items.

#include <cstddef>
#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace qsu2 {

/// Worker count: QSU2_THREADS when set to a positive integer, else the hardware count.
inline unsigned thread_count() {
  if (const char* env = std::getenv("QSU2_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// results[i] = f(i) for i < count. Items are strided over the workers; the result order
/// never depends on scheduling. The first exception (by index) is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& f) {
  std::vector<T> results(count);
  std::vector<std::exception_ptr> errors(count);
  const std::size_t workers = std::min<std::size_t>(thread_count(), count);
  auto run = [&](std::size_t first) {
    for (std::size_t i = first; i < count; i += workers) {
      try {
        results[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace qsu2
