#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace casimir::cli {

/// Worker count from CASIMIR_THREADS (default: hardware concurrency, at least 1).
unsigned thread_count();

/// Runs task(i) for i in [0, n) on up to `threads` workers. Each index is handled
/// exactly once and results land in their own slot, so output order never depends on
/// scheduling. The first exception (lowest index) is rethrown after all workers join.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& task);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F f, unsigned threads = thread_count()) {
  std::vector<T> out(n);
  parallel_for(n, threads, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace casimir::cli
