#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace medgp {

// Runs fn(begin, end) over a fixed partition of [0, n) into `workers`
// contiguous chunks.  The partition depends only on n and workers, and each
// index is handled by exactly one invocation, so any computation whose
// per-index results are written to disjoint slots is bitwise independent of
// the worker count.
inline void parallel_for(int n, int workers, const std::function<void(int, int)>& fn) {
  if (n <= 0) return;
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    fn(0, n);
    return;
  }
  const int chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  pool.reserve(static_cast<size_t>(workers) - 1);
  for (int w = 1; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  try {
    fn(0, std::min(n, chunk));
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace medgp
