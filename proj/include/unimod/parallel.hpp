#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "unimod/config.hpp"

namespace unimod {

/// Runs body(i) for i in [0, count). Work is split into contiguous chunks,
/// one per thread; callers write results by index so the outcome does not
/// depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, Body&& body, std::size_t min_chunk = 256) {
  const std::size_t threads =
      std::min<std::size_t>(thread_count(), std::max<std::size_t>(1, count / min_chunk));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace unimod
