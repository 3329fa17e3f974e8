#include "unimod/config.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace unimod {

namespace {

std::atomic<double> g_epsilon{kDefaultEpsilon};

std::size_t env_threads() {
  if (const char* v = std::getenv("UNIMOD_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && n > 0) return static_cast<std::size_t>(n);
  }
  return 0;
}

std::atomic<std::size_t> g_threads{env_threads()};

}  // namespace

double epsilon() { return g_epsilon.load(std::memory_order_relaxed); }

void set_epsilon(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");
  g_epsilon.store(eps, std::memory_order_relaxed);
}

std::size_t thread_count() {
  const std::size_t n = g_threads.load(std::memory_order_relaxed);
  if (n > 0) return n;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void set_thread_count(std::size_t n) { g_threads.store(n, std::memory_order_relaxed); }

}  // namespace unimod
