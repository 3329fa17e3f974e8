#pragma once

#include <cstddef>

namespace unimod {

// Margin used whenever a strict inequality from the theory is checked in
// floating point. The sets involved are open, so numerics need a band.
inline constexpr double kDefaultEpsilon = 1e-9;

double epsilon();
void set_epsilon(double eps);

// Worker threads for data-parallel sweeps. 0 means "use hardware concurrency".
// Defaults to the UNIMOD_THREADS environment variable when set.
std::size_t thread_count();
void set_thread_count(std::size_t n);

}  // namespace unimod
