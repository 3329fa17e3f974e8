#pragma once

// Reference computations used by the tests. They are written independently of
// the library (plain std::complex arrays, brute force) so that agreement is
// evidence rather than tautology.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Mat = std::vector<std::vector<cd>>;

inline const double pi = std::acos(-1.0);

inline cd expi(double t) { return {std::cos(t), std::sin(t)}; }

// Cofactor expansion; fine up to order 6 or so.
inline cd det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  cd s = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    Mat minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) minor[r - 1].push_back(a[r][k]);
    s += (c % 2 == 0 ? 1.0 : -1.0) * a[0][c] * det(minor);
  }
  return s;
}

// 1-based DFT entries straight from the definition.
inline Mat dft(std::size_t n) {
  Mat m(n, std::vector<cd>(n));
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = 1; k <= n; ++k)
      m[j - 1][k - 1] = expi(2.0 * pi * static_cast<double>(j * k % n) / static_cast<double>(n));
  return m;
}

// sum_i |sum_j a_ij x_j| for x = (1, e^{i t_1}, ...)
inline double l1_image(const Mat& a, const std::vector<double>& t) {
  double s = 0.0;
  for (const auto& row : a) {
    cd z = row[0];
    for (std::size_t k = 1; k < row.size(); ++k) z += row[k] * expi(t[k - 1]);
    s += std::abs(z);
  }
  return s;
}

// Dense uniform sweep of the (n-1)-torus for ||A||_{inf->1}; a lower estimate.
inline double inf_to_1_sweep(const Mat& a, std::size_t per_axis) {
  const std::size_t d = a.size() - 1;
  std::vector<double> t(d, 0.0);
  std::vector<std::size_t> idx(d, 0);
  double best = 0.0;
  while (true) {
    for (std::size_t k = 0; k < d; ++k)
      t[k] = -pi + 2.0 * pi * static_cast<double>(idx[k]) / static_cast<double>(per_axis);
    best = std::max(best, l1_image(a, t));
    std::size_t k = 0;
    while (k < d && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == d) break;
  }
  return best;
}

// max_i |<x, a_i>| for x = (1, e^{i t})
inline double maxmod(const Mat& rows, const std::vector<double>& t) {
  double m = 0.0;
  for (const auto& r : rows) {
    cd z = std::conj(r[0]);
    for (std::size_t k = 1; k < r.size(); ++k) z += expi(t[k - 1]) * std::conj(r[k]);
    m = std::max(m, std::abs(z));
  }
  return m;
}

inline cd random_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const double x = u(rng), y = u(rng);
    if (x * x + y * y <= 1.0) return {x, y};
  }
}

inline cd random_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng)};
}

}  // namespace oracle
