#include "unimod/phase_sum.hpp"

#include <algorithm>
#include <cmath>

namespace unimod {

namespace {

// Relative slack added to every bound to absorb rounding in the evaluation.
constexpr double kRoundSlack = 1e-13;

// Solves the dense system a x = b in place (m <= 10). Returns false when
// numerically singular.
bool solve_small(double* a, double* b, std::size_t m) {
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < m; ++r)
      if (std::abs(a[r * m + k]) > std::abs(a[piv * m + k])) piv = r;
    if (std::abs(a[piv * m + k]) < 1e-13) return false;
    if (piv != k) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[k * m + c], a[piv * m + c]);
      std::swap(b[k], b[piv]);
    }
    for (std::size_t r = k + 1; r < m; ++r) {
      const double f = a[r * m + k] / a[k * m + k];
      for (std::size_t c = k; c < m; ++c) a[r * m + c] -= f * a[k * m + c];
      b[r] -= f * b[k];
    }
  }
  for (std::size_t k = m; k-- > 0;) {
    double s = b[k];
    for (std::size_t c = k + 1; c < m; ++c) s -= a[k * m + c] * b[c];
    b[k] = s / a[k * m + k];
  }
  return true;
}

}  // namespace

double phase_sum_modulus(std::span<const Complex> coef, std::span<const double> theta) {
  Complex z = coef[0];
  for (std::size_t k = 0; k < theta.size(); ++k) z += coef[k + 1] * unit_phase(theta[k]);
  return std::abs(z);
}

PhaseSumCell analyze_phase_sum(std::span<const Complex> coef, std::span<const double> center,
                               std::span<const double> half_width) {
  const std::size_t d = center.size();
  PhaseSumCell out;
  Complex z = coef[0];
  std::array<Complex, kMaxDim> w{};
  std::array<double, kMaxDim> mod{};
  double l1 = std::abs(coef[0]);
  for (std::size_t k = 0; k < d; ++k) {
    const Complex term = coef[k + 1] * Complex(std::cos(center[k]), std::sin(center[k]));
    z += term;
    w[k] = Complex(-term.imag(), term.real());  // d z / d theta_k = i c_k e^{i theta_k}
    mod[k] = std::abs(coef[k + 1]);
    l1 += mod[k];
  }
  const double m = std::abs(z);
  out.modulus = m;

  double lip = 0.0;      // sum_k |c_k| h_k
  double curv1 = 0.0;    // sum_k |c_k| h_k^2
  double qlin = 0.0;     // sum_k |dq/dtheta_k| h_k
  double qquad = 0.0;    // 1/2 h^T M h
  for (std::size_t k = 0; k < d; ++k) {
    const double h = half_width[k];
    lip += mod[k] * h;
    curv1 += mod[k] * h * h;
    const double gq = 2.0 * (std::conj(z) * w[k]).real();
    qlin += std::abs(gq) * h;
    // |d^2 q / d theta_k^2| <= 2|c_k|(|c|_1 - |c_k|), |d^2 q / d theta_k d theta_l| <= 2|c_k||c_l|.
    qquad += mod[k] * (l1 - mod[k]) * h * h;
    for (std::size_t l = 0; l < d; ++l)
      if (l != k) qquad += mod[k] * mod[l] * h * half_width[l];
    out.grad[k] = m > 0.0 ? gq / (2.0 * m) : 0.0;
  }
  const double slack = kRoundSlack * (l1 + 1.0);
  const double q = m * m;
  const double hi_taylor = std::sqrt(q + qlin + qquad + slack * (l1 + 1.0));
  const double lo_taylor = std::sqrt(std::max(0.0, q - qlin - qquad - slack * (l1 + 1.0)));
  out.hi = std::min({m + lip, hi_taylor, l1}) + slack;
  out.lo = std::max({m - lip, lo_taylor, 0.0}) - slack;
  if (out.lo <= 0.0) {
    out.lo = 0.0;
    out.remainder = kInf;
  } else {
    out.remainder = (curv1 + lip * lip / out.lo) * (1.0 + kRoundSlack) + 2.0 * slack;
  }
  return out;
}

double maxmin_affine_upper(std::span<const double> v, std::span<const double> g,
                           std::span<const double> h) {
  const std::size_t m = v.size();
  const std::size_t d = h.size();
  double best = kInf;
  std::array<double, 16> lam{};

  auto dual_value = [&](std::span<const std::size_t> support, const double* weights) {
    double s = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) s += weights[i] * v[support[i]];
    for (std::size_t k = 0; k < d; ++k) {
      double gk = 0.0;
      for (std::size_t i = 0; i < support.size(); ++i) gk += weights[i] * g[support[i] * d + k];
      s += h[k] * std::abs(gk);
    }
    return s;
  };

  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t idx[1] = {s};
    const double one = 1.0;
    best = std::min(best, dual_value(idx, &one));
  }
  // Larger systems only use single-function bounds; the enumeration grows
  // combinatorially and no caller needs it.
  if (m < 2 || m > 9 || d == 0) return best;

  const std::size_t max_support = std::min(m, d + 1);
  std::array<std::size_t, 16> support{};
  std::array<std::size_t, 16> coords{};
  std::array<double, 256> a{};
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    const std::size_t sz = static_cast<std::size_t>(__builtin_popcount(mask));
    if (sz < 2 || sz > max_support) continue;
    std::size_t t = 0;
    for (std::size_t s = 0; s < m; ++s)
      if (mask & (1U << s)) support[t++] = s;
    // Choose sz - 1 coordinates whose aggregated gradient is forced to zero.
    for (unsigned cm = 0; cm < (1U << d); ++cm) {
      if (static_cast<std::size_t>(__builtin_popcount(cm)) != sz - 1) continue;
      std::size_t u = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (cm & (1U << k)) coords[u++] = k;
      for (std::size_t c = 0; c < sz; ++c) a[c] = 1.0;
      lam[0] = 1.0;
      for (std::size_t r = 1; r < sz; ++r) {
        for (std::size_t c = 0; c < sz; ++c) a[r * sz + c] = g[support[c] * d + coords[r - 1]];
        lam[r] = 0.0;
      }
      if (!solve_small(a.data(), lam.data(), sz)) continue;
      bool ok = true;
      double total = 0.0;
      for (std::size_t c = 0; c < sz; ++c) {
        if (lam[c] < -1e-9) ok = false;
        lam[c] = std::max(0.0, lam[c]);
        total += lam[c];
      }
      if (!ok || total <= 0.0) continue;
      for (std::size_t c = 0; c < sz; ++c) lam[c] /= total;
      best = std::min(best, dual_value(std::span<const std::size_t>(support.data(), sz), lam.data()));
    }
  }
  return best;
}

}  // namespace unimod
