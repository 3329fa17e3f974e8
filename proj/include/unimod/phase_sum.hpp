#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "unimod/complex_core.hpp"

namespace unimod {

/// Local picture of z(theta) = c_0 + sum_k c_k e^{i theta_k} on a box cell
/// |theta - center| <= h, for up to kMaxDim - 1 free angles.
struct PhaseSumCell {
  double modulus = 0.0;  // |z(center)|
  double lo = 0.0;       // rigorous lower bound of |z| on the cell
  double hi = 0.0;       // rigorous upper bound of |z| on the cell
  // Gradient of |z| at the center and a bound R on the second-order remainder:
  // | |z(c+d)| - |z(c)| - grad.d | <= R/2 on the cell. Only meaningful when
  // lo > 0 (|z| is smooth there).
  std::array<double, kMaxDim> grad{};
  double remainder = kInf;
};

/// coef[0] is the constant term, coef[k] multiplies e^{i theta_{k-1}}.
PhaseSumCell analyze_phase_sum(std::span<const Complex> coef, std::span<const double> center,
                               std::span<const double> half_width);

/// |z(theta)| only.
double phase_sum_modulus(std::span<const Complex> coef, std::span<const double> theta);

/// Upper bound of max over the box |d_k| <= h_k of min_s (v_s + g_s . d), the
/// value of the small linear program, computed by enumerating the vertices of
/// its dual. Any dual point is a valid bound, so numerical error in the
/// enumeration can only loosen the result. g is row-major m x h.size().
double maxmin_affine_upper(std::span<const double> v, std::span<const double> g,
                           std::span<const double> h);

}  // namespace unimod
