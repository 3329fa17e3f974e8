#pragma once

#include <cstddef>
#include <cstdint>

#include "unimod/complex_core.hpp"

namespace unimod {

/// Certified interval for an operator norm plus the vector attaining `lower`.
struct NormBracket {
  double lower = 0.0;
  double upper = 0.0;
  ComplexVector witness{1};
  std::size_t grid_resolution = 0;  // cells per angle on the finest level
  std::size_t evaluations = 0;
  bool certified = false;           // upper - lower <= tol was reached
};

/// Exponent pair for l_q -> l_p.
struct LpPair {
  double p = kInf;
  double q = 1.0;
  /// max{1/2 - 1/p, 1/q - 1/2}
  double alpha() const;
};

/// Conjugate exponent, 1 <-> inf.
double dual_exponent(double p);

/// ||A||_{1->inf}: the largest entry modulus.
double norm_1_to_inf(const ComplexMatrix& a);

/// Largest singular value; repeated squaring of A*A followed by a Rayleigh
/// quotient, so nearly degenerate spectra still converge.
double norm_2_to_2(const ComplexMatrix& a);

/// ||A x||_1 for x = (1, e^{i phi_1}, ...).
double l1_image(const ComplexMatrix& a, std::span<const double> phi);

struct InfToOneOptions {
  double tol = 1e-6;
  std::size_t max_cells = std::size_t{1} << 21;  // live cells per level
  std::size_t certify_max_order = 4;             // above this, restart mode
  std::size_t restarts = 64;                     // restart mode only
  std::uint64_t seed = 1;
};

/// sup over unimodular x of ||Ax||_1, with x_1 fixed to 1. Up to
/// certify_max_order the torus is covered by dyadic branch and bound with
/// second-order cell bounds; `upper` is then rigorous. Larger orders, or a
/// blown cell budget, leave `certified` false; `upper` is still a valid (loose)
/// bound.
NormBracket norm_inf_to_1_certified(const ComplexMatrix& a, const InfToOneOptions& opts = {});

/// Cheap multi-start estimate of ||A||_{inf->1} (a lower bound).
double norm_inf_to_1_estimate(const ComplexMatrix& a, std::size_t starts, std::uint64_t seed);

struct QpResult {
  double value = 0.0;
  ComplexVector witness{1};
};

/// Lower bound for ||A||_{q->p} = sup ||Ax||_p / ||x||_q. Exact for q = 1
/// (largest column p-norm), p = inf (largest row q*-norm) and p = q = 2;
/// otherwise the best of `restarts` runs of the nonlinear power method. The
/// value is always attained by the returned witness.
QpResult norm_q_to_p_lower(const ComplexMatrix& a, const LpPair& pair, std::size_t restarts,
                           std::uint64_t seed = 1);

/// n^{1 - 1/q}, the interpolation bound on ||H||_{q -> q*} for Hadamard H.
double riesz_thorin_bound(std::size_t n, double q);

}  // namespace unimod
