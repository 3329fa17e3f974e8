#pragma once

#include <cstddef>
#include <cstdint>

#include "unimod/complex_core.hpp"

namespace unimod {

enum class HadamardFamily { dft, f4_param, user };

const char* family_name(HadamardFamily f);

/// Square matrix with unimodular entries and pairwise orthogonal columns.
struct HadamardMatrix {
  ComplexMatrix matrix;
  HadamardFamily family;
};

struct HadamardReport {
  bool ok = false;
  double modulus_defect = 0.0;       // max_ij ||h_ij| - 1|
  double orthogonality_defect = 0.0; // max_{j != k} |<col_j, col_k>|
};

/// F_n with entries exp(2 pi i jk / n), indices 1..n.
HadamardMatrix dft(std::size_t n);

/// Order-4 one-parameter family
///   [[1, 1, 1, 1], [1, i e^{it}, -1, -i e^{it}], [1, -1, 1, -1], [1, -i e^{it}, -1, i e^{it}]].
/// Rows two and four carry the phase; t = 0 is the order-4 Fourier matrix in
/// 0-based index order, a row/column permutation of dft(4).
HadamardMatrix f4_family(double t);

HadamardReport is_hadamard(const ComplexMatrix& a, double tol);

/// Validates a user matrix; throws DomainError with both defects otherwise.
HadamardMatrix as_hadamard(const ComplexMatrix& a, double tol = 1e-10);

/// Chirp x_k = exp(pi i k (k + n mod 2) / n), k = 1..n. For odd n this is the
/// quadratic Gauss-sum vector exp(pi i k(k+1)/n); for even n it reduces to
/// exp(pi i k^2 / n). Both make F_n x / sqrt(n) unimodular.
ComplexVector quadratic_phase_vector(std::size_t n);

/// max_k | |(Hx)_k| / sqrt(n) - 1 |
double flatness_defect(const ComplexMatrix& h, const ComplexVector& x);

struct FlatSearchOptions {
  double tol = 1e-6;
  std::size_t restarts = 64;
  std::uint64_t seed = 1;
};

struct FlatWitness {
  PhaseVector witness;
  double defect = 0.0;
  std::size_t restarts_used = 0;
};

/// Unimodular x with H x / sqrt(n) unimodular. Starts from the chirp, then from
/// seeded random phases; each start is refined by Levenberg-Marquardt on the
/// residuals |(Hx)_k|^2 / n - 1. Throws NotFoundError carrying the best defect
/// when no restart reaches `tol`.
FlatWitness flat_image_witness(const HadamardMatrix& h, const FlatSearchOptions& opts = {});

}  // namespace unimod
