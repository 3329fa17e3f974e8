#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace unimod {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDim = 9;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// e^{i phi}, with exact values at multiples of pi/2.
Complex unit_phase(double phi);

/// Primitive cube root of unity e^{2 pi i / 3}.
Complex omega();

/// Reduce an angle to the fundamental interval [-pi, pi).
double normalize_angle(double phi);

/// Fixed-length complex vector, 1 <= n <= kMaxDim.
class ComplexVector {
 public:
  explicit ComplexVector(std::size_t n);
  ComplexVector(std::initializer_list<Complex> entries);
  explicit ComplexVector(std::vector<Complex> entries);

  std::size_t size() const { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  ComplexVector conj() const;
  ComplexVector scaled(Complex c) const;

  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  std::vector<Complex> data_;
};

/// Dense square complex matrix, row-major, order 1..kMaxDim.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t n);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::span<const ComplexVector> rows);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t order() const { return n_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  ComplexVector row(std::size_t r) const;
  ComplexVector column(std::size_t c) const;
  std::span<const Complex> row_span(std::size_t r) const {
    return {data_.data() + r * n_, n_};
  }

  ComplexMatrix scaled(Complex c) const;
  ComplexVector apply(const ComplexVector& x) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Complex> data_;
};

/// <x, y> = sum_i x_i conj(y_i); conjugate-linear in the second argument.
Complex inner(const ComplexVector& x, const ComplexVector& y);

/// l_p norm for p in [1, inf]; pass kInf for the max-modulus norm.
double pnorm(const ComplexVector& x, double p);

/// Determinant by LU with partial pivoting.
Complex det(const ComplexMatrix& a);

/// Inverse by Gauss-Jordan with partial pivoting. Throws DomainError when
/// |det a| is below `singular_tol`.
ComplexMatrix inverse(const ComplexMatrix& a, double singular_tol = 1e-14);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// diag(1, a): the block extension used for the higher-dimensional
/// counterexamples.
ComplexMatrix block_extend(const ComplexMatrix& a);

double max_entry_modulus(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Point (theta1, theta2) of the 2-torus, stored normalized to [-pi, pi)^2.
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(double theta1, double theta2);

  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }
  TorusPoint shifted(double d1, double d2) const;

  /// (1, e^{i theta1}, e^{i theta2})
  ComplexVector realize() const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  double theta1_ = 0.0;
  double theta2_ = 0.0;
};

/// Unimodular vector (1, e^{i phi_1}, ..., e^{i phi_{n-1}}) stored by its
/// free angles; the global phase is quotiented out.
class PhaseVector {
 public:
  PhaseVector() = default;
  explicit PhaseVector(std::vector<double> free_angles);

  /// Phase vector of a unimodular x, rotated so that the first entry is 1.
  static PhaseVector from_unimodular(const ComplexVector& x);

  std::size_t dimension() const { return angles_.size() + 1; }
  std::span<const double> free_angles() const { return angles_; }
  ComplexVector realize() const;

  friend bool operator==(const PhaseVector&, const PhaseVector&) = default;

 private:
  std::vector<double> angles_;
};

}  // namespace unimod
