#include "unimod/complex_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "unimod/errors.hpp"

namespace unimod {

namespace {

void check_dim(std::size_t n) {
  if (n == 0 || n > kMaxDim) {
    throw DimensionError("dimension must be in 1.." + std::to_string(kMaxDim) +
                         ", got " + std::to_string(n));
  }
}

}  // namespace

Complex unit_phase(double phi) {
  // Quarter turns come out exact, which keeps DFT entries like -1 and i clean.
  const double quarters = phi / (kPi / 2.0);
  const double rounded = std::nearbyint(quarters);
  if (quarters == rounded) {
    switch (static_cast<long long>(std::fmod(std::fmod(rounded, 4.0) + 4.0, 4.0))) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return {std::cos(phi), std::sin(phi)};
}

Complex omega() { return {-0.5, std::sqrt(3.0) / 2.0}; }

double normalize_angle(double phi) {
  double r = std::fmod(phi + kPi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  double out = r - kPi;
  // fmod can land exactly on the excluded right end after rounding.
  if (out >= kPi) out -= kTwoPi;
  return out;
}

// ---------------------------------------------------------------------------

ComplexVector::ComplexVector(std::size_t n) : data_(n) { check_dim(n); }

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : data_(entries) {
  check_dim(data_.size());
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries)) {
  check_dim(data_.size());
}

ComplexVector ComplexVector::conj() const {
  ComplexVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = std::conj(data_[i]);
  return out;
}

ComplexVector ComplexVector::scaled(Complex c) const {
  ComplexVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = c * data_[i];
  return out;
}

// ---------------------------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), data_(n * n) { check_dim(n); }

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()) {
  check_dim(n_);
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionError("matrix rows must all have length n");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::span<const ComplexVector> rows) {
  ComplexMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw DimensionError("row " + std::to_string(r) + " has length " +
                           std::to_string(rows[r].size()) + ", expected " +
                           std::to_string(rows.size()));
    }
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexVector ComplexMatrix::row(std::size_t r) const {
  return ComplexVector(std::vector<Complex>(data_.begin() + r * n_, data_.begin() + (r + 1) * n_));
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector out(n_);
  for (std::size_t r = 0; r < n_; ++r) out[r] = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex c) const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z *= c;
  return out;
}

ComplexVector ComplexMatrix::apply(const ComplexVector& x) const {
  if (x.size() != n_) throw DimensionError("matrix-vector size mismatch");
  ComplexVector out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < n_; ++c) acc += (*this)(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("matrix product size mismatch");
  const std::size_t n = a.n_;
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

// ---------------------------------------------------------------------------

Complex inner(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("inner product of vectors with lengths " + std::to_string(x.size()) +
                         " and " + std::to_string(y.size()));
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

double pnorm(const ComplexVector& x, double p) {
  if (!(p >= 1.0)) throw DomainError("p-norm requires p >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& z : x.entries()) m = std::max(m, std::abs(z));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (const auto& z : x.entries()) s += std::abs(z);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (const auto& z : x.entries()) s += std::norm(z);
    return std::sqrt(s);
  }
  // Scale by the largest modulus to avoid overflow for large p.
  double m = 0.0;
  for (const auto& z : x.entries()) m = std::max(m, std::abs(z));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& z : x.entries()) s += std::pow(std::abs(z) / m, p);
  return m * std::pow(s, 1.0 / p);
}

Complex det(const ComplexMatrix& a) {
  const std::size_t n = a.order();
  ComplexMatrix lu = a;
  Complex d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(lu(r, k)) > std::abs(lu(piv, k))) piv = r;
    if (lu(piv, k) == Complex(0.0)) return 0.0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(piv, c));
      d = -d;
    }
    d *= lu(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const Complex f = lu(r, k) / lu(k, k);
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= f * lu(k, c);
    }
  }
  return d;
}

ComplexMatrix inverse(const ComplexMatrix& a, double singular_tol) {
  if (std::abs(det(a)) <= singular_tol) throw DomainError("matrix is singular");
  const std::size_t n = a.order();
  ComplexMatrix m = a;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(m(r, k)) > std::abs(m(piv, k))) piv = r;
    if (piv != k)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(k, c), m(piv, c));
        std::swap(inv(k, c), inv(piv, c));
      }
    const Complex p = m(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      m(k, c) /= p;
      inv(k, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const Complex f = m(r, k);
      if (f == Complex(0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= f * m(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.order();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

ComplexMatrix block_extend(const ComplexMatrix& a) {
  const std::size_t n = a.order();
  ComplexMatrix out(n + 1);
  out(0, 0) = 1.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r + 1, c + 1) = a(r, c);
  return out;
}

double max_entry_modulus(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.order(); ++r)
    for (const auto& z : a.row_span(r)) m = std::max(m, std::abs(z));
  return m;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.order() != b.order()) throw DimensionError("matrix size mismatch");
  double s = 0.0;
  for (std::size_t r = 0; r < a.order(); ++r)
    for (std::size_t c = 0; c < a.order(); ++c) s += std::norm(a(r, c) - b(r, c));
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------

TorusPoint::TorusPoint(double theta1, double theta2)
    : theta1_(normalize_angle(theta1)), theta2_(normalize_angle(theta2)) {}

TorusPoint TorusPoint::shifted(double d1, double d2) const {
  return {theta1_ + d1, theta2_ + d2};
}

ComplexVector TorusPoint::realize() const {
  return {Complex(1.0, 0.0), unit_phase(theta1_), unit_phase(theta2_)};
}

PhaseVector::PhaseVector(std::vector<double> free_angles) : angles_(std::move(free_angles)) {
  if (angles_.size() + 1 > kMaxDim) throw DimensionError("phase vector too long");
}

PhaseVector PhaseVector::from_unimodular(const ComplexVector& x) {
  const double base = std::arg(x[0]);
  std::vector<double> angles;
  angles.reserve(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i)
    angles.push_back(normalize_angle(std::arg(x[i]) - base));
  return PhaseVector(std::move(angles));
}

ComplexVector PhaseVector::realize() const {
  ComplexVector x(dimension());
  x[0] = 1.0;
  for (std::size_t k = 0; k < angles_.size(); ++k) x[k + 1] = unit_phase(angles_[k]);
  return x;
}

}  // namespace unimod
