#include "unimod/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "unimod/errors.hpp"

namespace unimod {

const char* family_name(HadamardFamily f) {
  switch (f) {
    case HadamardFamily::dft: return "dft";
    case HadamardFamily::f4_param: return "f4_param";
    default: return "user";
  }
}

HadamardMatrix dft(std::size_t n) {
  if (n == 0 || n > kMaxDim) throw DimensionError("dft order must be in 1..9");
  ComplexMatrix m(n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = 1; k <= n; ++k)
      m(j - 1, k - 1) = unit_phase(kTwoPi * static_cast<double>(j * k % n) / static_cast<double>(n));
  return {m, HadamardFamily::dft};
}

HadamardMatrix f4_family(double t) {
  const Complex i(0.0, 1.0);
  const Complex u = i * unit_phase(t);
  ComplexMatrix m{{1.0, 1.0, 1.0, 1.0}, {1.0, u, -1.0, -u}, {1.0, -1.0, 1.0, -1.0}, {1.0, -u, -1.0, u}};
  return {m, HadamardFamily::f4_param};
}

HadamardReport is_hadamard(const ComplexMatrix& a, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const std::size_t n = a.order();
  HadamardReport rep;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      rep.modulus_defect = std::max(rep.modulus_defect, std::abs(std::abs(a(r, c)) - 1.0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      rep.orthogonality_defect =
          std::max(rep.orthogonality_defect, std::abs(inner(a.column(j), a.column(k))));
  rep.ok = rep.modulus_defect <= tol && rep.orthogonality_defect <= tol;
  return rep;
}

HadamardMatrix as_hadamard(const ComplexMatrix& a, double tol) {
  const auto rep = is_hadamard(a, tol);
  if (!rep.ok) {
    std::ostringstream os;
    os << "not a complex Hadamard matrix: modulus defect " << rep.modulus_defect
       << ", orthogonality defect " << rep.orthogonality_defect;
    throw DomainError(os.str());
  }
  return {a, HadamardFamily::user};
}

ComplexVector quadratic_phase_vector(std::size_t n) {
  ComplexVector x(n);
  const std::size_t odd = n % 2;
  for (std::size_t k = 1; k <= n; ++k) {
    // Reduce the exponent mod 2n before converting, to keep the angle exact.
    const std::size_t e = (k * (k + odd)) % (2 * n);
    x[k - 1] = unit_phase(kPi * static_cast<double>(e) / static_cast<double>(n));
  }
  return x;
}

double flatness_defect(const ComplexMatrix& h, const ComplexVector& x) {
  const double s = std::sqrt(static_cast<double>(h.order()));
  const ComplexVector y = h.apply(x);
  double d = 0.0;
  for (const auto& z : y.entries()) d = std::max(d, std::abs(std::abs(z) / s - 1.0));
  return d;
}

namespace {

// Levenberg-Marquardt on r_k(phi) = |(H x(phi))_k|^2 / n - 1 over the free
// angles. n residuals, n - 1 unknowns; normal equations are at most 8 x 8.
std::vector<double> refine_flat(const ComplexMatrix& h, std::vector<double> phi,
                                std::size_t max_iter = 200) {
  const std::size_t n = h.order();
  const std::size_t d = n - 1;
  const double inv_n = 1.0 / static_cast<double>(n);
  auto residuals = [&](const std::vector<double>& a, std::vector<double>& r,
                       std::vector<double>* jac) {
    const ComplexVector x = PhaseVector(a).realize();
    const ComplexVector y = h.apply(x);
    double ss = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      r[k] = std::norm(y[k]) * inv_n - 1.0;
      ss += r[k] * r[k];
      if (jac) {
        for (std::size_t j = 0; j < d; ++j) {
          // d y_k / d phi_j = i h_{k,j+1} x_{j+1}
          const Complex dy = Complex(0.0, 1.0) * h(k, j + 1) * x[j + 1];
          (*jac)[k * d + j] = 2.0 * inv_n * (std::conj(y[k]) * dy).real();
        }
      }
    }
    return ss;
  };
  std::vector<double> r(n), jac(n * d), rt(n);
  double cost = residuals(phi, r, &jac);
  double mu = 1e-3;
  std::vector<double> jtj(d * d), jtr(d), step(d), trial(d);
  for (std::size_t it = 0; it < max_iter && cost > 1e-30; ++it) {
    std::fill(jtj.begin(), jtj.end(), 0.0);
    std::fill(jtr.begin(), jtr.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < d; ++a) {
        jtr[a] += jac[k * d + a] * r[k];
        for (std::size_t b = 0; b < d; ++b) jtj[a * d + b] += jac[k * d + a] * jac[k * d + b];
      }
    bool accepted = false;
    for (int tries = 0; tries < 30 && !accepted; ++tries) {
      std::vector<double> m = jtj;
      for (std::size_t a = 0; a < d; ++a) m[a * d + a] += mu * (1.0 + jtj[a * d + a]);
      step = jtr;
      // Gaussian elimination with partial pivoting.
      bool singular = false;
      for (std::size_t k = 0; k < d && !singular; ++k) {
        std::size_t piv = k;
        for (std::size_t q = k + 1; q < d; ++q)
          if (std::abs(m[q * d + k]) > std::abs(m[piv * d + k])) piv = q;
        if (m[piv * d + k] == 0.0) {
          singular = true;
          break;
        }
        for (std::size_t c = 0; c < d; ++c) std::swap(m[k * d + c], m[piv * d + c]);
        std::swap(step[k], step[piv]);
        for (std::size_t q = k + 1; q < d; ++q) {
          const double f = m[q * d + k] / m[k * d + k];
          for (std::size_t c = k; c < d; ++c) m[q * d + c] -= f * m[k * d + c];
          step[q] -= f * step[k];
        }
      }
      if (singular) {
        mu *= 10.0;
        continue;
      }
      for (std::size_t k = d; k-- > 0;) {
        double s = step[k];
        for (std::size_t c = k + 1; c < d; ++c) s -= m[k * d + c] * step[c];
        step[k] = s / m[k * d + k];
      }
      for (std::size_t a = 0; a < d; ++a) trial[a] = phi[a] - step[a];
      const double tc = residuals(trial, rt, nullptr);
      if (tc < cost) {
        phi = trial;
        cost = residuals(phi, r, &jac);
        mu = std::max(mu * 0.3, 1e-12);
        accepted = true;
      } else {
        mu *= 4.0;
      }
    }
    if (!accepted) break;
  }
  for (auto& a : phi) a = normalize_angle(a);
  return phi;
}

}  // namespace

FlatWitness flat_image_witness(const HadamardMatrix& h, const FlatSearchOptions& opts) {
  const ComplexMatrix& m = h.matrix;
  const std::size_t n = m.order();
  FlatWitness best;
  best.defect = kInf;
  if (n == 1) {
    best.witness = PhaseVector(std::vector<double>{});
    best.defect = flatness_defect(m, best.witness.realize());
    best.restarts_used = 1;
    if (best.defect <= opts.tol) return best;
    throw NotFoundError("no flat image for a 1x1 matrix of modulus != 1", best.defect);
  }
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (std::size_t r = 0; r < std::max<std::size_t>(1, opts.restarts); ++r) {
    std::vector<double> start;
    if (r == 0) {
      const auto pv = PhaseVector::from_unimodular(quadratic_phase_vector(n));
      start.assign(pv.free_angles().begin(), pv.free_angles().end());
    } else {
      std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + r);
      start.resize(n - 1);
      for (auto& a : start) a = u(rng);
    }
    PhaseVector cand(start);
    double defect = flatness_defect(m, cand.realize());
    if (defect > 1e-14) {
      PhaseVector refined(refine_flat(m, start));
      const double rd = flatness_defect(m, refined.realize());
      if (rd < defect) cand = refined, defect = rd;
    }
    if (defect < best.defect) {
      best.witness = cand;
      best.defect = defect;
    }
    best.restarts_used = r + 1;
    if (best.defect <= opts.tol) return best;
  }
  throw NotFoundError("flat image search failed", best.defect);
}

}  // namespace unimod
