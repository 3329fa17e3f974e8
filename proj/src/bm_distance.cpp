#include "unimod/bm_distance.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "unimod/config.hpp"
#include "unimod/errors.hpp"
#include "unimod/hadamard.hpp"
#include "unimod/local_search.hpp"
#include "unimod/parallel.hpp"

namespace unimod {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> to_params(const ComplexMatrix& a) {
  std::vector<double> x;
  for (std::size_t r = 0; r < a.order(); ++r)
    for (const auto& z : a.row_span(r)) x.push_back(z.real()), x.push_back(z.imag());
  return x;
}

ComplexMatrix from_params(std::span<const double> x, std::size_t n) {
  ComplexMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = Complex(x[2 * (r * n + c)], x[2 * (r * n + c) + 1]);
  return a;
}

// Sampled ||A||_{inf->1}: a uniform grid on the torus, then a local search
// from every grid local maximum so that no peak is skipped. A lower
// estimate, n <= 3.
double sampled_inf_to_1(const ComplexMatrix& a) {
  const std::size_t n = a.order();
  if (n == 1) return std::abs(a(0, 0));
  if (n > 3) throw DimensionError("sampled estimate is for n <= 3");
  const std::size_t per = n == 2 ? 32 : 20;
  const double step = kTwoPi / static_cast<double>(per);
  auto angle = [&](std::size_t i) { return -kPi + step * static_cast<double>(i); };
  double best = 0.0;
  if (n == 2) {
    std::vector<double> v(per);
    for (std::size_t i = 0; i < per; ++i) {
      const double t[1] = {angle(i)};
      v[i] = l1_image(a, t);
    }
    auto f = [&a](double t) {
      const double x[1] = {t};
      return -l1_image(a, x);
    };
    for (std::size_t i = 0; i < per; ++i) {
      best = std::max(best, v[i]);
      if (v[i] < v[(i + per - 1) % per] || v[i] < v[(i + 1) % per]) continue;
      const double t = golden_section(f, angle(i) - step, angle(i) + step, 1e-10, 80);
      best = std::max(best, -f(t));
    }
    return best;
  }
  std::vector<double> v(per * per);
  for (std::size_t i = 0; i < per; ++i)
    for (std::size_t j = 0; j < per; ++j) {
      const double t[2] = {angle(i), angle(j)};
      v[i * per + j] = l1_image(a, t);
    }
  const Objective neg = [&a](std::span<const double> t) { return -l1_image(a, t); };
  for (std::size_t i = 0; i < per; ++i)
    for (std::size_t j = 0; j < per; ++j) {
      const double c = v[i * per + j];
      best = std::max(best, c);
      bool peak = true;
      for (std::size_t di = 0; di < 3 && peak; ++di)
        for (std::size_t dj = 0; dj < 3; ++dj) {
          if (di == 1 && dj == 1) continue;
          if (v[((i + per + di - 1) % per) * per + (j + per + dj - 1) % per] > c) {
            peak = false;
            break;
          }
        }
      if (!peak) continue;
      const auto r = coordinate_descent(neg, {angle(i), angle(j)}, step, 12, 0.25, 1e-9);
      best = std::max(best, -r.value);
    }
  return best;
}

double certified_upper(const ComplexMatrix& a) {
  InfToOneOptions o;
  o.tol = 1e-7;
  return norm_inf_to_1_certified(a, o).upper;
}

ComplexMatrix safe_inverse(const ComplexMatrix& a) { return inverse(a, 1e-12); }

double product_estimate(std::span<const double> x, std::size_t n) {
  const ComplexMatrix a = from_params(x, n);
  const double f = norm_1_to_inf(a);
  if (!(f > 0.0) || std::abs(det(a)) <= 1e-10 * std::pow(f, static_cast<double>(n))) return 1e6;
  return f * sampled_inf_to_1(safe_inverse(a));
}

struct Candidate {
  double value = kInf;
  ComplexMatrix matrix{1};
};

Candidate certify_product(const ComplexMatrix& a) {
  Candidate c;
  c.matrix = a;
  const double f = norm_1_to_inf(a);
  if (!(f > 0.0) || std::abs(det(a)) <= 1e-12) return c;
  const double s = 1.0 / f;  // normalize ||A||_{1->inf} to 1
  c.matrix = a.scaled(s);
  c.value = certified_upper(safe_inverse(c.matrix));
  return c;
}

Candidate descend_product(const ComplexMatrix& start) {
  const std::size_t n = start.order();
  const Objective f = [n](std::span<const double> x) { return product_estimate(x, n); };
  const auto x0 = to_params(start.scaled(1.0 / std::max(norm_1_to_inf(start), 1e-300)));
  const auto r = nelder_mead(f, x0, 0.15, n == 2 ? 600 : 1500, 1e-12);
  Candidate end = certify_product(from_params(r.x, n));
  const Candidate begin = certify_product(start);
  return begin.value <= end.value ? begin : end;
}

void check_product_floor(double value, std::size_t n) {
  if (value < std::sqrt(static_cast<double>(n)) - 1e-4)
    throw TheoremViolation("product " + std::to_string(value) + " below sqrt(n)");
}

}  // namespace

DistanceCertificate lp_upper_bound(std::size_t n, const LpPair& pair) {
  if (!(pair.q >= 1.0 && pair.q <= 2.0 && pair.p >= 2.0))
    throw DomainError("interpolation bound needs 1 <= q <= 2 <= p");
  DistanceCertificate c;
  c.n = n;
  c.pair = pair;
  c.upper = std::pow(static_cast<double>(n), pair.alpha());
  c.transporter = dft(n).matrix;
  if (n <= 4) {
    const ComplexMatrix inv = safe_inverse(c.transporter);
    double forward = 0.0, backward = 0.0;
    if (std::isinf(pair.p) && pair.q == 1.0) {
      forward = norm_1_to_inf(c.transporter);
      backward = norm_inf_to_1_certified(inv).lower;
    } else {
      forward = norm_q_to_p_lower(c.transporter, pair, 16).value;
      backward = norm_q_to_p_lower(inv, LpPair{pair.q, pair.p}, 16).value;
    }
    c.lower_evidence = forward * backward;
    if (c.lower_evidence > c.upper + 1e-5)
      throw TheoremViolation("transporter norms exceed the interpolation bound");
  } else {
    c.lower_evidence = std::nan("");
  }
  return c;
}

ProductCertificate product_certificate(const ComplexMatrix& a, const LpPair& pair) {
  if (std::abs(det(a)) <= 1e-12) throw DomainError("matrix is singular");
  const ComplexMatrix inv = safe_inverse(a);
  ProductCertificate pc;
  if (std::isinf(pair.p) && pair.q == 1.0) {
    pc.forward = norm_1_to_inf(a);
    pc.inverse = certified_upper(inv);
    pc.certified = a.order() <= InfToOneOptions{}.certify_max_order;
  } else {
    pc.forward = norm_q_to_p_lower(a, pair, 16).value;
    pc.inverse = norm_q_to_p_lower(inv, LpPair{pair.q, pair.p}, 16).value;
  }
  pc.value = pc.forward * pc.inverse;
  return pc;
}

ProductSearch minimize_product_l1_linf(std::size_t n, std::size_t restarts, std::uint64_t seed) {
  if (n != 2 && n != 3) throw DomainError("product search is implemented for n = 2, 3");
  std::vector<Candidate> found(restarts);
  parallel_for(restarts, [&](std::size_t r) {
    std::mt19937_64 rng(mix_seed(seed, r));
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix a(n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    } while (std::abs(det(a)) < 1e-3);
    found[r] = descend_product(a);
  }, 1);
  ProductSearch out;
  out.value = kInf;
  out.restarts = restarts;
  for (const auto& c : found)
    if (c.value < out.value) out.value = c.value, out.matrix = c.matrix;
  check_product_floor(out.value, n);
  return out;
}

ProductSearch minimize_product_l1_linf_from(const ComplexMatrix& start) {
  const std::size_t n = start.order();
  if (n != 2 && n != 3) throw DomainError("product search is implemented for n = 2, 3");
  if (std::abs(det(start)) <= 1e-12) throw DomainError("start matrix is singular");
  const Candidate c = descend_product(start);
  check_product_floor(c.value, n);
  return {c.value, c.matrix, 1};
}

VolumeCheck volume_lemma_check(const ComplexMatrix& a) {
  if (a.order() != 2) throw DimensionError("volume lemma is about 2 x 2 matrices");
  VolumeCheck v;
  v.norm_lower = norm_inf_to_1_certified(a).lower;
  v.rhs = 2.0 * std::sqrt(std::abs(det(a)));
  v.ok = v.norm_lower >= v.rhs * (1.0 - epsilon());
  return v;
}

ComplexMatrix counterexample_matrix(std::size_t n) {
  if (n < 3) throw DomainError("no counterexample exists below n = 3");
  using C = Complex;
  ComplexMatrix a{{C(-0.3857, -0.5131), C(0.1795, -0.5142), C(0.0675, -0.5393)},
                  {C(-0.0179, -0.6519), C(-0.6798, 0.2941), C(0.0611, 0.1143)},
                  {C(-0.3182, -0.2582), C(0.2765, -0.2900), C(-0.1519, 0.8092)}};
  for (std::size_t k = 3; k < n; ++k) a = block_extend(a);
  return a;
}

CounterexampleReport counterexample_report(std::size_t n) {
  CounterexampleReport rep;
  rep.matrix = counterexample_matrix(n);
  rep.det_modulus = std::abs(det(rep.matrix));
  InfToOneOptions o;
  o.tol = 1e-7;
  if (n <= o.certify_max_order) {
    const auto b = norm_inf_to_1_certified(rep.matrix, o);
    rep.norm_lower = b.lower;
    rep.norm_upper = b.upper;
    rep.method = "branch_and_bound";
  } else {
    // ||diag(1, B) x||_1 = |x_0| + ||B x'||_1, maximized independently.
    const auto b = norm_inf_to_1_certified(counterexample_matrix(3), o);
    const double extra = static_cast<double>(n - 3);
    rep.norm_lower = b.lower + extra;
    rep.norm_upper = b.upper + extra;
    rep.method = "block_additivity";
  }
  rep.rhs = static_cast<double>(n) * std::pow(rep.det_modulus, 1.0 / static_cast<double>(n));
  rep.margin = rep.rhs - rep.norm_upper;
  return rep;
}

namespace {

struct RatioDescent {
  ComplexMatrix matrix{3};
  double estimate = kInf;
  std::size_t evaluations = 0;
};

RatioDescent descend_ratio(const ComplexMatrix& a, std::size_t budget) {
  RatioDescent out;
  const Objective f = [&out](std::span<const double> x) {
    ++out.evaluations;
    const ComplexMatrix m = from_params(x, 3);
    const double d = std::abs(det(m));
    if (!(d > 1e-12)) return 1e6;
    return sampled_inf_to_1(m) / std::cbrt(d);
  };
  std::vector<double> x = to_params(a.scaled(1.0 / std::cbrt(std::max(std::abs(det(a)), 1e-300))));
  double fx = f(x);
  double step = 0.2;
  while (out.evaluations < budget) {
    const auto r = nelder_mead(f, x, step, std::min<std::size_t>(2000, budget - out.evaluations), 1e-12);
    if (r.value < fx - 1e-10) {
      x = r.x;
      fx = r.value;
    } else {
      step *= 0.5;
      if (step < 1e-6) break;
    }
  }
  out.matrix = from_params(x, 3);
  out.matrix = out.matrix.scaled(1.0 / std::cbrt(std::abs(det(out.matrix))));
  out.estimate = fx;
  return out;
}

double certified_ratio(const ComplexMatrix& m) {
  return certified_upper(m) / std::cbrt(std::abs(det(m)));
}

}  // namespace

CounterexampleSearch search_counterexample(std::uint64_t seed, std::size_t iterations,
                                           const std::optional<ComplexMatrix>& start) {
  if (start && start->order() != 3) throw DimensionError("counterexample search runs on 3 x 3 matrices");
  if (start && !(std::abs(det(*start)) > 1e-12)) throw DomainError("start matrix is singular");
  // Random starts mostly fall into the basin of ratio 3 (Fourier-like
  // matrices), so the budget is spread over several short descents.
  constexpr std::size_t kDescentBudget = 3000;
  CounterexampleSearch out;
  out.ratio = kInf;
  auto consider = [&out](const ComplexMatrix& m, double estimate) {
    const double r = certified_ratio(m);
    if (r < out.ratio) out.matrix = m, out.ratio = r, out.estimated_ratio = estimate;
  };
  if (start) {
    const ComplexMatrix s0 = start->scaled(1.0 / std::cbrt(std::abs(det(*start))));
    consider(s0, certified_ratio(s0));
  }
  for (std::uint64_t k = 0; out.evaluations < std::max<std::size_t>(iterations, 1); ++k) {
    ComplexMatrix a(3);
    if (k == 0 && start) {
      a = *start;
    } else {
      std::mt19937_64 rng(mix_seed(seed, k));
      std::normal_distribution<double> g(0.0, 1.0);
      do {
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) a(i, j) = Complex(g(rng), g(rng));
      } while (std::abs(det(a)) < 1e-3);
    }
    const std::size_t budget = std::min(kDescentBudget, std::max<std::size_t>(iterations - std::min(iterations, out.evaluations), 1));
    const auto d = descend_ratio(a, budget);
    out.evaluations += d.evaluations;
    consider(d.matrix, d.estimate);
  }
  out.success = out.ratio < 3.0 - 1e-4;
  return out;
}

}  // namespace unimod
