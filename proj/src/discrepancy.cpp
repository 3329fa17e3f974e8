#include "unimod/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "unimod/branch_bound.hpp"
#include "unimod/config.hpp"
#include "unimod/errors.hpp"
#include "unimod/local_search.hpp"
#include "unimod/phase_sum.hpp"

namespace unimod {

DiscrepancyInstance::DiscrepancyInstance(std::vector<ComplexVector> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n == 0 || n > kMaxDim) throw DimensionError("instance needs 1..9 rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_[i].size() != n)
      throw DimensionError("row " + std::to_string(i) + " has length " +
                           std::to_string(rows_[i].size()) + ", expected " + std::to_string(n));
    if (pnorm(rows_[i], kInf) > 1.0 + 1e-12)
      throw DomainError("row " + std::to_string(i) + " has an entry of modulus above 1");
  }
}

DiscrepancyInstance DiscrepancyInstance::from_matrix(const ComplexMatrix& m) {
  std::vector<ComplexVector> rows;
  for (std::size_t r = 0; r < m.order(); ++r) rows.push_back(m.row(r));
  return DiscrepancyInstance(std::move(rows));
}

ComplexMatrix DiscrepancyInstance::as_matrix() const { return ComplexMatrix::from_rows(rows_); }

namespace {

// <x, a> = sum_k x_k conj(a_k), so the phase-sum coefficients are conj(a).
std::vector<std::vector<Complex>> coefficients(const DiscrepancyInstance& inst) {
  std::vector<std::vector<Complex>> c;
  for (const auto& r : inst.rows()) {
    std::vector<Complex> v(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) v[k] = std::conj(r[k]);
    c.push_back(std::move(v));
  }
  return c;
}

double value_of(const std::vector<std::vector<Complex>>& coef, std::span<const double> phi) {
  double m = 0.0;
  for (const auto& c : coef) m = std::max(m, phase_sum_modulus(c, phi));
  return m;
}

LocalResult local_min(const std::vector<std::vector<Complex>>& coef, std::vector<double> x,
                      double step) {
  Objective f = [&](std::span<const double> phi) { return value_of(coef, phi); };
  return polish(f, std::move(x), step, 4);
}

}  // namespace

double discrepancy_value(const DiscrepancyInstance& inst, std::span<const double> phi) {
  return value_of(coefficients(inst), phi);
}

DiscrepancyResult solve(const DiscrepancyInstance& inst, const DiscrepancyOptions& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("tolerance must be positive");
  const std::size_t n = inst.size();
  const std::size_t d = n - 1;
  const auto coef = coefficients(inst);
  DiscrepancyResult out;

  if (d == 0) {
    out.witness = PhaseVector(std::vector<double>{});
    out.value = std::abs(inst.rows()[0][0]);
    out.certified_lower = out.value;
    out.certified_min_upper = out.value;
    out.certified = true;
    out.evaluations = 1;
    return out;
  }

  std::vector<double> best_x(d, 0.0);
  double best = value_of(coef, best_x);

  if (opts.certify && n <= 3) {
    const CellEvaluator eval = [&coef, d](std::span<const double> c, std::span<const double> h) {
      const std::size_t m = coef.size();
      std::array<double, kMaxDim> v{};
      std::array<double, kMaxDim * kMaxDim> g{};
      double value = 0.0, simple = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const auto cell = analyze_phase_sum(coef[i], c, h);
        value = std::max(value, cell.modulus);
        simple = std::max(simple, cell.lo);
        // Negated affine minorants: max_d min_i (-lower_i(d)) bounds -min max.
        if (cell.lo > 0.0) {
          v[i] = -(cell.modulus - 0.5 * cell.remainder);
          for (std::size_t k = 0; k < d; ++k) g[i * d + k] = -cell.grad[k];
        } else {
          v[i] = -cell.lo;
        }
      }
      const double lp = -maxmin_affine_upper(std::span<const double>(v.data(), m),
                                             std::span<const double>(g.data(), m * d), h);
      return CellBound{value, std::min(value, std::max(simple, lp))};
    };
    const std::vector<double> lo(d, -kPi), hi(d, kPi);
    BranchBoundOptions bo;
    bo.sense = Sense::minimize;
    bo.initial_divisions = 64;
    bo.tol = opts.tol;
    bo.max_active = opts.max_cells;
    const auto res = branch_and_bound(lo, hi, eval, bo);
    out.evaluations += res.evaluations;
    if (res.best < best) best = res.best, best_x = res.argbest;
    const auto p = local_min(coef, best_x, std::max(res.final_half_width, 1e-7));
    out.evaluations += p.evaluations;
    if (p.value < best) best = p.value, best_x = p.x;
    for (auto& t : best_x) t = normalize_angle(t);
    out.value = value_of(coef, best_x);
    out.certified_lower = std::min(res.bound, out.value);
    out.certified_min_upper = out.value;
    out.certified = out.value - *out.certified_lower <= opts.tol;
    out.restarts_used = 1;
    out.witness = PhaseVector(best_x);
    return out;
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  const std::size_t restarts = std::max<std::size_t>(1, opts.restarts);
  for (std::size_t r = 0; r < restarts; ++r) {
    std::vector<double> x(d);
    for (auto& t : x) t = r == 0 ? 0.0 : u(rng);
    const auto p = local_min(coef, x, 0.8);
    out.evaluations += p.evaluations;
    if (p.value < best) best = p.value, best_x = p.x;
  }
  for (auto& t : best_x) t = normalize_angle(t);
  out.value = value_of(coef, best_x);
  out.witness = PhaseVector(best_x);
  out.restarts_used = restarts;
  return out;
}

InstanceCheck check_instance(const DiscrepancyInstance& inst) {
  const std::size_t n = inst.size();
  if (n != 2 && n != 3) throw DimensionError("check_instance covers n = 2 and n = 3");
  const double target = std::sqrt(static_cast<double>(n)) + epsilon();
  InstanceCheck out;
  DiscrepancyOptions opt;
  opt.certify = false;
  opt.restarts = 4;
  auto r = solve(inst, opt);
  if (r.value > target) {
    opt.certify = true;
    opt.tol = epsilon() * 0.1;
    const auto c = solve(inst, opt);
    if (c.value < r.value) r = c;
  }
  out.witness = r.witness;
  out.value = r.value;
  out.ok = r.value <= target;
  if (!out.ok)
    throw TheoremViolation("no unimodular x with max |<x, a_i>| <= sqrt(n) found; best " +
                           std::to_string(r.value));
  return out;
}

double equality_gap(const DiscrepancyInstance& inst, double tol) {
  if (inst.size() > 3) throw DimensionError("equality_gap is certified only for n <= 3");
  DiscrepancyOptions opt;
  opt.tol = tol;
  const auto r = solve(inst, opt);
  return std::sqrt(static_cast<double>(inst.size())) - r.value;
}

}  // namespace unimod
