#include "unimod/torus.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <random>
#include <regex>
#include <set>

#include "unimod/branch_bound.hpp"
#include "unimod/config.hpp"
#include "unimod/discrepancy.hpp"
#include "unimod/errors.hpp"
#include "unimod/local_search.hpp"
#include "unimod/parallel.hpp"
#include "unimod/phase_sum.hpp"

namespace unimod {

namespace {

int wrap3(int v) { return ((v + 1) % 3 + 3) % 3 - 1; }

Complex omega_pow(int k) { return unit_phase(kTwoPi * static_cast<double>(((k % 3) + 3) % 3) / 3.0); }

std::vector<int> min_modulus_slots(const ComplexVector& a) {
  double m = kInf;
  for (const auto& z : a.entries()) m = std::min(m, std::abs(z));
  std::vector<int> t;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i]) <= m + 1e-12) t.push_back(static_cast<int>(i) + 1);
  return t;
}

}  // namespace

ToricCenter::ToricCenter(ComplexVector a) : a_(std::move(a)) {
  if (a_.size() != 3) throw DimensionError("toric centers live in C^3");
  if (pnorm(a_, kInf) > 1.0 + 1e-12) throw DomainError("toric center needs ||a||_inf <= 1");
  types_ = min_modulus_slots(a_);
}

double toric_value(const ComplexVector& a, const TorusPoint& p) {
  return std::abs(inner(a, p.realize()));
}

Membership toric_membership(const ToricCenter& a, const TorusPoint& p, bool closed) {
  Membership m;
  m.value = toric_value(a.center(), p);
  m.margin = m.value - kToricThreshold;
  m.inside = closed ? m.margin >= -epsilon() : m.margin > epsilon();
  return m;
}

// ---------------------------------------------------------------------------

int grid_index(GridPoint p) { return (p.j + 1) * 3 + (p.k + 1); }

GridPoint grid_point(int index) {
  if (index < 0 || index > 8) throw DomainError("grid index must be in 0..8");
  return {index / 3 - 1, index % 3 - 1};
}

TorusPoint grid_torus_point(GridPoint p) {
  return {kTwoPi * p.j / 3.0, kTwoPi * p.k / 3.0};
}

ComplexVector grid_vector(GridPoint p) { return {Complex(1.0, 0.0), omega_pow(p.j), omega_pow(p.k)}; }

GridSubset GridSubset::from_points(const std::vector<GridPoint>& pts) {
  GridSubset s;
  for (const auto& p : pts) {
    if (std::abs(p.j) > 1 || std::abs(p.k) > 1) throw DomainError("grid coordinates must be -1, 0 or 1");
    s.mask |= static_cast<std::uint16_t>(1U << grid_index(p));
  }
  return s;
}

std::vector<GridPoint> GridSubset::points() const {
  std::vector<GridPoint> out;
  for (int i = 0; i < 9; ++i)
    if ((mask >> i) & 1U) out.push_back(grid_point(i));
  return out;
}

int GridSubset::size() const { return std::popcount(static_cast<unsigned>(mask)); }

GridSubset parse_subset(const std::string& text) {
  static const std::regex binary(R"(\s*0[bB]([01]{1,9})\s*)");
  static const std::regex decimal(R"(\s*(\d+)\s*)");
  static const std::regex pair(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  std::smatch m;
  GridSubset s;
  if (std::regex_match(text, m, binary)) {
    s.mask = static_cast<std::uint16_t>(std::stoul(m[1].str(), nullptr, 2));
    return s;
  }
  if (std::regex_match(text, m, decimal)) {
    const unsigned long v = std::stoul(m[1].str());
    if (v >= 512) throw DomainError("subset mask must be below 512");
    s.mask = static_cast<std::uint16_t>(v);
    return s;
  }
  std::vector<GridPoint> pts;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pair); it != std::sregex_iterator(); ++it)
    pts.push_back({std::stoi((*it)[1].str()), std::stoi((*it)[2].str())});
  if (pts.empty()) throw DomainError("cannot parse grid subset '" + text + "'");
  return GridSubset::from_points(pts);
}

std::string format_subset(GridSubset s) {
  std::string out = "0b";
  for (int i = 8; i >= 0; --i) out += ((s.mask >> i) & 1U) ? '1' : '0';
  return out;
}

GridSubset transform_subset(GridSubset s, int tau) {
  if (tau < 1 || tau > 6) throw DomainError("transformation index must be in 1..6");
  std::vector<GridPoint> out;
  for (const auto& p : s.points()) {
    const int j = p.j, k = p.k;
    GridPoint q;
    switch (tau) {
      case 1: q = {j + 1, k}; break;
      case 2: q = {j, k + 1}; break;
      case 3: q = {k, j}; break;
      case 4: q = {-j, -k}; break;
      case 5: q = {-j, k - j}; break;
      default: q = {j - k, -k}; break;
    }
    out.push_back({wrap3(q.j), wrap3(q.k)});
  }
  return GridSubset::from_points(out);
}

namespace {

std::vector<GridSubset> orbit_of(GridSubset start) {
  std::set<std::uint16_t> seen{start.mask};
  std::queue<GridSubset> q;
  q.push(start);
  while (!q.empty()) {
    const GridSubset s = q.front();
    q.pop();
    for (int tau = 1; tau <= 6; ++tau) {
      const GridSubset t = transform_subset(s, tau);
      if (seen.insert(t.mask).second) q.push(t);
    }
  }
  std::vector<GridSubset> out;
  for (auto m : seen) out.push_back(GridSubset{m});
  return out;
}

constexpr std::uint16_t kSquareMask = 0b000011011;  // (-1,-1), (-1,0), (0,-1), (0,0)

bool has_line(GridSubset s, bool anti_diagonal) {
  auto full = [&](auto pred) {
    int n = 0;
    for (int i = 0; i < 9; ++i) {
      const GridPoint p = grid_point(i);
      if (pred(p) && !s.contains(p)) return false;
      n += pred(p);
    }
    return n == 3;
  };
  for (int c = -1; c <= 1; ++c) {
    if (anti_diagonal) {
      if (full([c](GridPoint p) { return wrap3(p.j + p.k) == c; })) return true;
    } else {
      if (full([c](GridPoint p) { return p.j == c; })) return true;
      if (full([c](GridPoint p) { return p.k == c; })) return true;
      if (full([c](GridPoint p) { return wrap3(p.j - p.k) == c; })) return true;
    }
  }
  return false;
}

}  // namespace

int classify_subset(GridSubset s) {
  if (s.size() != 4) throw DomainError("classes are defined for 4-element subsets");
  if (has_line(s, true)) return 2;
  if (has_line(s, false)) return 3;
  static const std::vector<GridSubset> square = orbit_of(GridSubset{kSquareMask});
  if (std::binary_search(square.begin(), square.end(), s,
                         [](GridSubset a, GridSubset b) { return a.mask < b.mask; }))
    return 1;
  return 4;
}

std::vector<Orbit> enumerate_orbits() {
  std::vector<bool> visited(512, false);
  std::vector<Orbit> out;
  for (unsigned m = 0; m < 512; ++m) {
    if (std::popcount(m) != 4 || visited[m]) continue;
    Orbit o;
    o.members = orbit_of(GridSubset{static_cast<std::uint16_t>(m)});
    for (const auto& s : o.members) visited[s.mask] = true;
    o.canonical = o.members.front();
    o.label = classify_subset(o.canonical);
    out.push_back(std::move(o));
  }
  return out;
}

ObstructionReport check_grid_obstructions() {
  ObstructionReport rep;
  std::vector<bool> class1(512, false);
  std::vector<std::uint16_t> ones;
  for (unsigned m = 0; m < 512; ++m)
    if (std::popcount(m) == 4 && classify_subset(GridSubset{static_cast<std::uint16_t>(m)}) == 1) {
      class1[m] = true;
      ones.push_back(static_cast<std::uint16_t>(m));
    }
  for (std::size_t a = 0; a < ones.size(); ++a)
    for (std::size_t b = a + 1; b < ones.size(); ++b) {
      ++rep.class1_pairs;
      if ((ones[a] & ones[b]) == 0) ++rep.class1_disjoint_pairs;
    }
  auto all_class1 = [&](unsigned m5) {
    for (int i = 0; i < 9; ++i)
      if (((m5 >> i) & 1U) && !class1[m5 & ~(1U << i)]) return false;
    return true;
  };
  for (unsigned m = 0; m < 512; ++m) {
    if (std::popcount(m) != 5) continue;
    ++rep.five_subsets;
    if (all_class1(m)) ++rep.five_subsets_all_class1;
  }
  for (int i = 0; i < 9; ++i) {
    if ((kSquareMask >> i) & 1U) continue;
    ++rep.square_extensions;
    if (all_class1(kSquareMask | (1U << i))) ++rep.square_extensions_all_class1;
  }
  return rep;
}

// ---------------------------------------------------------------------------

ComplexVector blob_expand(const ComplexVector& a) {
  const double m = pnorm(a, kInf);
  if (m == 0.0) throw DomainError("blob_expand needs a nonzero vector");
  ComplexVector v = a.scaled(1.0 / m);
  if (v.size() < 2) return v;
  std::vector<std::size_t> order(v.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return std::abs(v[x]) < std::abs(v[y]); });
  // Lift every coordinate but the smallest; for C^3 that is the middle one
  // (the largest already has modulus 1).
  for (std::size_t r = 1; r < order.size(); ++r) {
    Complex& z = v[order[r]];
    const double mz = std::abs(z);
    z = mz > 0.0 ? z / mz : Complex(1.0, 0.0);
  }
  // The largest coordinate is exactly unimodular up to rounding; restore it.
  v[order.back()] = a[order.back()] / std::abs(a[order.back()]);
  return v;
}

namespace {

Complex placement_u(double b) { return unit_phase(std::acos(b / 2.0) - kPi / 3.0); }

int count_open_grid_points(const ComplexVector& v) {
  int n = 0;
  for (int i = 0; i < 9; ++i)
    if (std::norm(inner(v, grid_vector(grid_point(i)))) > 3.0 + epsilon()) ++n;
  return n;
}

}  // namespace

GridMultiplier grid_multiplier(const ComplexVector& a) {
  if (a.size() != 3) throw DimensionError("grid_multiplier works in C^3");
  const ComplexVector w = blob_expand(a);
  std::size_t p = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(w[i]) < std::abs(w[p])) p = i;
  std::size_t o1 = p == 0 ? 1 : 0;
  std::size_t o2 = 3 - p - o1;
  const double b = std::min(1.0, std::abs(w[p]));
  const Complex u = placement_u(b);
  GridMultiplier gm;
  gm.x[p] = b > 0.0 ? std::conj(w[p]) / std::abs(w[p]) : Complex(1.0, 0.0);
  gm.x[o1] = u * std::conj(w[o1]);
  gm.x[o2] = std::conj(u) * std::conj(w[o2]);
  for (auto& z : gm.x) z /= std::abs(z);
  ComplexVector v(3);
  for (std::size_t i = 0; i < 3; ++i) v[i] = a[i] * gm.x[i];
  gm.contained_points = count_open_grid_points(v);
  return gm;
}

std::array<double, 5> grid_placement_case_values(double b) {
  if (!(b >= 0.0 && b <= 1.0)) throw DomainError("b must lie in [0, 1]");
  const Complex u = placement_u(b);
  const int cases[5][2] = {{1, 2}, {1, 0}, {2, 0}, {1, 1}, {2, 2}};
  std::array<double, 5> out{};
  for (int c = 0; c < 5; ++c) {
    const Complex wk = omega_pow(cases[c][0]), wl = omega_pow(cases[c][1]);
    out[c] = b * b + 2.0 * b * (u * (wk + wl)).real() + 2.0 * (u * u * wk * wl).real();
  }
  return out;
}

std::array<double, 5> grid_placement_closed_forms(double b) {
  return {1.0, 3.0 * b * b - 2.0, 1.0, 1.5 * b * (b - std::sqrt(12.0 - 3.0 * b * b)) + 1.0, -2.0};
}

// ---------------------------------------------------------------------------

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::coverable: return "coverable";
    case Verdict::not_coverable: return "not_coverable";
    default: return "inconclusive";
  }
}

double coverage_value(const ComplexVector& a, GridSubset s) {
  double m = kInf;
  for (const auto& p : s.points()) m = std::min(m, std::norm(inner(a, grid_vector(p))));
  return m;
}

namespace {

// Center of family f: slot f holds b >= 0, the other two slots e^{i alpha},
// e^{i beta} in increasing slot order.
ComplexVector family_center(int f, double b, double alpha, double beta) {
  ComplexVector a(3);
  const int o1 = f == 0 ? 1 : 0;
  const int o2 = 3 - f - o1;
  a[f] = std::clamp(b, 0.0, 1.0);
  a[o1] = unit_phase(alpha);
  a[o2] = unit_phase(beta);
  return a;
}

struct FamilyTerms {
  // Per subset point: z = b w0 + w1 e^{i alpha} + w2 e^{i beta}.
  std::vector<std::array<Complex, 3>> w;
};

FamilyTerms family_terms(int f, GridSubset s) {
  const int o1 = f == 0 ? 1 : 0;
  const int o2 = 3 - f - o1;
  FamilyTerms t;
  for (const auto& p : s.points()) {
    const ComplexVector x = grid_vector(p);
    t.w.push_back({std::conj(x[f]), std::conj(x[o1]), std::conj(x[o2])});
  }
  return t;
}

CellBound family_cell(const FamilyTerms& t, std::span<const double> c, std::span<const double> h) {
  const double b = c[0];
  const Complex ea(std::cos(c[1]), std::sin(c[1])), eb(std::cos(c[2]), std::sin(c[2]));
  const std::size_t m = t.w.size();
  const double bmax = std::min(1.0, b + h[0]);
  // Bounds on |second derivatives| of q: b-b 2, b-angle 2, angle-angle 2,
  // same angle twice 2 b + 2.
  const double quad = 0.5 * (2.0 * h[0] * h[0] + (2.0 * bmax + 2.0) * (h[1] * h[1] + h[2] * h[2]) +
                             4.0 * (h[0] * h[1] + h[0] * h[2] + h[1] * h[2]));
  const double lip = h[0] + h[1] + h[2];
  std::array<double, 9> v{};
  std::array<double, 27> g{};
  double value = kInf, simple = kInf;
  for (std::size_t s = 0; s < m; ++s) {
    const Complex t1 = t.w[s][1] * ea, t2 = t.w[s][2] * eb;
    const Complex z = b * t.w[s][0] + t1 + t2;
    const double q = std::norm(z);
    value = std::min(value, q);
    const double mz = std::sqrt(q) + lip;
    simple = std::min(simple, mz * mz);
    const Complex zc = std::conj(z);
    g[s * 3 + 0] = 2.0 * (zc * t.w[s][0]).real();
    g[s * 3 + 1] = 2.0 * (zc * Complex(-t1.imag(), t1.real())).real();
    g[s * 3 + 2] = 2.0 * (zc * Complex(-t2.imag(), t2.real())).real();
    v[s] = q + quad;
  }
  const double lp = maxmin_affine_upper(std::span<const double>(v.data(), m),
                                        std::span<const double>(g.data(), m * 3), h);
  const double bound = std::min(simple, lp) * (1.0 + 1e-13) + 1e-13;
  return {value, std::max(bound, value)};
}

}  // namespace

CoverageVerdict coverability(GridSubset s, const CoverageOptions& opts) {
  if (s.size() < 1 || s.size() > 9) throw DomainError("subset must hold 1..9 grid points");
  if (!(opts.margin > 0.0)) throw DomainError("margin must be positive");
  const double threshold = 3.0 + opts.margin;
  CoverageVerdict out;
  double sup = -kInf;
  bool all_exhausted = true;
  for (int f = 0; f < 3; ++f) {
    const FamilyTerms terms = family_terms(f, s);
    const CellEvaluator eval = [&terms](std::span<const double> c, std::span<const double> h) {
      return family_cell(terms, c, h);
    };
    const double lo[3] = {0.0, -kPi, -kPi}, hi[3] = {1.0, kPi, kPi};
    BranchBoundOptions bo;
    bo.sense = Sense::maximize;
    bo.initial_divisions = 32;
    bo.tol = opts.margin;
    bo.decision_threshold = threshold;
    bo.stop_value = threshold;
    bo.max_active = opts.max_cells;
    const auto res = branch_and_bound(lo, hi, eval, bo);
    out.evaluations += res.evaluations;
    out.family_bounds[f] = res.bound;

    if (res.best > threshold) {
      // Push the witness away from the boundary band.
      Objective neg = [&](std::span<const double> x) {
        return -coverage_value(family_center(f, x[0], x[1], x[2]), s);
      };
      auto p = polish(neg, res.argbest, 0.05, 4);
      std::vector<double> arg = res.argbest;
      if (-p.value > res.best) arg = p.x;
      const ComplexVector a = family_center(f, arg[0], normalize_angle(arg[1]), normalize_angle(arg[2]));
      out.verdict = Verdict::coverable;
      out.witness_center = ToricCenter(a);
      out.witness_value = coverage_value(a, s);
      for (int r = f + 1; r < 3; ++r) out.family_bounds[r] = std::nan("");
      return out;
    }
    out.witness_value = std::max(out.witness_value, res.best);
    sup = std::max(sup, res.bound);
    all_exhausted = all_exhausted && res.exhausted;
  }
  out.certified_sup = sup;
  out.verdict = all_exhausted && sup <= threshold ? Verdict::not_coverable : Verdict::inconclusive;
  return out;
}

// ---------------------------------------------------------------------------

UncoveredWitness uncovered_witness(const ComplexVector& a1, const ComplexVector& a2,
                                   const ComplexVector& a3) {
  const std::array<const ComplexVector*, 3> rows{&a1, &a2, &a3};
  for (const auto* r : rows) {
    if (r->size() != 3) throw DimensionError("uncovered_witness works in C^3");
    if (pnorm(*r, kInf) > 1.0 + 1e-12) throw DomainError("centers need ||a||_inf <= 1");
  }
  UncoveredWitness out;
  const bool degenerate = pnorm(a3, kInf) == 0.0;
  if (!degenerate) {
    const auto gm = grid_multiplier(a3);
    double best = kInf;
    int best_idx = -1;
    for (int i = 0; i < 9; ++i) {
      const ComplexVector g = grid_vector(grid_point(i));
      // |<a o x, g>| = |<a, conj(x) o g>|
      ComplexVector y(3);
      for (std::size_t m = 0; m < 3; ++m) y[m] = std::conj(gm.x[m]) * g[m];
      double v = 0.0;
      for (const auto* r : rows) v = std::max(v, std::abs(inner(*r, y)));
      if (v < best) best = v, best_idx = i;
    }
    if (best * best <= 3.0 + epsilon()) {
      const ComplexVector g = grid_vector(grid_point(best_idx));
      ComplexVector y(3);
      for (std::size_t m = 0; m < 3; ++m) y[m] = std::conj(gm.x[m]) * g[m];
      out.point = TorusPoint(std::arg(y[1] / y[0]), std::arg(y[2] / y[0]));
      double v = 0.0;
      for (const auto* r : rows) v = std::max(v, toric_value(*r, out.point));
      out.value = v;
      out.from_grid = true;
      return out;
    }
  }
  const auto res = solve(DiscrepancyInstance({a1, a2, a3}));
  const auto ang = res.witness.free_angles();
  out.point = TorusPoint(ang[0], ang[1]);
  double v = 0.0;
  for (const auto* r : rows) v = std::max(v, toric_value(*r, out.point));
  out.value = v;
  out.from_grid = false;
  return out;
}

TrigLemmaReport verify_trig_lemma(std::size_t resolution) {
  if (resolution < 50) throw DomainError("trig lemma sweep needs resolution >= 50");
  const std::size_t nb = resolution, nr = resolution, ng = 2 * resolution;
  const std::size_t nr_lo = nr / 2, nr_hi = nr - nr_lo;
  std::vector<double> rs;
  for (std::size_t i = 0; i < nr_lo; ++i) rs.push_back(-1.0 + 0.5 * static_cast<double>(i) / static_cast<double>(nr_lo - 1));
  for (std::size_t i = 0; i < nr_hi; ++i) rs.push_back(0.5 + 0.5 * static_cast<double>(i) / static_cast<double>(nr_hi - 1));
  std::vector<double> xs(ng), ys(ng);
  for (std::size_t g = 0; g < ng; ++g) {
    const double gamma = kTwoPi * static_cast<double>(g) / static_cast<double>(ng);
    xs[g] = std::cos(gamma);
    ys[g] = std::cos(gamma - kTwoPi / 3.0);
  }
  const double eps = epsilon();
  std::vector<TrigLemmaReport> part(nb);
  parallel_for(nb, [&](std::size_t ib) {
    TrigLemmaReport& rep = part[ib];
    const double b = static_cast<double>(ib) / static_cast<double>(nb - 1);
    for (double r : rs)
      for (std::size_t g = 0; g < ng; ++g) {
        ++rep.checked;
        const double x = xs[g], y = ys[g];
        if (!(x * y < 0.0)) continue;
        ++rep.opposite_sign;
        const double q1 = 4 * x * x + 4 * b * r * x + b * b;
        const double q2 = 4 * y * y + 4 * b * r * y + b * b;
        const double mq = std::min(q1, q2);
        rep.max_min_excess = std::max(rep.max_min_excess, mq - 3.0);
        if (mq > 3.0 + eps) ++rep.violations;
        else if (mq > 3.0 - eps) ++rep.near_boundary;
      }
  }, 1);
  TrigLemmaReport total;
  total.resolution = resolution;
  for (const auto& p : part) {
    total.checked += p.checked;
    total.opposite_sign += p.opposite_sign;
    total.violations += p.violations;
    total.near_boundary += p.near_boundary;
    total.max_min_excess = std::max(total.max_min_excess, p.max_min_excess);
  }
  if (total.violations > 0)
    throw TheoremViolation("trigonometric lemma violated at " + std::to_string(total.violations) +
                           " sweep points");
  return total;
}

LineLemmaReport verify_line_lemma(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto disk = [&]() {
    while (true) {
      const double x = u(rng), y = u(rng);
      if (x * x + y * y <= 1.0) return Complex(x, y);
    }
  };
  LineLemmaReport rep;
  rep.max_value = -kInf;
  for (std::size_t s = 0; s < samples; ++s) {
    const Complex a1 = disk(), a3 = disk();
    const Complex a2 = unit_phase(kPi * u(rng));
    double mn = kInf;
    for (int k = 0; k < 3; ++k) mn = std::min(mn, std::norm(a1 + a2 * std::conj(omega_pow(k)) + a3));
    rep.max_value = std::max(rep.max_value, mn);
    if (mn > 3.0 + 1e-12) ++rep.violations;
    ++rep.samples;
  }
  if (rep.violations > 0)
    throw TheoremViolation("line lemma violated on " + std::to_string(rep.violations) + " samples");
  return rep;
}

GridPlacementReport verify_grid_placement(std::size_t b_values, std::size_t random_centers,
                                          std::uint64_t seed) {
  GridPlacementReport rep;
  for (std::size_t i = 0; i < b_values; ++i) {
    const double b = b_values == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(b_values - 1);
    const auto num = grid_placement_case_values(b);
    const auto ref = grid_placement_closed_forms(b);
    for (int c = 0; c < 5; ++c) {
      rep.max_formula_error = std::max(rep.max_formula_error, std::abs(num[c] - ref[c]));
      rep.max_case_value = std::max(rep.max_case_value, num[c]);
    }
    ++rep.b_values;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t s = 0; s < random_centers; ++s) {
    ComplexVector a(3);
    for (std::size_t k = 0; k < 3; ++k) {
      Complex z;
      do z = Complex(u(rng), u(rng));
      while (std::norm(z) > 1.0);
      a[k] = z;
    }
    // Every third sample is already in the reduced form with a unimodular pair.
    if (s % 3 == 0) {
      a[(s / 3) % 3] *= 0.0;
      for (std::size_t k = 0; k < 3; ++k)
        if (a[k] != Complex(0.0)) a[k] /= std::abs(a[k]);
    }
    if (pnorm(a, kInf) == 0.0) continue;
    ++rep.random_centers;
    if (grid_multiplier(a).contained_points > 1) ++rep.bad_placements;
  }
  if (rep.max_case_value > 1.0 + 1e-12 || rep.bad_placements > 0)
    throw TheoremViolation("grid placement lemma violated");
  return rep;
}

}  // namespace unimod
