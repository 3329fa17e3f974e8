#include "unimod/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace unimod {

double golden_section(const std::function<double(double)>& f, double lo, double hi, double tol,
                      std::size_t max_iter) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  double best_x = fc <= fd ? c : d;
  double best_f = std::min(fc, fd);
  for (std::size_t it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
      if (fc < best_f) best_f = fc, best_x = c;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
      if (fd < best_f) best_f = fd, best_x = d;
    }
  }
  return best_x;
}

LocalResult coordinate_descent(const Objective& f, std::vector<double> x, double radius,
                               std::size_t sweeps, double shrink, double min_radius) {
  LocalResult res;
  res.value = f(x);
  res.evaluations = 1;
  for (std::size_t s = 0; s < sweeps && radius >= min_radius; ++s) {
    bool improved = false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double x0 = x[k];
      std::vector<double> probe = x;
      auto line = [&](double t) {
        probe[k] = t;
        ++res.evaluations;
        return f(probe);
      };
      const double t = golden_section(line, x0 - radius, x0 + radius, radius * 1e-6);
      probe[k] = t;
      const double v = f(probe);
      ++res.evaluations;
      if (v < res.value) {
        res.value = v;
        x[k] = t;
        improved = true;
      }
    }
    if (!improved) radius *= shrink;
  }
  res.x = std::move(x);
  return res;
}

LocalResult nelder_mead(const Objective& f, std::vector<double> x0, double step,
                        std::size_t max_evals, double ftol) {
  const std::size_t d = x0.size();
  LocalResult res;
  if (d == 0) {
    res.value = f(x0);
    res.evaluations = 1;
    res.x = std::move(x0);
    return res;
  }
  // Gao-Han coefficients behave better than the classic ones beyond d = 2.
  const double dd = static_cast<double>(d);
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / dd;
  const double gamma = 0.75 - 1.0 / (2.0 * dd);
  const double delta = 1.0 - 1.0 / dd;

  std::vector<std::vector<double>> pts(d + 1, x0);
  for (std::size_t k = 0; k < d; ++k) pts[k + 1][k] += step;
  std::vector<double> fv(d + 1);
  for (std::size_t i = 0; i <= d; ++i) fv[i] = f(pts[i]);
  std::size_t evals = d + 1;
  std::vector<std::size_t> order(d + 1);

  std::vector<double> centroid(d), xr(d), xe(d), xc(d);
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t ib = order.front(), iw = order.back(), is = order[d - 1];
    if (std::abs(fv[iw] - fv[ib]) <= ftol) {
      double spread = 0.0;
      for (std::size_t k = 0; k < d; ++k) spread = std::max(spread, std::abs(pts[iw][k] - pts[ib][k]));
      if (spread < 1e-14) break;
    }
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= d; ++i)
      if (i != iw)
        for (std::size_t k = 0; k < d; ++k) centroid[k] += pts[i][k] / dd;

    for (std::size_t k = 0; k < d; ++k) xr[k] = centroid[k] + alpha * (centroid[k] - pts[iw][k]);
    const double fr = f(xr);
    ++evals;
    if (fr < fv[ib]) {
      for (std::size_t k = 0; k < d; ++k) xe[k] = centroid[k] + beta * (xr[k] - centroid[k]);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        pts[iw] = xe;
        fv[iw] = fe;
      } else {
        pts[iw] = xr;
        fv[iw] = fr;
      }
      continue;
    }
    if (fr < fv[is]) {
      pts[iw] = xr;
      fv[iw] = fr;
      continue;
    }
    const bool outside = fr < fv[iw];
    for (std::size_t k = 0; k < d; ++k)
      xc[k] = outside ? centroid[k] + gamma * (xr[k] - centroid[k])
                      : centroid[k] - gamma * (centroid[k] - pts[iw][k]);
    const double fc = f(xc);
    ++evals;
    if (fc < std::min(fr, fv[iw])) {
      pts[iw] = xc;
      fv[iw] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == ib) continue;
      for (std::size_t k = 0; k < d; ++k) pts[i][k] = pts[ib][k] + delta * (pts[i][k] - pts[ib][k]);
      fv[i] = f(pts[i]);
      ++evals;
    }
  }
  const auto ib = static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
  res.x = pts[ib];
  res.value = fv[ib];
  res.evaluations = evals;
  return res;
}

LocalResult polish(const Objective& f, std::vector<double> x0, double step, std::size_t rounds) {
  LocalResult best;
  best.x = x0;
  best.value = f(x0);
  best.evaluations = 1;
  for (std::size_t r = 0; r < rounds; ++r) {
    LocalResult nm = nelder_mead(f, best.x, step, 400 * (best.x.size() + 1));
    best.evaluations += nm.evaluations;
    if (nm.value < best.value) best.value = nm.value, best.x = nm.x;
    LocalResult cd = coordinate_descent(f, best.x, step * 0.5, 40);
    best.evaluations += cd.evaluations;
    const bool gain = cd.value < best.value - 1e-15;
    if (cd.value < best.value) best.value = cd.value, best.x = cd.x;
    if (!gain && r > 0) break;
    step *= 0.1;
  }
  return best;
}

}  // namespace unimod
