#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace unimod {

using Objective = std::function<double(std::span<const double>)>;

struct LocalResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Golden-section minimization of a unimodal function on [lo, hi]. Returns the
/// best abscissa seen, not just the final bracket midpoint.
double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      double tol = 1e-12, std::size_t max_iter = 200);

/// Coordinate-wise golden-section descent (minimization). Each sweep searches
/// every coordinate in [x_k - radius, x_k + radius]; the radius shrinks by
/// `shrink` after a sweep without improvement.
LocalResult coordinate_descent(const Objective& f, std::vector<double> x, double radius,
                               std::size_t sweeps = 60, double shrink = 0.25,
                               double min_radius = 1e-13);

/// Nelder-Mead simplex minimization with adaptive coefficients.
LocalResult nelder_mead(const Objective& f, std::vector<double> x0, double step,
                        std::size_t max_evals = 4000, double ftol = 1e-15);

/// Nelder-Mead followed by coordinate descent, restarting the simplex while
/// it keeps improving. Works well on max-of-moduli objectives.
LocalResult polish(const Objective& f, std::vector<double> x0, double step,
                   std::size_t rounds = 4);

}  // namespace unimod
