#include "unimod/branch_bound.hpp"

#include <algorithm>
#include <cmath>

#include "unimod/complex_core.hpp"
#include "unimod/errors.hpp"
#include "unimod/parallel.hpp"

namespace unimod {

BranchBoundResult branch_and_bound(std::span<const double> lo, std::span<const double> hi,
                                   const CellEvaluator& eval, const BranchBoundOptions& opts) {
  if (lo.size() != hi.size()) throw DimensionError("box bounds differ in length");
  if (!(opts.tol > 0.0)) throw DomainError("branch and bound tolerance must be positive");
  const std::size_t d = lo.size();
  // Internally everything is a maximization of sign * f.
  const double sign = opts.sense == Sense::maximize ? 1.0 : -1.0;

  BranchBoundResult res;
  if (d == 0) {
    const CellBound cb = eval({}, {});
    res.best = cb.value;
    res.bound = cb.value;
    res.exhausted = true;
    res.gap_met = true;
    res.evaluations = 1;
    return res;
  }

  const std::size_t n0 = std::max<std::size_t>(1, opts.initial_divisions);
  std::vector<double> hw(d);
  for (std::size_t k = 0; k < d; ++k) hw[k] = (hi[k] - lo[k]) / (2.0 * static_cast<double>(n0));

  std::size_t count = 1;
  for (std::size_t k = 0; k < d; ++k) count *= n0;
  std::vector<double> centers(count * d);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t rem = i;
    // Last coordinate varies fastest: lexicographic cell order.
    for (std::size_t k = d; k-- > 0;) {
      const std::size_t idx = rem % n0;
      rem /= n0;
      centers[i * d + k] = lo[k] + (2.0 * static_cast<double>(idx) + 1.0) * hw[k];
    }
  }

  const bool decide = !std::isnan(opts.decision_threshold);
  const bool stop = !std::isnan(opts.stop_value);
  const double thr_decision = sign * opts.decision_threshold;
  const double thr_stop = sign * opts.stop_value;

  double best = -kInf;
  std::vector<double> arg(d, 0.0);
  double pruned_max = -kInf;
  std::vector<CellBound> results;

  for (std::size_t level = 0;; ++level) {
    results.assign(count, CellBound{0.0, 0.0});
    parallel_for(count, [&](std::size_t i) {
      const CellBound cb = eval(std::span<const double>(centers.data() + i * d, d), hw);
      results[i] = {sign * cb.value, sign * cb.bound};
    });
    res.evaluations += count;
    res.levels = level + 1;
    res.final_half_width = *std::max_element(hw.begin(), hw.end());

    double level_bound = -kInf;
    for (std::size_t i = 0; i < count; ++i) {
      if (results[i].value > best) {
        best = results[i].value;
        std::copy_n(centers.begin() + static_cast<std::ptrdiff_t>(i * d), d, arg.begin());
      }
      level_bound = std::max(level_bound, results[i].bound);
    }

    auto finish = [&](double upper, bool exhausted) {
      res.best = sign * best;
      res.argbest = arg;
      upper = std::max(upper, best);
      res.bound = sign * upper;
      res.exhausted = exhausted;
      res.gap_met = upper - best <= opts.tol;
      return res;
    };

    if (stop && best > thr_stop) {
      res.stopped_early = true;
      return finish(std::max(pruned_max, level_bound), false);
    }

    double thr = best + opts.tol;
    if (decide) thr = std::max(thr, thr_decision);

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < count; ++i) {
      if (results[i].bound > thr)
        live.push_back(i);
      else
        pruned_max = std::max(pruned_max, results[i].bound);
    }
    if (live.empty()) return finish(pruned_max, true);

    double live_bound = -kInf;
    for (std::size_t i : live) live_bound = std::max(live_bound, results[i].bound);

    const std::size_t children = std::size_t{1} << d;
    const bool too_fine = res.final_half_width * 0.5 < opts.min_half_width;
    if (level + 1 >= opts.max_levels || too_fine || live.size() * children > opts.max_active)
      return finish(std::max(pruned_max, live_bound), false);

    for (auto& h : hw) h *= 0.5;
    std::vector<double> next(live.size() * children * d);
    std::size_t out = 0;
    for (std::size_t i : live) {
      const double* c = centers.data() + i * d;
      for (std::size_t mask = 0; mask < children; ++mask) {
        for (std::size_t k = 0; k < d; ++k) {
          // Bit for coordinate k taken from the top so children stay in
          // lexicographic order.
          const bool up = (mask >> (d - 1 - k)) & 1U;
          next[out * d + k] = c[k] + (up ? hw[k] : -hw[k]);
        }
        ++out;
      }
    }
    centers.swap(next);
    count = out;
  }
}

}  // namespace unimod
