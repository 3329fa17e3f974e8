#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace unimod {

/// What an evaluator reports for one box cell: the objective at the cell
/// center (an attained value) and a rigorous bound on the objective over the
/// whole cell (upper bound when maximizing, lower bound when minimizing).
struct CellBound {
  double value;
  double bound;
};

using CellEvaluator =
    std::function<CellBound(std::span<const double> center, std::span<const double> half_width)>;

enum class Sense { maximize, minimize };

struct BranchBoundOptions {
  Sense sense = Sense::maximize;
  /// Cells per dimension on the first level.
  std::size_t initial_divisions = 64;
  /// Target gap between the attained value and the bound.
  double tol = 1e-6;
  /// Cells whose bound cannot cross this level are discarded even when the
  /// gap target is not met yet (decision mode). NaN disables it.
  double decision_threshold = std::numeric_limits<double>::quiet_NaN();
  /// Stop as soon as an attained value strictly crosses this level.
  double stop_value = std::numeric_limits<double>::quiet_NaN();
  /// Maximum number of live cells on one level before giving up.
  std::size_t max_active = std::size_t{1} << 21;
  std::size_t max_levels = 64;
  double min_half_width = 1e-13;
};

struct BranchBoundResult {
  double best = 0.0;                 // best attained value
  std::vector<double> argbest;       // where it was attained
  double bound = 0.0;                // rigorous bound on the optimum
  bool exhausted = false;            // every cell was discarded
  bool gap_met = false;              // |bound - best| <= tol
  bool stopped_early = false;        // stop_value was crossed
  std::size_t evaluations = 0;
  std::size_t levels = 0;
  double final_half_width = 0.0;     // largest half width on the last level
};

/// Dyadic branch and bound over a box. Every level halves every live cell in
/// each coordinate; cells whose bound is no better than
/// max(best + tol, decision_threshold) are discarded. Evaluation is
/// data-parallel, reductions run in cell order so ties resolve to the lowest
/// cell index.
BranchBoundResult branch_and_bound(std::span<const double> lo, std::span<const double> hi,
                                   const CellEvaluator& eval, const BranchBoundOptions& opts);

}  // namespace unimod
