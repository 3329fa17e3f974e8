#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "unimod/complex_core.hpp"

namespace unimod {

/// n vectors a_1..a_n in C^n with ||a_i||_inf <= 1.
class DiscrepancyInstance {
 public:
  explicit DiscrepancyInstance(std::vector<ComplexVector> rows);
  static DiscrepancyInstance from_matrix(const ComplexMatrix& m);

  std::size_t size() const { return rows_.size(); }
  const std::vector<ComplexVector>& rows() const { return rows_; }
  ComplexMatrix as_matrix() const;

 private:
  std::vector<ComplexVector> rows_;
};

/// max_i |<x, a_i>| at x = (1, e^{i phi_1}, ...).
double discrepancy_value(const DiscrepancyInstance& inst, std::span<const double> phi);

struct DiscrepancyOptions {
  double tol = 1e-6;
  bool certify = true;          // only honoured for n <= 3
  std::size_t restarts = 32;    // heuristic mode
  std::uint64_t seed = 1;
  std::size_t max_cells = std::size_t{1} << 21;
};

struct DiscrepancyResult {
  PhaseVector witness;
  double value = 0.0;                        // attained by the witness
  std::optional<double> certified_lower;     // rigorous lower bound on the minimum
  std::optional<double> certified_min_upper; // = value when certification ran
  bool certified = false;                    // value - lower <= tol
  std::size_t restarts_used = 0;
  std::size_t evaluations = 0;
};

/// min over unimodular x of max_i |<x, a_i>|. For n <= 3 with `certify`, a
/// dyadic branch and bound brackets the minimum; otherwise the best of
/// seeded multi-start local searches is returned.
DiscrepancyResult solve(const DiscrepancyInstance& inst, const DiscrepancyOptions& opts = {});

struct InstanceCheck {
  bool ok = false;
  PhaseVector witness;
  double value = 0.0;
};

/// n in {2, 3}: finds x with max_i |<x, a_i>| <= sqrt(n) + epsilon(). Such x
/// always exists there, so failure throws TheoremViolation.
InstanceCheck check_instance(const DiscrepancyInstance& inst);

/// sqrt(n) minus the certified min-max value; n <= 3.
double equality_gap(const DiscrepancyInstance& inst, double tol = 1e-6);

}  // namespace unimod
