#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "unimod/complex_core.hpp"
#include "unimod/opnorms.hpp"

namespace unimod {

struct DistanceCertificate {
  std::size_t n = 0;
  LpPair pair;
  double upper = 0.0;           // n^alpha
  /// ||H||_{q->p} lower * ||H^-1||_{p->q} lower for the transporter; NaN when
  /// the numeric cross-check was skipped (n > 4).
  double lower_evidence = 0.0;
  ComplexMatrix transporter{1};
};

/// Interpolation upper bound d(l_p^n, l_q^n) <= n^alpha for q <= 2 <= p, with
/// the DFT matrix as transporter.
DistanceCertificate lp_upper_bound(std::size_t n, const LpPair& pair);

struct ProductCertificate {
  double forward = 0.0;   // ||A||_{q->p}
  double inverse = 0.0;   // ||A^-1||_{p->q}
  double value = 0.0;     // forward * inverse
  /// True for the (1, inf) pair: exact forward factor and certified upper end
  /// for the inverse, so `value` bounds the distance from above. Otherwise both
  /// factors are heuristic lower estimates.
  bool certified = false;
};

ProductCertificate product_certificate(const ComplexMatrix& a, const LpPair& pair);

struct ProductSearch {
  double value = 0.0;        // ||A||_{1->inf} * certified upper of ||A^-1||_{inf->1}
  ComplexMatrix matrix{1};
  std::size_t restarts = 0;
};

/// Minimizes ||A||_{1->inf} ||A^-1||_{inf->1} over invertible n x n matrices,
/// n in {2, 3}, from seeded random starts. Descent uses a sampled estimate of
/// the inverse factor; every endpoint is re-evaluated with the certified
/// bracket. Throws TheoremViolation if the result drops below sqrt(n) - 1e-4.
ProductSearch minimize_product_l1_linf(std::size_t n, std::size_t restarts, std::uint64_t seed = 1);
/// Same, a single descent from `start`.
ProductSearch minimize_product_l1_linf_from(const ComplexMatrix& start);

struct VolumeCheck {
  bool ok = false;
  double norm_lower = 0.0;  // certified lower end of ||A||_{inf->1}
  double rhs = 0.0;         // 2 sqrt|det A|
};

/// ||A||_{inf->1} >= 2 sqrt|det A| for 2 x 2 A, checked with the lower end of
/// the certified bracket up to a relative epsilon().
VolumeCheck volume_lemma_check(const ComplexMatrix& a);

/// The 3 x 3 matrix with ||A||_{inf->1} < 3 |det A|^{1/3} (entries rounded to
/// four decimals) for n = 3, block extended by diag(1, .) for n > 3.
ComplexMatrix counterexample_matrix(std::size_t n);

struct CounterexampleReport {
  ComplexMatrix matrix{1};
  double det_modulus = 0.0;
  double norm_lower = 0.0;
  double norm_upper = 0.0;
  double rhs = 0.0;       // n |det|^{1/n}
  double margin = 0.0;    // rhs - norm_upper
  /// "branch_and_bound" when computed directly, "block_additivity" when
  /// assembled from the order-3 bracket plus n - 3.
  const char* method = "";
};

CounterexampleReport counterexample_report(std::size_t n);

struct CounterexampleSearch {
  ComplexMatrix matrix{1};
  double ratio = 0.0;            // certified upper of ||A||_{inf->1} / |det A|^{1/3}
  double estimated_ratio = 0.0;  // what the descent saw
  bool success = false;          // ratio < 3 - 1e-4
  std::size_t evaluations = 0;
};

/// Derivative-free descent over 3 x 3 complex matrices on
/// ||A||_{inf->1} / |det A|^{1/3}, from `start` or a seeded random matrix.
CounterexampleSearch search_counterexample(std::uint64_t seed, std::size_t iterations,
                                           const std::optional<ComplexMatrix>& start = std::nullopt);

}  // namespace unimod
