#include "catch_amalgamated.hpp"

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "unimod/bm_distance.hpp"
#include "unimod/discrepancy.hpp"
#include "unimod/errors.hpp"
#include "unimod/hadamard.hpp"

using namespace unimod;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = oracle::random_gaussian(rng);
  return a;
}

oracle::Mat as_oracle(const ComplexMatrix& a) {
  oracle::Mat m(a.order(), std::vector<oracle::cd>(a.order()));
  for (std::size_t r = 0; r < a.order(); ++r)
    for (std::size_t c = 0; c < a.order(); ++c) m[r][c] = a(r, c);
  return m;
}

}  // namespace

TEST_CASE("interpolation upper bound") {
  const auto c = lp_upper_bound(3, LpPair{kInf, 1.0});
  CHECK(c.upper == Catch::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(c.lower_evidence <= c.upper + 1e-6);
  CHECK(c.lower_evidence == Catch::Approx(std::sqrt(3.0)).margin(1e-6));
  CHECK(std::abs(det(c.transporter)) > 1e-12);
  CHECK(lp_upper_bound(2, LpPair{2.0, 1.0}).upper == Catch::Approx(std::sqrt(2.0)));
  // alpha = max{1/2 - 1/4, 2/3 - 1/2} = 1/4
  CHECK(lp_upper_bound(4, LpPair{4.0, 1.5}).upper == Catch::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(lp_upper_bound(3, LpPair{1.5, 1.0}), DomainError);
  CHECK_THROWS_AS(lp_upper_bound(3, LpPair{kInf, 3.0}), DomainError);
  CHECK(std::isnan(lp_upper_bound(6, LpPair{kInf, 1.0}).lower_evidence));
  // The bound is symmetric under (q, p) -> (p*, q*).
  for (double q : {1.0, 1.25, 1.5, 2.0})
    for (double p : {2.0, 3.0, 6.0, kInf})
      for (std::size_t n = 2; n <= 4; ++n) {
        const auto a = lp_upper_bound(n, LpPair{p, q});
        const auto b = lp_upper_bound(n, LpPair{dual_exponent(q), dual_exponent(p)});
        CHECK(a.upper == Catch::Approx(b.upper).epsilon(1e-12));
        CHECK(a.lower_evidence <= a.upper + 1e-5);
        CHECK(b.lower_evidence <= b.upper + 1e-5);
      }
}

TEST_CASE("product certificates") {
  const auto p2 = product_certificate(dft(2).matrix, LpPair{kInf, 1.0});
  CHECK(p2.certified);
  CHECK(p2.value == Catch::Approx(std::sqrt(2.0)).margin(1e-6));
  const auto p3 = product_certificate(dft(3).matrix, LpPair{kInf, 1.0});
  CHECK(p3.value == Catch::Approx(std::sqrt(3.0)).margin(1e-4));
  // Identity: n^{1/q - 1/p}.
  for (double q : {1.0, 1.5, 2.0})
    for (double p : {2.0, 4.0, kInf}) {
      const auto pi = product_certificate(ComplexMatrix::identity(3), LpPair{p, q});
      CHECK(pi.value == Catch::Approx(std::pow(3.0, 1.0 / q - 1.0 / p)).epsilon(1e-6));
    }
  CHECK_THROWS_AS(product_certificate(ComplexMatrix(2), LpPair{}), DomainError);
}

TEST_CASE("product minimization stays above sqrt(n)") {
  const auto from_dft = minimize_product_l1_linf_from(dft(2).matrix);
  CHECK(from_dft.value == Catch::Approx(std::sqrt(2.0)).margin(1e-6));
  const auto s2 = minimize_product_l1_linf(2, 300, 5);
  CHECK(s2.value >= std::sqrt(2.0) - 1e-4);
  CHECK(s2.value <= std::sqrt(2.0) + 1e-3);
  CHECK(s2.restarts == 300);
  const auto s3 = minimize_product_l1_linf(3, 4, 5);
  CHECK(s3.value >= std::sqrt(3.0) - 1e-4);
  CHECK(minimize_product_l1_linf_from(dft(3).matrix).value == Catch::Approx(std::sqrt(3.0)).margin(1e-4));
  CHECK_THROWS_AS(minimize_product_l1_linf(4, 1), DomainError);
}

TEST_CASE("discrepancy witnesses bound the inverse norm") {
  // max_i |<x, a_i>| <= D gives ||conj(A) x||_inf <= D with ||x||_1 = n.
  std::mt19937_64 rng(21);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int r = 0; r < 15; ++r) {
      ComplexMatrix a = random_matrix(n, rng);
      a = a.scaled(1.0 / max_entry_modulus(a));
      const auto d = solve(DiscrepancyInstance::from_matrix(a));
      const double inv = norm_inf_to_1_certified(inverse(a)).upper;
      CHECK(inv >= static_cast<double>(n) / d.value - 1e-9);
      CHECK(inv >= std::sqrt(static_cast<double>(n)) - 1e-4);
    }
}

TEST_CASE("two-dimensional volume inequality") {
  const auto id = volume_lemma_check(ComplexMatrix::identity(2));
  CHECK(id.ok);
  CHECK(id.norm_lower == Catch::Approx(2.0).margin(1e-9));
  const auto f = volume_lemma_check(dft(2).matrix);
  CHECK(f.ok);
  CHECK(f.norm_lower == Catch::Approx(2.0 * std::sqrt(2.0)).margin(1e-9));
  CHECK(f.rhs == Catch::Approx(2.0 * std::sqrt(2.0)).margin(1e-12));
  std::mt19937_64 rng(23);
  for (int r = 0; r < 3000; ++r) {
    const ComplexMatrix a = random_matrix(2, rng);
    const auto v = volume_lemma_check(a);
    CHECK(v.ok);
    CHECK(v.norm_lower >= oracle::inf_to_1_sweep(as_oracle(a), 64) - 1e-12);
  }
  CHECK_THROWS_AS(volume_lemma_check(ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("counterexample matrices") {
  const ComplexMatrix a3 = counterexample_matrix(3);
  CHECK(std::abs(det(a3)) == Catch::Approx(1.0).margin(2e-3));
  CHECK(std::abs(oracle::det(as_oracle(a3))) == Catch::Approx(std::abs(det(a3))).epsilon(1e-12));
  const auto r3 = counterexample_report(3);
  CHECK(r3.norm_lower <= 2.9978 + 2e-3);
  CHECK(r3.norm_upper >= 2.9978 - 2e-3);
  CHECK(r3.norm_upper < 3.0);
  CHECK(r3.margin > 0.0);
  CHECK(oracle::inf_to_1_sweep(as_oracle(a3), 256) <= r3.norm_upper);
  const auto r4 = counterexample_report(4);
  CHECK(std::string(r4.method) == "branch_and_bound");
  CHECK(r4.norm_upper == Catch::Approx(1.0 + r3.norm_upper).margin(1e-5));
  CHECK(r4.norm_upper < 4.0);
  const auto r5 = counterexample_report(5);
  CHECK(std::string(r5.method) == "block_additivity");
  CHECK(r5.norm_upper < 5.0);
  CHECK(oracle::inf_to_1_sweep(as_oracle(a3), 256) + 2.0 <= r5.norm_upper);
  CHECK(counterexample_matrix(5).order() == 5);
  CHECK_THROWS_AS(counterexample_matrix(2), DomainError);
}

TEST_CASE("block additivity") {
  std::mt19937_64 rng(29);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int r = 0; r < 5; ++r) {
      const ComplexMatrix b = random_matrix(n, rng);
      const auto nb = norm_inf_to_1_certified(b);
      const auto ne = norm_inf_to_1_certified(block_extend(b));
      CHECK(ne.lower == Catch::Approx(1.0 + nb.lower).margin(1e-6));
    }
}

TEST_CASE("counterexample search") {
  const auto from_a3 = search_counterexample(1, 3000, counterexample_matrix(3));
  CHECK(from_a3.ratio <= 2.998);
  CHECK(from_a3.success);
  const ComplexMatrix f = dft(3).matrix;
  const auto from_dft = search_counterexample(1, 1, f);
  // ||F_3||_{inf->1} = 3 sqrt 3 (flat image), |det F_3|^{1/3} = sqrt 3.
  CHECK(from_dft.ratio <= 3.0 + 1e-6);
  CHECK(from_dft.ratio >= 3.0 - 1e-6);
  bool any = false;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto s = search_counterexample(seed, 20000);
    const auto b = norm_inf_to_1_certified(s.matrix);
    const double d = std::cbrt(std::abs(det(s.matrix)));
    CHECK(s.ratio >= b.lower / d - 1e-12);
    CHECK(s.ratio <= b.upper / d + 1e-12);
    any = any || s.success;
  }
  CHECK(any);
}
