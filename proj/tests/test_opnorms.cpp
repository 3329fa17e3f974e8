#include "catch_amalgamated.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "oracle.hpp"
#include "unimod/errors.hpp"
#include "unimod/hadamard.hpp"
#include "unimod/opnorms.hpp"

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

TEST_CASE("1->inf and 2->2 norms") {
  CHECK(norm_1_to_inf(dft(3).matrix) == 1.0);
  CHECK(norm_1_to_inf(ComplexMatrix(3)) == 0.0);
  CHECK(norm_1_to_inf(ComplexMatrix{{2.0, 0.0}, {0.0, 1.0}}) == 2.0);
  CHECK(std::abs(norm_2_to_2(dft(3).matrix) - std::sqrt(3.0)) < 1e-12);
  CHECK(norm_2_to_2(ComplexMatrix::identity(4)) == Catch::Approx(1.0).epsilon(1e-14));
  // Rank one u v* with unit vectors.
  const ComplexVector u{Complex(0.6, 0), Complex(0, 0.8)}, v{Complex(0, 1 / std::sqrt(2.0)), 1 / std::sqrt(2.0)};
  ComplexMatrix r1(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r1(i, j) = u[i] * std::conj(v[j]);
  CHECK(std::abs(norm_2_to_2(r1) - 1.0) < 1e-12);
  // Nearly degenerate spectrum.
  ComplexMatrix dg(3);
  dg(0, 0) = 1.0;
  dg(1, 1) = 1.0 + 1e-9;
  dg(2, 2) = 0.5;
  CHECK(std::abs(norm_2_to_2(dg) - (1.0 + 1e-9)) < 1e-13);
}

TEST_CASE("inf->1 certified brackets") {
  const auto id = norm_inf_to_1_certified(ComplexMatrix::identity(2));
  CHECK(id.certified);
  CHECK(std::abs(id.lower - 2.0) < 1e-12);
  CHECK(id.upper <= 2.0 + 1e-6);

  const auto f2 = norm_inf_to_1_certified(dft(2).matrix);
  // Oracle: dense sweep of |1 - e^{it}| + |1 + e^{it}|.
  double sweep = 0.0;
  for (int s = 0; s < 200000; ++s) {
    const double t = 2 * oracle::pi * s / 200000.0;
    sweep = std::max(sweep, std::abs(-1.0 + oracle::expi(t)) + std::abs(1.0 + oracle::expi(t)));
  }
  CHECK(f2.certified);
  CHECK(f2.lower <= sweep + 1e-9);
  CHECK(f2.upper >= sweep - 1e-9);
  CHECK(std::abs(f2.lower - 2 * std::sqrt(2.0)) < 1e-9);

  // The witness reproduces the lower end.
  const auto y = dft(2).matrix.apply(f2.witness);
  CHECK(std::abs(pnorm(y, 1.0) - f2.lower) < 1e-12);
}

TEST_CASE("inf->1 bracket soundness on random matrices") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-oracle::pi, oracle::pi);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + (t % 2);
    const auto a = random_matrix(n, rng);
    const auto b = norm_inf_to_1_certified(a);
    CHECK(b.certified);
    CHECK(b.lower <= b.upper);
    const auto m = as_oracle(a);
    for (int s = 0; s < 50; ++s) {
      std::vector<double> th(n - 1);
      for (auto& x : th) x = u(rng);
      CHECK(oracle::l1_image(m, th) <= b.upper + 1e-12);
    }
    if (t < 20) {
      CHECK(oracle::inf_to_1_sweep(m, n == 2 ? 20000 : 600) <= b.upper + 1e-12);
      // Self-duality under the conjugate transpose.
      const auto bh = norm_inf_to_1_certified(adjoint(a));
      CHECK(std::abs(bh.lower - b.lower) < 2e-6);
    }
  }
}

TEST_CASE("norm scaling") {
  std::mt19937_64 rng(5);
  const auto a = random_matrix(3, rng);
  const Complex c(-0.7, 1.3);
  const double s = std::abs(c);
  const auto ac = a.scaled(c);
  CHECK(norm_1_to_inf(ac) == Catch::Approx(s * norm_1_to_inf(a)).epsilon(1e-10));
  CHECK(norm_2_to_2(ac) == Catch::Approx(s * norm_2_to_2(a)).epsilon(1e-10));
  CHECK(norm_inf_to_1_certified(ac).lower ==
        Catch::Approx(s * norm_inf_to_1_certified(a).lower).epsilon(1e-6));
  const LpPair pr{3.0, 1.5};
  CHECK(norm_q_to_p_lower(ac, pr, 16).value ==
        Catch::Approx(s * norm_q_to_p_lower(a, pr, 16).value).epsilon(1e-6));
}

TEST_CASE("q->p lower bounds") {
  const auto f3 = dft(3).matrix;
  CHECK(norm_q_to_p_lower(f3, {2.0, 2.0}, 4).value >= std::sqrt(3.0) - 1e-6);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_matrix(1 + t % 4, rng);
    CHECK(std::abs(norm_q_to_p_lower(a, {kInf, 1.0}, 4).value - norm_1_to_inf(a)) < 1e-8);
    const auto r = norm_q_to_p_lower(a, {2.5, 1.7}, 8);
    // Attained by its witness.
    CHECK(std::abs(pnorm(a.apply(r.witness), 2.5) / pnorm(r.witness, 1.7) - r.value) < 1e-12);
    CHECK(std::abs(norm_q_to_p_lower(a, {2.0, 2.0}, 4).value - norm_2_to_2(a)) < 1e-9);
  }
  CHECK(norm_q_to_p_lower(f3, {3.0, 1.5}, 32).value <= std::cbrt(3.0) + 1e-6);
  CHECK(riesz_thorin_bound(3, 1.0) == 1.0);
  CHECK(riesz_thorin_bound(4, 2.0) == 2.0);
  CHECK(riesz_thorin_bound(9, 1.5) == Catch::Approx(std::cbrt(9.0)).epsilon(1e-15));
  CHECK_THROWS_AS(riesz_thorin_bound(3, 2.5), DomainError);
  CHECK(LpPair{kInf, 1.0}.alpha() == 0.5);
  CHECK(LpPair{4.0, 1.5}.alpha() == Catch::Approx(1.0 / 4.0));
}

TEST_CASE("inverse Fourier chain bound") {
  for (std::size_t n : {2, 3, 4}) {
    const auto hinv = inverse(dft(n).matrix);
    for (double q : {1.0, 1.5, 2.0})
      for (double p : {2.0, 3.0, kInf}) {
        const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
        const double bound = std::pow(double(n), 1.0 / q - ip - 0.5);
        CHECK(norm_q_to_p_lower(hinv, {q, p}, 16).value <= bound + 1e-6);
      }
  }
}

TEST_CASE("uncertified mode for larger orders") {
  std::mt19937_64 rng(12);
  const auto a = random_matrix(6, rng);
  InfToOneOptions opt;
  opt.restarts = 8;
  const auto b = norm_inf_to_1_certified(a, opt);
  CHECK_FALSE(b.certified);
  CHECK(b.lower <= b.upper);
  CHECK(std::abs(pnorm(a.apply(b.witness), 1.0) - b.lower) < 1e-12);
}
