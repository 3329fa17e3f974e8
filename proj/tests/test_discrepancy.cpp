#include "catch_amalgamated.hpp"

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "unimod/config.hpp"
#include "unimod/discrepancy.hpp"
#include "unimod/errors.hpp"
#include "unimod/hadamard.hpp"

using namespace unimod;

namespace {

std::vector<ComplexVector> random_rows(std::size_t n, std::mt19937_64& rng) {
  std::vector<ComplexVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    ComplexVector r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = oracle::random_disk(rng);
    rows.push_back(r);
  }
  return rows;
}

oracle::Mat to_oracle(const std::vector<ComplexVector>& rows) {
  oracle::Mat m;
  for (const auto& r : rows) m.emplace_back(r.entries().begin(), r.entries().end());
  return m;
}

// Brute-force minimum of the max modulus on a uniform grid (an upper estimate
// of the true minimum).
double sweep_min(const oracle::Mat& rows, std::size_t per_axis) {
  const std::size_t d = rows.size() - 1;
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> t(d);
  double best = 1e300;
  while (true) {
    for (std::size_t k = 0; k < d; ++k) t[k] = 2.0 * oracle::pi * static_cast<double>(idx[k]) / static_cast<double>(per_axis);
    best = std::min(best, oracle::maxmod(rows, t));
    std::size_t k = 0;
    while (k < d && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == d) break;
  }
  return best;
}

std::vector<double> angles(const PhaseVector& x) {
  const auto a = x.free_angles();
  return {a.begin(), a.end()};
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(DiscrepancyInstance({ComplexVector{2.0, 0.0}, ComplexVector{0.0, 1.0}}), DomainError);
  CHECK_THROWS(DiscrepancyInstance({ComplexVector{1.0, 0.0}}));
  const auto inst = DiscrepancyInstance::from_matrix(dft(3).matrix);
  CHECK(inst.size() == 3);
  CHECK(frobenius_distance(inst.as_matrix(), dft(3).matrix) == 0.0);
}

TEST_CASE("value matches the definition") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (int r = 0; r < 50; ++r) {
    const auto rows = random_rows(4, rng);
    const std::vector<double> phi{ang(rng), ang(rng), ang(rng)};
    CHECK(discrepancy_value(DiscrepancyInstance(rows), phi) ==
          Catch::Approx(oracle::maxmod(to_oracle(rows), phi)).margin(1e-12));
  }
}

TEST_CASE("DFT rows reach sqrt(n)") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto res = solve(DiscrepancyInstance::from_matrix(dft(n).matrix));
    REQUIRE(res.certified);
    CHECK(res.value == Catch::Approx(std::sqrt(static_cast<double>(n))).margin(1e-6));
    CHECK(*res.certified_lower <= std::sqrt(static_cast<double>(n)) + 1e-12);
    CHECK(res.value - *res.certified_lower <= 1e-6);
  }
  // Parseval: sum_i |<x, a_i>|^2 = n^2 for DFT rows, so sqrt(n) is a floor.
  for (std::size_t n = 4; n <= 5; ++n) {
    const auto res = solve(DiscrepancyInstance::from_matrix(dft(n).matrix));
    CHECK(res.value >= std::sqrt(static_cast<double>(n)) - 1e-9);
    CHECK(res.value <= std::sqrt(static_cast<double>(n)) + 1e-4);
  }
}

TEST_CASE("strips and bases") {
  const DiscrepancyInstance basis({ComplexVector{1.0, 0.0, 0.0}, ComplexVector{0.0, 1.0, 0.0},
                                   ComplexVector{0.0, 0.0, 1.0}});
  CHECK(solve(basis).value == Catch::Approx(1.0).margin(1e-9));
  CHECK(equality_gap(basis) == Catch::Approx(std::sqrt(3.0) - 1.0).margin(1e-6));
  // All rows equal to (1,1): the value |1 + e^{it}| can be driven to 0.
  const DiscrepancyInstance strip({ComplexVector{1.0, 1.0}, ComplexVector{1.0, 1.0}});
  CHECK(solve(strip).value == Catch::Approx(0.0).margin(1e-6));
  const Complex w = omega();
  const DiscrepancyInstance bands({ComplexVector{1.0, w, 0.0}, ComplexVector{1.0, w * w, 0.0},
                                   ComplexVector{1.0, 1.0, 0.0}});
  CHECK(equality_gap(bands) == Catch::Approx(0.0).margin(2e-6));
  CHECK(equality_gap(DiscrepancyInstance::from_matrix(dft(2).matrix)) == Catch::Approx(0.0).margin(1e-6));
}

TEST_CASE("invariances") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (int r = 0; r < 10; ++r) {
    auto rows = random_rows(3, rng);
    const double base = solve(DiscrepancyInstance(rows)).value;
    // Row phases and a common coordinate twist leave the value unchanged.
    auto twisted = rows;
    const double s = ang(rng), t = ang(rng);
    for (auto& row : twisted) {
      row = row.scaled(oracle::expi(ang(rng)));
      row[1] *= oracle::expi(s);
      row[2] *= oracle::expi(t);
    }
    CHECK(solve(DiscrepancyInstance(twisted)).value == Catch::Approx(base).margin(2e-6));
    std::swap(rows[0], rows[2]);
    CHECK(solve(DiscrepancyInstance(rows)).value == Catch::Approx(base).margin(2e-6));
    // Shrinking every row cannot increase the value.
    for (auto& row : rows) row = row.scaled(0.5);
    CHECK(solve(DiscrepancyInstance(rows)).value <= base * 0.5 + 2e-6);
  }
}

TEST_CASE("certified bracket against a brute-force sweep") {
  std::mt19937_64 rng(6);
  for (int r = 0; r < 10; ++r) {
    const auto rows = random_rows(3, rng);
    const auto res = solve(DiscrepancyInstance(rows));
    REQUIRE(res.certified);
    const double swept = sweep_min(to_oracle(rows), 256);
    CHECK(*res.certified_lower <= swept + 1e-12);
    CHECK(res.value <= swept + 1e-9);
    CHECK(oracle::maxmod(to_oracle(rows), angles(res.witness)) ==
          Catch::Approx(res.value).margin(1e-12));
  }
}

TEST_CASE("random instances satisfy the sqrt(n) bound") {
  std::mt19937_64 rng(8);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int r = 0; r < 40; ++r) {
      const auto rows = random_rows(n, rng);
      const auto chk = check_instance(DiscrepancyInstance(rows));
      CHECK(chk.ok);
      CHECK(chk.value <= std::sqrt(static_cast<double>(n)) + epsilon());
      CHECK(oracle::maxmod(to_oracle(rows), angles(chk.witness)) ==
            Catch::Approx(chk.value).margin(1e-12));
    }
}
