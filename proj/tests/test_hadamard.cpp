#include "catch_amalgamated.hpp"

#include <cmath>

#include "oracle.hpp"
#include "unimod/errors.hpp"
#include "unimod/hadamard.hpp"
#include "unimod/opnorms.hpp"

using namespace unimod;

TEST_CASE("dft matches the 1-based definition") {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto h = dft(n);
    const auto ref = oracle::dft(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(h.matrix(j, k) - ref[j][k]) < 1e-14);
    CHECK(is_hadamard(h.matrix, 1e-12).ok);
    CHECK(norm_1_to_inf(h.matrix) == 1.0);
    CHECK(std::abs(norm_2_to_2(h.matrix) - std::sqrt(double(n))) < 1e-10);
    const auto g = h.matrix * adjoint(h.matrix);
    CHECK(frobenius_distance(g, ComplexMatrix::identity(n).scaled(double(n))) < 1e-10);
  }
  const auto f2 = dft(2).matrix;
  CHECK(f2 == ComplexMatrix{{-1.0, 1.0}, {1.0, 1.0}});
  CHECK_THROWS_AS(dft(0), DimensionError);
  CHECK_THROWS_AS(dft(10), DimensionError);
}

TEST_CASE("order-4 family") {
  for (double t : {0.0, 0.7, -2.1, 3.0}) {
    const auto h = f4_family(t);
    const auto rep = is_hadamard(h.matrix, 1e-12);
    CHECK(rep.ok);
    CHECK(std::abs(std::abs(det(h.matrix)) - 16.0) < 1e-10);
    CHECK(std::abs(norm_2_to_2(h.matrix) - 2.0) < 1e-10);
  }
  // t = 0 agrees with the 0-based Fourier matrix of order 4.
  const auto h0 = f4_family(0.0).matrix;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(std::abs(h0(j, k) - oracle::expi(2 * oracle::pi * double(j * k) / 4.0)) < 1e-14);
}

TEST_CASE("Hadamard validation reports defects") {
  const auto bad = is_hadamard(ComplexMatrix::identity(3), 1e-10);
  CHECK_FALSE(bad.ok);
  CHECK(bad.modulus_defect == 1.0);
  auto m = dft(3).matrix;
  m(1, 2) *= 0.5;
  CHECK_FALSE(is_hadamard(m, 1e-10).ok);
  CHECK_THROWS_AS(as_hadamard(m), DomainError);
  CHECK(as_hadamard(dft(3).matrix).family == HadamardFamily::user);
}

TEST_CASE("chirp vectors flatten Fourier matrices") {
  for (std::size_t n = 1; n <= 9; ++n) {
    // Independent evaluation of F_n x through plain sums.
    const auto f = oracle::dft(n);
    const double odd = double(n % 2);
    for (std::size_t j = 0; j < n; ++j) {
      oracle::cd s = 0.0;
      for (std::size_t k = 1; k <= n; ++k)
        s += f[j][k - 1] * oracle::expi(oracle::pi * double(k) * (double(k) + odd) / double(n));
      CHECK(std::abs(std::abs(s) / std::sqrt(double(n)) - 1.0) < 1e-12);
    }
    CHECK(flatness_defect(dft(n).matrix, quadratic_phase_vector(n)) < 1e-12);
  }
}

TEST_CASE("flat image witness search") {
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9}) {
    const auto w = flat_image_witness(dft(n));
    CHECK(w.defect <= 1e-6);
    CHECK(w.restarts_used == 1);
    // Re-evaluate through inner products with conjugated rows.
    const auto x = w.witness.realize();
    const auto h = dft(n).matrix;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex y = inner(x, h.row(k).conj());
      CHECK(std::abs(std::abs(y) - std::sqrt(double(n))) < 1e-6 * std::sqrt(double(n)));
    }
  }
  // n = 2: x = (1, i) is flat; a 1-D sweep over the free angle finds exactly
  // the two angles +-pi/2.
  {
    double best = 1e9, at = 0.0;
    for (int s = 0; s < 100000; ++s) {
      const double t = -oracle::pi + 2 * oracle::pi * s / 100000.0;
      const double d = std::max(std::abs(std::abs(-1.0 + oracle::expi(t)) / std::sqrt(2.0) - 1.0),
                                std::abs(std::abs(1.0 + oracle::expi(t)) / std::sqrt(2.0) - 1.0));
      if (d < best) best = d, at = t;
    }
    CHECK(std::abs(std::abs(at) - oracle::pi / 2) < 1e-4);
    CHECK(flatness_defect(dft(2).matrix, ComplexVector{1.0, Complex(0, 1)}) < 1e-15);
  }
  for (double t : {0.0, 0.3, 0.7, 1.9, -2.5}) {
    const auto w = flat_image_witness(f4_family(t));
    CHECK(w.defect <= 1e-6);
  }
}

TEST_CASE("flat image search reports failure") {
  // Not Hadamard: a diagonal matrix with unequal entries cannot be flattened.
  HadamardMatrix fake{ComplexMatrix{{2.0, 0.0}, {0.0, 1.0}}, HadamardFamily::user};
  FlatSearchOptions opt;
  opt.restarts = 4;
  try {
    flat_image_witness(fake, opt);
    FAIL("expected NotFoundError");
  } catch (const NotFoundError& e) {
    CHECK(e.best() > 0.2);
  }
}
