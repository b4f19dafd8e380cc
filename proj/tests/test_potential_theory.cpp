#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qps/annulus_green.hpp"
#include "qps/errors.hpp"

using namespace qps;

namespace {

using C = std::complex<double>;

constexpr double kTwoPi = 6.28318530717958647692;

C from_polar(double rho, double phase_turns) {
  return std::polar(rho, kTwoPi * phase_turns);
}

}  // namespace

TEST_CASE("annulus construction and truncation depth") {
  CHECK_THROWS_AS(AnnulusGreen(0.9), std::invalid_argument);
  CHECK_THROWS_AS(AnnulusGreen(1.0), std::invalid_argument);
  CHECK_THROWS_AS(AnnulusGreen(2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(AnnulusGreen(2.0, 1.5), std::invalid_argument);

  AnnulusGreen g(2.0, 1e-16);
  CHECK(g.R() == 2.0);
  CHECK(g.truncation_terms() == 15);
  // Retained depth covers the tolerance: omitted factors are O(R^{-4k}).
  CHECK(std::pow(2.0, -4.0 * g.truncation_terms()) < 1e-16);
}

TEST_CASE("green symmetry, rotation, inversion, conjugation") {
  AnnulusGreen g(2.0);
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> rad(0.55, 1.9);
  std::uniform_real_distribution<double> ph(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    C z = from_polar(rad(rng), ph(rng));
    C w = from_polar(rad(rng), ph(rng));
    while (std::abs(z - w) < 1e-3) w = from_polar(rad(rng), ph(rng));
    double base = g.green(z, w);

    CHECK(g.green(w, z) == doctest::Approx(base).epsilon(1e-12));
    C rot = std::polar(1.0, kTwoPi * ph(rng));
    CHECK(g.green(rot * z, rot * w) == doctest::Approx(base).epsilon(1e-12));
    CHECK(g.green(1.0 / std::conj(z), 1.0 / std::conj(w)) ==
          doctest::Approx(base).epsilon(1e-12));
    CHECK(g.green(std::conj(z), std::conj(w)) == doctest::Approx(base).epsilon(1e-12));

    // Dirichlet Green's function with the log|z-w| normalization is <= 0.
    CHECK(base <= 1e-12);
  }
}

TEST_CASE("green vanishes on both boundary circles") {
  AnnulusGreen g(2.0);
  C w = from_polar(1.3, 0.17);
  for (int j = 0; j < 8; ++j) {
    double t = j / 8.0;
    C z_out = from_polar(2.0 * (1.0 - 1e-8), t);
    C z_in = from_polar(0.5 * (1.0 + 1e-8), t);
    CHECK(std::abs(g.green(z_out, w)) < 1e-6);
    CHECK(std::abs(g.green(z_in, w)) < 1e-6);
  }
}

TEST_CASE("circle averages: closed form, quadrature, boundary branches") {
  AnnulusGreen g(2.0);

  // Pinned reference value for r = 1.2, |w| = 1.5.
  C w = from_polar(1.5, 0.37);
  double closed = g.circle_average_closed(1.2, w);
  CHECK(closed == doctest::Approx(std::log(2.4) * std::log(0.75) / (2.0 * std::log(2.0)))
                      .epsilon(1e-12));
  CHECK(closed == doctest::Approx(-0.18168).epsilon(1e-3));
  CHECK(g.circle_average_quadrature(1.2, w, 2048) == doctest::Approx(closed).epsilon(1e-8));

  // Branch with the probe radius outside the source radius.
  C w_in = from_polar(1.1, 0.61);
  double closed2 = g.circle_average_closed(1.8, w_in);
  CHECK(closed2 ==
        doctest::Approx(std::log(1.8 / 2.0) * std::log(1.1 * 2.0) / (2.0 * std::log(2.0)))
            .epsilon(1e-12));
  CHECK(g.circle_average_quadrature(1.8, w_in, 2048) == doctest::Approx(closed2).epsilon(1e-8));

  // Averages over either boundary circle vanish.
  CHECK(g.circle_average_closed(2.0, w_in) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(g.circle_average_closed(0.5, w) == doctest::Approx(0.0).epsilon(1e-12));

  // Random source/probe radii, comparing quadrature against the closed form.
  std::mt19937_64 rng(654);
  std::uniform_real_distribution<double> rad(0.55, 1.9);
  std::uniform_real_distribution<double> ph(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    double r = rad(rng);
    C probe = from_polar(rad(rng), ph(rng));
    while (std::abs(std::log(std::abs(probe) / r)) < 0.05) probe = from_polar(rad(rng), ph(rng));
    CHECK(g.circle_average_quadrature(r, probe, 2048) ==
          doctest::Approx(g.circle_average_closed(r, probe)).epsilon(1e-8));
  }
}

TEST_CASE("harmonic correction averages") {
  AnnulusGreen g(2.0);
  std::mt19937_64 rng(987);
  std::uniform_real_distribution<double> rad(0.55, 1.9);
  std::uniform_real_distribution<double> ph(0.0, 1.0);
  const double log_r = std::log(2.0);
  for (int i = 0; i < 20; ++i) {
    double r = rad(rng);
    C w = from_polar(rad(rng), ph(rng));
    while (std::abs(std::log(std::abs(w) / r)) < 0.05) w = from_polar(rad(rng), ph(rng));
    double want = std::log(r / 2.0) * std::log(std::abs(w) / 2.0) /
                      (4.0 * 3.14159265358979323846 * log_r) -
                  log_r / kTwoPi;
    CHECK(g.gamma_average_closed(r, w) == doctest::Approx(want).epsilon(1e-12));
    CHECK(g.gamma_average_quadrature(r, w, 2048) ==
          doctest::Approx(g.gamma_average_closed(r, w)).epsilon(1e-8));
  }
}

TEST_CASE("fourier coefficients of the unit-circle trace") {
  AnnulusGreen g(2.0);

  // First mode against the explicit two-term closed form for real w = r > 1.
  {
    double r = 1.5;
    C w(r, 0.0);
    C got = g.fourier_closed(1, w);
    double want = -0.5 / r + 0.5 * (r + 1.0 / r) / (4.0 + 1.0);
    CHECK(got.real() == doctest::Approx(want).epsilon(1e-12));
    CHECK(std::abs(got.imag()) < 1e-14);
  }

  // Phase covariance: rotating w by phi multiplies mode k by e^{-2 pi i k phi}.
  {
    double rho = 1.4, phi = 0.23;
    for (long k : {1L, 2L, 5L, -3L}) {
      C plain = g.fourier_closed(k, C(rho, 0.0));
      C rotated = g.fourier_closed(k, from_polar(rho, phi));
      C expect = std::polar(1.0, -kTwoPi * static_cast<double>(k) * phi) * plain;
      CHECK(std::abs(rotated - expect) < 1e-12);
    }
  }

  // Closed form vs quadrature plus the magnitude bound, random modes.
  std::mt19937_64 rng(246);
  std::uniform_real_distribution<double> rad(0.55, 1.9);
  std::uniform_real_distribution<double> ph(0.0, 1.0);
  std::uniform_int_distribution<long> kx(1, 40);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 20; ++i) {
    long k = kx(rng) * (flip(rng) ? 1 : -1);
    C w = from_polar(rad(rng), ph(rng));
    while (std::abs(std::log(std::abs(w))) < 0.05) w = from_polar(rad(rng), ph(rng));
    C closed = g.fourier_closed(k, w);
    C quad = g.fourier_quadrature(k, w, 2048);
    CHECK(std::abs(closed - quad) < 1e-10);
    CHECK(std::abs(closed) <= g.fourier_bound(k) + 1e-15);
    CHECK(g.fourier_bound(k) ==
          doctest::Approx((1.0 + std::pow(2.0, -std::abs(static_cast<double>(k)))) /
                          (2.0 * std::abs(static_cast<double>(k))))
              .epsilon(1e-12));
  }
}

TEST_CASE("domain and coincidence guards") {
  AnnulusGreen g(2.0);
  C inside = from_polar(1.2, 0.1);
  CHECK_THROWS_AS(g.green(from_polar(2.2, 0.0), inside), std::invalid_argument);
  CHECK_THROWS_AS(g.green(inside, from_polar(0.4, 0.3)), std::invalid_argument);
  CHECK_THROWS_AS(g.gamma(from_polar(2.2, 0.0), inside), std::invalid_argument);
  CHECK_THROWS_AS(g.green(inside, inside), CoincidentPoints);
}
