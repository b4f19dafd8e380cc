#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qps/cocycle.hpp"
#include "qps/frequency.hpp"
#include "qps/lyapunov.hpp"
#include "qps/potential.hpp"
#include "qps/riesz.hpp"

using namespace qps;

namespace {

const Frequency& golden() {
  static Frequency om = Frequency::golden();
  return om;
}

// Free Lyapunov exponent log((|E| + sqrt(E^2 - 4)) / 2) for |E| > 2.
double free_lyapunov(double e) {
  double a = std::abs(e);
  return std::log(0.5 * (a + std::sqrt(a * a - 4.0)));
}

}  // namespace

TEST_CASE("free cocycle: zero exponent on the spectrum, explicit value off it") {
  Potential zero = Potential::zero();
  Cocycle on(zero, 0.0, golden());
  CHECK(finite_lyapunov(on, 512, 0.0, 128) == doctest::Approx(0.0).epsilon(1e-12));

  Cocycle inside(zero, 1.0, golden());
  CHECK(finite_lyapunov(inside, 1000, 0.0, 128) < 0.02);

  for (double e : {2.5, 3.0, 5.0}) {
    Cocycle off(zero, e, golden());
    CHECK(finite_lyapunov(off, 1000, 0.0, 128) ==
          doctest::Approx(free_lyapunov(e)).epsilon(0.02));
  }
}

TEST_CASE("supercritical AMO: exponent log(lambda) at the spectrum center") {
  Cocycle c(Potential::amo(4.0), 0.0, golden());
  CHECK(finite_lyapunov(c, 800, 0.0, 1024) == doctest::Approx(std::log(4.0)).epsilon(0.05));
}

TEST_CASE("quadrature size is validated") {
  Cocycle c(Potential::amo(3.0), 0.0, golden());
  CHECK_THROWS_AS(finite_lyapunov(c, 100, 0.0, 100), std::invalid_argument);  // not a power of 2
  CHECK_THROWS_AS(finite_lyapunov(c, 100, 0.0, 32), std::invalid_argument);   // too small
}

TEST_CASE("profile is even and convex in eps") {
  Cocycle c(Potential::amo(3.0), 0.0, golden());
  std::vector<double> eps;
  for (int i = -4; i <= 4; ++i) eps.push_back(0.01 * i);
  LyapunovProfile prof = profile(c, 300, eps, 256);
  CHECK(prof.max_evenness_gap() <= 1e-10);
  CHECK(prof.min_second_difference() >= -1e-3);
  // Supercritical linear stretch: L(eps) ~ L(0) + 2 pi eps.
  CHECK(prof.values.back() > prof.values[4]);
}

TEST_CASE("acceleration vanishes for a constant cocycle") {
  Cocycle c(Potential::zero(), 3.0, golden());
  AccelerationEstimate est = acceleration(c, 400, 0.01, 0.05, 5, 128);
  CHECK(std::abs(est.slope) < 0.02);
  CHECK(est.nearest_integer == 0);
  CHECK(!est.quantization_suspect);
}

TEST_CASE("acceleration is one in the supercritical AMO window") {
  Cocycle c(Potential::amo(3.0), 0.0, golden());
  AccelerationEstimate est = acceleration(c, 400, 0.01, 0.05, 5, 512);
  CHECK(est.slope == doctest::Approx(1.0).epsilon(0.1));
  CHECK(est.nearest_integer == 1);
}

TEST_CASE("linearity window detects a synthetic kink") {
  LyapunovProfile prof;
  prof.m = 100;
  prof.n_theta = 128;
  for (int i = 1; i <= 6; ++i) {
    double e = 0.01 * i;
    prof.epsilons.push_back(e);
    // Affine up to 0.04, slope change afterwards.
    prof.values.push_back(e <= 0.04 ? 1.0 + 2.0 * e : 1.0 + 2.0 * 0.04 + 5.0 * (e - 0.04));
  }
  double window = linearity_window(prof, 1e-6);
  CHECK(window >= 0.04 - 1e-12);
  CHECK(window < 0.05);

  LyapunovProfile affine;
  affine.epsilons = {0.01, 0.02, 0.03};
  affine.values = {1.02, 1.04, 1.06};
  CHECK(linearity_window(affine, 1e-9) == doctest::Approx(0.03));
}

TEST_CASE("riesz mass vanishes for the free cocycle") {
  Cocycle c(Potential::zero(), 0.0, golden());
  RieszMassEstimate est = riesz_mass(c, 200, 0.01, 0.04, 128);
  CHECK(std::abs(est.mass) < 1e-3);
  CHECK(est.eps1 == 0.01);
  CHECK(est.eps2 == 0.04);
}

TEST_CASE("riesz straddle picks up the acceleration jump") {
  Cocycle c(Potential::amo(3.0), 0.0, golden());
  RieszMassEstimate est = riesz_mass(c, 300, 0.0, 0.03, 256);
  CHECK(est.mass == doctest::Approx(2.0).epsilon(0.15));
  // Interior slopes merge at the straddle.
  CHECK(est.slopes[1] == 0.0);
  CHECK(est.slopes[2] == 0.0);
}

TEST_CASE("riesz band parameters are validated") {
  Cocycle c(Potential::amo(3.0), 0.0, golden());
  CHECK_THROWS_AS(riesz_mass(c, 100, 0.05, 0.02, 128), std::invalid_argument);
  CHECK_THROWS_AS(riesz_mass(c, 100, -0.01, 0.02, 128), std::invalid_argument);
}
