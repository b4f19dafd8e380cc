#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qps/cocycle.hpp"
#include "qps/frequency.hpp"
#include "qps/potential.hpp"

using namespace qps;
using std::complex;

namespace {
const Frequency& golden() {
  static Frequency om = Frequency::golden();
  return om;
}
}  // namespace

TEST_CASE("potential evaluation: AMO closed form") {
  Potential amo = Potential::amo(1.0);
  CHECK(amo.eval(0.0, 0.0).real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(amo.eval(0.25, 0.0).real() == doctest::Approx(0.0).epsilon(1e-14));
  // v(theta + i eps) at theta = 0: 2 cos(2 pi i eps) = 2 cosh(2 pi eps).
  double eps = 0.1;
  CHECK(amo.eval(0.0, eps).real() == doctest::Approx(2.0 * std::cosh(2.0 * M_PI * eps)).epsilon(1e-14));
  CHECK(std::abs(amo.eval(0.0, eps).imag()) < 1e-14);
  CHECK(amo.degree() == 1);
  CHECK(amo.coeff_abs_sum() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("free rotation cocycle has unit norm products") {
  Cocycle c(Potential::zero(), 0.0, golden());
  Mat2 step = transfer_step(c, 0.37);
  CHECK(std::abs(step.a) < 1e-15);
  CHECK(std::abs(step.b + 1.0) < 1e-15);
  CHECK(std::abs(step.c - 1.0) < 1e-15);
  CHECK(std::abs(step.d) < 1e-15);

  for (long m : {4L, 64L, 1024L}) {
    TransferProduct p = transfer_product(c, 0.37, m);
    CHECK(p.log_norm == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.steps == m);
  }
}

TEST_CASE("determinant tracking survives heavy renormalization") {
  Cocycle c(Potential::amo(3.0), 0.5, golden());
  TransferProduct p = transfer_product(c, 0.1, 1000);
  CHECK(p.rescale_count > 0);
  CHECK(std::abs(p.det_log_residual()) < 1e-9);
  CHECK(p.log_norm / 1000.0 > std::log(3.0) - 0.2);
  CHECK(p.log_norm / 1000.0 < std::log(3.0) + 0.4);
}

TEST_CASE("phase-orbit and shifted products agree bit for bit") {
  Cocycle c(Potential::amo(2.0), 0.3, golden());
  std::vector<double> phases = orbit_phases(golden(), 0.22, 200);
  TransferProduct a = transfer_product(c, 0.22, 200);
  TransferProduct b = transfer_product_phases(c, phases, 200);
  CHECK(a.log_norm == b.log_norm);
  CHECK(a.accumulated_log_scale == b.accumulated_log_scale);

  std::vector<double> shifts = omega_multiples(golden(), 200);
  TransferProduct s = transfer_product_shifted(c, 0.22, shifts, 200);
  CHECK(a.log_norm == s.log_norm);
}

TEST_CASE("orbit phases carry no accumulated drift") {
  std::vector<double> mult = omega_multiples(golden(), 100);
  CHECK(mult[0] == 0.0);
  CHECK(mult[1] == doctest::Approx(golden().value()).epsilon(1e-15));
  // Each multiple is exact on the lattice: wrap(k * omega) within 1 ulp.
  for (long k = 1; k < 100; ++k) {
    double direct = torus_norm(k, golden());
    double via = std::min(mult[static_cast<size_t>(k)], 1.0 - mult[static_cast<size_t>(k)]);
    CHECK(via == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("cocycle composition: M_{m+n}(t) = M_n(t + m w) M_m(t)") {
  Cocycle c(Potential::amo(3.0), 0.4, golden());
  double theta = 0.271;
  TransferProduct full = transfer_product(c, theta, 300);
  TransferProduct first = transfer_product(c, theta, 150);
  double theta_mid = orbit_phases(golden(), theta, 151)[150];
  TransferProduct second = transfer_product(c, theta_mid, 150);
  Mat2 composed = second.normalized_matrix * first.normalized_matrix;
  double log_norm_composed = std::log(composed.opnorm()) + first.accumulated_log_scale +
                             second.accumulated_log_scale;
  CHECK(log_norm_composed == doctest::Approx(full.log_norm).epsilon(1e-9));
}

TEST_CASE("neighboring-phase norms differ by at most one step pair") {
  Cocycle c(Potential::amo(3.0), 0.0, golden());
  // M_m(t + w) = S(t + m w) M_m(t) S(t)^{-1}, so the log norms differ by at
  // most sup log||S|| + sup log||S^{-1}||; the AMO step at lambda = 3 is
  // bounded by ||[[6,-1],[1,0]]|| < 6.2 and SL2 makes the inverse norm equal.
  double cap = 2.0 * std::log(6.2);
  for (double theta : {0.1, 0.33, 0.77}) {
    long m = 400;
    double a = transfer_product(c, theta, m).log_norm;
    double b = transfer_product(c, orbit_phases(golden(), theta, 2)[1], m).log_norm;
    CHECK(std::abs(a - b) <= cap + 1e-9);
  }
}

TEST_CASE("log-complex values round trip") {
  LogComplex z = LogComplex::from(complex<double>(-3.0, 4.0));
  CHECK(z.log_mag == doctest::Approx(std::log(5.0)).epsilon(1e-15));
  CHECK(std::abs(z.value() - complex<double>(-3.0, 4.0)) < 1e-14);
  CHECK(!z.is_zero());
  LogComplex zero = LogComplex::from(complex<double>(0.0, 0.0));
  CHECK(zero.is_zero());
  CHECK(zero.value() == complex<double>(0.0, 0.0));
}

TEST_CASE("free determinants follow the period-four pattern at E = 0") {
  Cocycle c(Potential::zero(), 0.0, golden());
  CHECK(dirichlet_determinant(c, 0.2, 0).value().real() == doctest::Approx(1.0));
  CHECK(dirichlet_determinant(c, 0.2, 1).is_zero());
  CHECK(dirichlet_determinant(c, 0.2, 2).value().real() == doctest::Approx(-1.0));
  CHECK(dirichlet_determinant(c, 0.2, 3).is_zero());
  CHECK(dirichlet_determinant(c, 0.2, 4).value().real() == doctest::Approx(1.0));
}

TEST_CASE("transfer product entries are the block determinants") {
  Cocycle c(Potential::amo(3.0), 0.4, golden());
  for (double theta : {0.05, 0.42, 0.9}) {
    std::vector<double> phases = orbit_phases(golden(), theta, 31);
    std::vector<LogComplex> pre_t = dirichlet_prefix(c, phases[0], 30);
    std::vector<LogComplex> pre_s = dirichlet_prefix(c, phases[1], 29);
    Mat2 m_acc = Mat2::identity();
    for (long m = 1; m <= 30; ++m) {
      m_acc = transfer_step(c, phases[static_cast<size_t>(m - 1)]) * m_acc;
      complex<double> want_a = pre_t[static_cast<size_t>(m)].value();
      complex<double> want_b = -pre_s[static_cast<size_t>(m - 1)].value();
      complex<double> want_c = pre_t[static_cast<size_t>(m - 1)].value();
      complex<double> want_d =
          m >= 2 ? -pre_s[static_cast<size_t>(m - 2)].value() : complex<double>(0.0);
      double scale = std::max({std::abs(want_a), std::abs(want_b), std::abs(want_c),
                               std::abs(want_d), 1.0});
      CHECK(std::abs(m_acc.a - want_a) / scale < 1e-10);
      CHECK(std::abs(m_acc.b - want_b) / scale < 1e-10);
      CHECK(std::abs(m_acc.c - want_c) / scale < 1e-10);
      CHECK(std::abs(m_acc.d - want_d) / scale < 1e-10);
    }
  }
}

TEST_CASE("unit-determinant identity for block determinants at small m") {
  Cocycle c(Potential::amo(3.0), 0.4, golden());
  for (double theta : {0.13, 0.57}) {
    double theta_w = orbit_phases(golden(), theta, 2)[1];
    std::vector<LogComplex> pt = dirichlet_prefix(c, theta, 8);
    std::vector<LogComplex> ps = dirichlet_prefix(c, theta_w, 8);
    for (long m = 2; m <= 8; ++m) {
      complex<double> lhs = pt[static_cast<size_t>(m - 1)].value() *
                                ps[static_cast<size_t>(m - 1)].value() -
                            pt[static_cast<size_t>(m)].value() *
                                ps[static_cast<size_t>(m - 2)].value();
      CHECK(std::abs(lhs - 1.0) < 1e-7);
    }
  }
}

TEST_CASE("complex energy and nonzero eps reach the analytic extension") {
  Cocycle c(Potential::amo(3.0), complex<double>(0.5, 1e-3), golden());
  TransferProduct p = transfer_product(c, 0.3, 200, 0.05);
  CHECK(std::isfinite(p.log_norm));
  CHECK(std::abs(p.det_log_residual()) < 1e-9);
}
