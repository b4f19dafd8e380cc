#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <random>
#include <vector>

#include "qps/errors.hpp"
#include "qps/finite_operator.hpp"
#include "qps/frequency.hpp"
#include "qps/ids.hpp"
#include "qps/potential.hpp"

using namespace qps;
using std::complex;

namespace {

const Frequency& golden() {
  static Frequency om = Frequency::golden();
  return om;
}

Eigen::VectorXd dense_eigenvalues(const std::vector<double>& diag) {
  long n = static_cast<long>(diag.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (long i = 0; i < n; ++i) {
    h(i, i) = diag[static_cast<size_t>(i)];
    if (i + 1 < n) {
      h(i, i + 1) = 1.0;
      h(i + 1, i) = 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  return solver.eigenvalues();
}

Eigen::VectorXcd dense_green_diagonal(const std::vector<double>& diag, complex<double> z) {
  long n = static_cast<long>(diag.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (long i = 0; i < n; ++i) {
    a(i, i) = diag[static_cast<size_t>(i)] - z;
    if (i + 1 < n) {
      a(i, i + 1) = 1.0;
      a(i + 1, i) = 1.0;
    }
  }
  Eigen::MatrixXcd inv = a.partialPivLu().inverse();
  return inv.diagonal();
}

}  // namespace

TEST_CASE("strict eigenvalue counts match a dense solver on random tridiagonals") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> dval(-3.0, 3.0);
  std::uniform_int_distribution<long> dsize(2, 120);
  std::uniform_real_distribution<double> denergy(-4.5, 4.5);
  for (int inst = 0; inst < 30; ++inst) {
    long n = dsize(gen);
    std::vector<double> diag(static_cast<size_t>(n));
    for (auto& d : diag) d = dval(gen);
    FiniteOperator op{diag, 0.0, "test-corpus"};
    Eigen::VectorXd evs = dense_eigenvalues(diag);
    for (int t = 0; t < 3; ++t) {
      double e = denergy(gen);
      bool near = false;
      for (long i = 0; i < evs.size(); ++i)
        if (std::abs(e - evs[i]) < 1e-7) near = true;
      if (near) continue;
      long want = 0;
      for (long i = 0; i < evs.size(); ++i)
        if (evs[i] < e) ++want;
      CHECK(eigen_count(op, e) == want);
    }
  }
}

TEST_CASE("free window of size three: count at the middle eigenvalue is strict") {
  FiniteOperator op{{0.0, 0.0, 0.0}, 0.0, "free"};
  // Eigenvalues -sqrt(2), 0, sqrt(2): the count at E = 0 excludes the
  // eigenvalue sitting exactly at E.
  CHECK(eigen_count(op, 0.0) == 1);
  CHECK(eigen_count(op, -2.0) == 0);
  CHECK(eigen_count(op, 2.0) == 3);
}

TEST_CASE("counts saturate outside the spectral interval") {
  FiniteOperator op = finite_operator(Potential::amo(3.0), golden(), 0.123, 256);
  double edge = 2.0 + 6.0 + 1.0;
  CHECK(eigen_count(op, -edge) == 0);
  CHECK(eigen_count(op, edge) == 256);
}

TEST_CASE("bisection eigenvalues match the dense solver") {
  FiniteOperator op = finite_operator(Potential::amo(3.0), golden(), 0.321, 60);
  std::vector<double> got = dirichlet_eigenvalues(op);
  Eigen::VectorXd want = dense_eigenvalues(op.diagonal);
  REQUIRE(static_cast<long>(got.size()) == want.size());
  for (long i = 0; i < want.size(); ++i)
    CHECK(got[static_cast<size_t>(i)] == doctest::Approx(want[i]).epsilon(1e-8));
}

TEST_CASE("diagonal resolvent matches a dense inverse") {
  FiniteOperator op = finite_operator(Potential::amo(3.0), golden(), 0.08, 50);
  complex<double> z(0.3, 0.2);
  Eigen::VectorXcd want = dense_green_diagonal(op.diagonal, z);
  std::vector<complex<double>> got = green_diagonal_all(op, z);
  for (long k = 0; k < 50; ++k)
    CHECK(std::abs(got[static_cast<size_t>(k)] - want[k]) < 1e-9);
  for (long k : {0L, 17L, 49L}) CHECK(green_diagonal(op, z, k) == got[static_cast<size_t>(k)]);
}

TEST_CASE("resolvent is Herglotz and norm-bounded") {
  FiniteOperator op = finite_operator(Potential::amo(3.0), golden(), 0.6, 200);
  complex<double> z(1.1, 0.1);
  std::vector<complex<double>> g = green_diagonal_all(op, z);
  for (const auto& v : g) {
    CHECK(v.imag() > 0.0);
    CHECK(std::abs(v) <= 1.0 / z.imag() + 1e-12);
  }
}

TEST_CASE("one-site resolvent is the scalar formula") {
  FiniteOperator op{{0.7}, 0.0, "scalar"};
  complex<double> z(0.3, 0.4);
  complex<double> want = 1.0 / (0.7 - z);
  CHECK(std::abs(green_diagonal(op, z, 0) - want) < 1e-15);
}

TEST_CASE("counting rate obeys the resolvent trace bound") {
  FiniteOperator one{{0.0}, 0.0, "scalar"};
  GreenTraceBound tb1 = green_trace_bound(one, 0.0, 1.0);
  CHECK(tb1.d_n == doctest::Approx(1.0));
  CHECK(tb1.bound == doctest::Approx(2.0).epsilon(1e-12));

  FiniteOperator free_op = finite_operator(Potential::zero(), golden(), 0.0, 512);
  GreenTraceBound tb = green_trace_bound(free_op, 0.0, 0.01);
  CHECK(tb.d_n >= 0.0);
  CHECK(tb.d_n <= tb.bound + 1e-12);

  FiniteOperator amo_op = finite_operator(Potential::amo(3.0), golden(), 0.456, 512);
  for (double e : {-2.0, 0.0, 3.5}) {
    for (double eta : {0.005, 0.05, 0.5}) {
      GreenTraceBound t = green_trace_bound(amo_op, e, eta);
      CHECK(t.d_n <= t.bound + 1e-12);
    }
  }
}

TEST_CASE("window decoupling identity") {
  FiniteOperator op = finite_operator(Potential::amo(3.0), golden(), 0.9, 64);
  complex<double> z(0.5, 0.2);
  // Full window: the boundary terms drop and the identity is exact.
  CHECK(resolvent_decoupling_check(op, z, 10, 0, 63) < 1e-13);
  // Interior windows close to machine accuracy.
  CHECK(resolvent_decoupling_check(op, z, 20, 5, 40) < 1e-8);
  CHECK(resolvent_decoupling_check(op, z, 0, 0, 10) < 1e-8);
  CHECK(resolvent_decoupling_check(op, z, 63, 50, 63) < 1e-8);
}

TEST_CASE("free counting curve follows the arcsine law") {
  IDSCurve curve = ids_curve(Potential::zero(), golden(), 0.0, 1024,
                             {-1.5, -1.0, 0.0, 1.0, 1.5});
  for (std::size_t i = 0; i < curve.energies.size(); ++i) {
    double want = 1.0 - std::acos(curve.energies[i] / 2.0) / M_PI;
    CHECK(std::abs(curve.value(i) - want) <= 2.0 / 1024.0);
  }
}

TEST_CASE("counting curve is phase-stable") {
  IDSCurve a = ids_curve(Potential::amo(3.0), golden(), 0.1, 1024, {0.5});
  IDSCurve b = ids_curve(Potential::amo(3.0), golden(), 0.7, 1024, {0.5});
  CHECK(std::abs(a.counts[0] - b.counts[0]) <= 10);
}

TEST_CASE("energy grid must be sorted") {
  CHECK_THROWS_AS(ids_curve(Potential::zero(), golden(), 0.0, 64, {1.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("eigenvalue-sum exponent matches the free closed form") {
  IDSCurve curve = ids_curve(Potential::zero(), golden(), 0.0, 2048, {0.0});
  double l3 = thouless_lyapunov(curve, 3.0);
  CHECK(l3 == doctest::Approx(std::log(0.5 * (3.0 + std::sqrt(5.0)))).epsilon(0.02));
  double l100 = thouless_lyapunov(curve, 100.0);
  CHECK(l100 == doctest::Approx(std::log(100.0)).epsilon(0.01));
}

TEST_CASE("exclusion window rejects on-spectrum saturation") {
  IDSCurve curve = ids_curve(Potential::zero(), golden(), 0.0, 100, {0.0});
  CHECK_THROWS_AS(thouless_lyapunov(curve, 0.0, 0.5), TooCloseToSpectrum);
}

TEST_CASE("free counting increments scale linearly in eta") {
  // A generic bulk energy of the free spectrum; spacing there is ~1.5e-3.
  std::vector<double> etas = {1e-2, 5e-3, 2.5e-3, 1.25e-3};
  HolderFit fit = holder_fit(Potential::zero(), golden(), 0.0, 4096, 0.013, etas);
  CHECK(fit.exponent == doctest::Approx(1.0).epsilon(0.15));
  CHECK(fit.r_squared > 0.9);
  CHECK(fit.etas.size() == 4);
  CHECK(fit.increments.size() == 4);
}

TEST_CASE("off-spectrum window floors at the resolution quantum") {
  std::vector<double> etas = {1e-2, 5e-3, 2.5e-3};
  CHECK_THROWS_AS(holder_fit(Potential::zero(), golden(), 0.0, 4096, 5.0, etas),
                  ResolutionFloor);
}

TEST_CASE("eta below the resolution quantum is rejected") {
  std::vector<double> etas = {1e-2, 1e-5};
  CHECK_THROWS_AS(holder_fit(Potential::zero(), golden(), 0.0, 1024, 0.0, etas),
                  std::invalid_argument);
}
