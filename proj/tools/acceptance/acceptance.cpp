#include "acceptance/acceptance.hpp"

#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

#include "acceptance/oracles.hpp"
#include "qps/annulus_green.hpp"
#include "qps/cocycle.hpp"
#include "qps/finite_operator.hpp"
#include "qps/frequency.hpp"
#include "qps/ids.hpp"
#include "qps/ldt.hpp"
#include "qps/lyapunov.hpp"
#include "qps/potential.hpp"
#include "qps/riesz.hpp"

namespace qps::acceptance {

namespace {

using oracle::DetRng;
using std::complex;

constexpr double kPi = 3.14159265358979323846;

std::string strf(const char* fmt, ...) {
  char buf[1024];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return std::string(buf);
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw Failure(msg);
}

// Measurements shared across criteria (the band-decomposition budget reuses
// the small-k constant measured by the Fourier-decay criterion).
struct Shared {
  std::optional<double> c_v1;
};

// Measured small-k constant for the lambda = 3 corpus at m = 500 together
// with its analytic budget 2 (sup log ||M|| + sup log ||M^{-1}||).
struct SmallK {
  double measured = 0.0;
  double budget = 0.0;
};

SmallK measure_small_k(const Frequency& om) {
  Cocycle c(Potential::amo(3.0), 0.0, om);
  PhaseField field = sample_field(c, 500, 0.0, 2048);
  FourierSpectrum spec = fourier(field);
  double measured = small_k_constant(spec, om, 500, 20);
  double sup_log_m = 0.0, sup_log_minv = 0.0;
  const long grid = 8192;
  for (long j = 0; j < grid; ++j) {
    Mat2 s = transfer_step(c, static_cast<double>(j) / grid);
    sup_log_m = std::max(sup_log_m, std::log(s.opnorm()));
    complex<double> det = s.det();
    Mat2 inv{s.d / det, -s.b / det, -s.c / det, s.a / det};
    sup_log_minv = std::max(sup_log_minv, std::log(inv.opnorm()));
  }
  return {measured, 2.0 * (sup_log_m + sup_log_minv)};
}

// --- criterion bodies: return the PASS detail string, throw Failure to fail.

std::string crit_sturm_exactness(Shared&) {
  DetRng rng(101);
  long checks = 0;
  for (int inst = 0; inst < 100; ++inst) {
    long n = rng.uniform_int(2, 200);
    std::vector<double> diag(static_cast<size_t>(n));
    for (auto& d : diag) d = rng.uniform(-3.0, 3.0);
    FiniteOperator op{diag, 0.0, "random-corpus"};
    std::vector<double> evs =
        oracle::ql_eigenvalues(diag, std::vector<double>(static_cast<size_t>(n - 1), 1.0));
    for (int t = 0; t < 5; ++t) {
      double e;
      bool near;
      do {
        e = rng.uniform(-4.5, 4.5);
        near = false;
        for (double ev : evs)
          if (std::abs(e - ev) < 1e-7) near = true;
      } while (near);
      long want = 0;
      for (double ev : evs)
        if (ev < e) ++want;
      long got = eigen_count(op, e);
      require(got == want, strf("instance %d (N=%ld, E=%.6f): count %ld vs oracle %ld", inst,
                                n, e, got, want));
      ++checks;
    }
  }
  return strf("%ld/%ld strict counts equal the QL-diagonalization oracle (tolerance: exact)",
              checks, checks);
}

std::string crit_green_averages(Shared&) {
  AnnulusGreen g(2.0);
  DetRng rng(202);
  double worst_circle = 0.0, worst_gamma = 0.0, worst_sym = 0.0, worst_rot = 0.0,
         worst_refl = 0.0;
  for (int i = 0; i < 50; ++i) {
    double r = rng.uniform(0.55, 1.9);
    double rho;
    do {
      rho = rng.uniform(0.55, 1.9);
    } while (std::abs(std::log(rho / r)) < 0.05);
    complex<double> w = std::polar(rho, 2.0 * kPi * rng.uniform());

    worst_circle = std::max(
        worst_circle,
        std::abs(g.circle_average_quadrature(r, w, 2048) - g.circle_average_closed(r, w)));
    worst_gamma = std::max(
        worst_gamma,
        std::abs(g.gamma_average_quadrature(r, w, 2048) - g.gamma_average_closed(r, w)));

    complex<double> z;
    do {
      z = std::polar(r, 2.0 * kPi * rng.uniform());
    } while (std::abs(z - w) < 1e-3);
    complex<double> a = std::polar(1.0, 2.0 * kPi * rng.uniform());
    worst_sym = std::max(worst_sym, std::abs(g.green(z, w) - g.green(w, z)));
    worst_rot = std::max(worst_rot, std::abs(g.green(a * z, a * w) - g.green(z, w)));
    // Reflection through the unit circle swaps the two boundary components.
    worst_refl = std::max(
        worst_refl,
        std::abs(g.green(1.0 / std::conj(z), 1.0 / std::conj(w)) - g.green(z, w)));
    worst_refl =
        std::max(worst_refl, std::abs(g.green(std::conj(z), std::conj(w)) - g.green(z, w)));
  }
  require(worst_circle <= 1e-8, strf("circle-average gap %.3e > 1e-8", worst_circle));
  require(worst_gamma <= 1e-8, strf("harmonic-part average gap %.3e > 1e-8", worst_gamma));
  require(worst_sym <= 1e-12, strf("symmetry gap %.3e > 1e-12", worst_sym));
  require(worst_rot <= 1e-12, strf("rotation gap %.3e > 1e-12", worst_rot));
  require(worst_refl <= 1e-12, strf("reflection gap %.3e > 1e-12", worst_refl));
  return strf("50 samples at R=2: averages within %.1e (tol 1e-8); "
              "symmetry/rotation/reflection within %.1e (tol 1e-12)",
              std::max(worst_circle, worst_gamma),
              std::max({worst_sym, worst_rot, worst_refl}));
}

std::string crit_green_fourier(Shared&) {
  AnnulusGreen g(2.0);
  DetRng rng(303);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    long k = (rng.uniform() < 0.5 ? -1 : 1) * rng.uniform_int(1, 40);
    double rho;
    do {
      rho = rng.uniform(0.55, 1.9);
    } while (std::abs(std::log(rho)) < 0.05);
    complex<double> w = std::polar(rho, 2.0 * kPi * rng.uniform());
    complex<double> closed = g.fourier_closed(k, w);
    complex<double> quad = g.fourier_quadrature(k, w, 2048);
    worst = std::max(worst, std::abs(closed - quad));
    double bound = g.fourier_bound(k);
    require(std::abs(closed) <= bound + 1e-15,
            strf("k=%ld closed-form coefficient %.3e exceeds bound %.3e", k,
                 std::abs(closed), bound));
    require(std::abs(quad) <= bound + 1e-10,
            strf("k=%ld quadrature coefficient %.3e exceeds bound %.3e", k, std::abs(quad),
                 bound));
  }
  require(worst <= 1e-10, strf("closed-form vs quadrature gap %.3e > 1e-10", worst));
  return strf("50 modes |k|<=40: closed form vs quadrature within %.1e (tol 1e-10); "
              "decay bound never violated",
              worst);
}

std::string crit_acceleration(Shared&) {
  Cocycle c(Potential::amo(3.0), 0.0, Frequency::golden());
  AccelerationEstimate est = acceleration(c, 1000, 0.01, 0.05, 5, 2048);
  require(std::abs(est.slope - 1.0) < 0.05,
          strf("slope %.4f outside 1 +- 0.05", est.slope));
  return strf("slope %.4f, nearest integer %ld, residual %.4f (tol: |slope-1| < 0.05)",
              est.slope, est.nearest_integer, est.residual);
}

std::string crit_lyapunov_value(Shared&) {
  Cocycle c(Potential::amo(3.0), 0.0, Frequency::golden());
  double lm = finite_lyapunov(c, 1000, 0.0, 2048);
  double target = std::log(3.0);
  require(std::abs(lm - target) < 0.05,
          strf("L_m = %.5f vs log 3 = %.5f (tol 0.05)", lm, target));
  return strf("L_m(E=0) = %.5f vs log 3 = %.5f, gap %.2e (tol 0.05)", lm, target,
              std::abs(lm - target));
}

std::string crit_transfer_identities(Shared&) {
  Frequency om = Frequency::golden();
  Cocycle c(Potential::amo(3.0), 0.4, om);
  DetRng rng(606);

  double worst_det = 0.0;
  for (int i = 0; i < 20; ++i) {
    TransferProduct p = transfer_product(c, rng.uniform(), 1000);
    worst_det = std::max(worst_det, std::abs(p.det_log_residual()));
  }
  require(worst_det < 1e-9, strf("det log residual %.3e > 1e-9 at m=1000", worst_det));

  // Matrix entries against the determinant recurrences, m <= 30: the product
  // is [[P_m(t), -P_{m-1}(t+w)], [P_{m-1}(t), -P_{m-2}(t+w)]].
  double worst_entry = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    double theta = rng.uniform();
    std::vector<double> phases = orbit_phases(om, theta, 31);
    std::vector<LogComplex> pre_t = dirichlet_prefix(c, phases[0], 30);
    std::vector<LogComplex> pre_s = dirichlet_prefix(c, phases[1], 29);
    Mat2 m_acc = Mat2::identity();
    for (long m = 1; m <= 30; ++m) {
      m_acc = transfer_step(c, phases[static_cast<size_t>(m - 1)]) * m_acc;
      complex<double> want_a = pre_t[static_cast<size_t>(m)].value();
      complex<double> want_c = pre_t[static_cast<size_t>(m - 1)].value();
      complex<double> want_b = -pre_s[static_cast<size_t>(m - 1)].value();
      complex<double> want_d = m >= 2 ? -pre_s[static_cast<size_t>(m - 2)].value()
                                      : complex<double>(0.0);
      double scale = std::max(
          {std::abs(want_a), std::abs(want_b), std::abs(want_c), std::abs(want_d), 1.0});
      double gap = std::max({std::abs(m_acc.a - want_a), std::abs(m_acc.b - want_b),
                             std::abs(m_acc.c - want_c), std::abs(m_acc.d - want_d)}) /
                   scale;
      worst_entry = std::max(worst_entry, gap);
    }
  }
  require(worst_entry < 5e-11,
          strf("entry-vs-determinant gap %.3e > 5e-11 at m<=30", worst_entry));

  // Unit-determinant identity P_{m-1}(t) P_{m-1}(t+w) - P_m(t) P_{m-2}(t+w) = 1
  // in log-scaled form at m = 1000: both products agree to 1e-8 relative
  // (their difference, 1, is below resolution at this magnitude).
  double worst_log = 0.0, worst_phase = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    double theta = rng.uniform();
    double theta_w = orbit_phases(om, theta, 2)[1];
    std::vector<LogComplex> pt = dirichlet_prefix(c, theta, 1000);
    std::vector<LogComplex> ps = dirichlet_prefix(c, theta_w, 999);
    require(!pt[999].is_zero() && !pt[1000].is_zero() && !ps[999].is_zero() &&
                !ps[998].is_zero(),
            "determinant vanished on a random phase (retry corpus)");
    double log_a = pt[999].log_mag + ps[999].log_mag;
    double log_b = pt[1000].log_mag + ps[998].log_mag;
    complex<double> ph_a = pt[999].phase * ps[999].phase;
    complex<double> ph_b = pt[1000].phase * ps[998].phase;
    worst_log = std::max(worst_log, std::abs(log_a - log_b));
    worst_phase = std::max(worst_phase, std::abs(ph_a - ph_b));
  }
  require(worst_log < 1e-8 && worst_phase < 1e-8,
          strf("log-scaled determinant identity gap %.3e / phase gap %.3e > 1e-8", worst_log,
               worst_phase));
  return strf("det recon %.1e (tol 1e-9); entries vs recurrence %.1e (tol 5e-11); "
              "identity log gap %.1e (tol 1e-8)",
              worst_det, worst_entry, worst_log);
}

std::string crit_thouless(Shared&) {
  Frequency om = Frequency::golden();
  Potential amo3 = Potential::amo(3.0);
  IDSCurve curve = ids_curve(amo3, om, 0.31831, 2048, {0.0});
  DetRng rng(707);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    double e = rng.uniform(-7.5, 7.5);
    double l_th = thouless_lyapunov(curve, e, 1e-6);
    double l_m = finite_lyapunov(Cocycle(amo3, e, om), 1000, 0.0, 1024);
    worst = std::max(worst, std::abs(l_th - l_m));
    require(std::abs(l_th - l_m) < 0.05,
            strf("E=%.4f: eigenvalue-sum value %.5f vs quadrature value %.5f (tol 0.05)", e,
                 l_th, l_m));
  }
  return strf("20 energies: max |eigenvalue-sum - quadrature| = %.4f (tol 0.05)", worst);
}

std::string crit_trace_bound(Shared&) {
  Frequency om = Frequency::golden();
  Potential amo3 = Potential::amo(3.0);
  DetRng rng(808);
  double tightest = 1e300;
  for (int i = 0; i < 20; ++i) {
    double e = rng.uniform(-8.0, 8.0);
    double eta = std::exp(rng.uniform(std::log(1e-3), 0.0));
    FiniteOperator op = finite_operator(amo3, om, rng.uniform(), 1024);
    GreenTraceBound tb = green_trace_bound(op, e, eta);
    require(tb.d_n <= tb.bound + 1e-12,
            strf("E=%.4f eta=%.2e: count %.6f exceeds trace bound %.6f", e, eta, tb.d_n,
                 tb.bound));
    tightest = std::min(tightest, tb.bound - tb.d_n);
  }
  return strf("20 random (E, eta): count <= trace bound every time (min slack %.3e, "
              "tol 1e-12)",
              tightest);
}

std::string crit_decoupling(Shared&) {
  Frequency om = Frequency::golden();
  Potential amo3 = Potential::amo(3.0);
  DetRng rng(909);
  double worst_oracle = 0.0, worst_dec = 0.0;
  for (int i = 0; i < 20; ++i) {
    FiniteOperator op = finite_operator(amo3, om, rng.uniform(), 64);
    complex<double> z(rng.uniform(-7.0, 7.0), rng.uniform(0.05, 0.5));
    long k = rng.uniform_int(0, 63);
    long a = rng.uniform_int(0, k);
    long b = rng.uniform_int(k, 63);
    std::vector<complex<double>> col = oracle::dense_resolvent_column(op.diagonal, z, k);
    complex<double> direct = green_diagonal(op, z, k);
    double oracle_gap =
        std::abs(direct - col[static_cast<size_t>(k)]) / (1.0 + std::abs(col[static_cast<size_t>(k)]));
    worst_oracle = std::max(worst_oracle, oracle_gap);
    double dec = resolvent_decoupling_check(op, z, k, a, b);
    worst_dec = std::max(worst_dec, dec);
    require(oracle_gap < 1e-8,
            strf("instance %d: dense-oracle gap %.3e > 1e-8", i, oracle_gap));
    require(dec < 1e-8, strf("instance %d: decoupling discrepancy %.3e > 1e-8", i, dec));
  }
  return strf("20 windows at N=64: dense-oracle gap %.1e, decoupling discrepancy %.1e "
              "(tol 1e-8)",
              worst_oracle, worst_dec);
}

std::string crit_fourier_decay(Shared& shared) {
  Frequency om = Frequency::golden();
  Cocycle c(Potential::amo(3.0), 0.0, om);
  PhaseField field = sample_field(c, 500, 0.0, 2048);
  FourierSpectrum spec = fourier(field);

  std::vector<double> eps_list;
  for (int i = 1; i <= 10; ++i) eps_list.push_back(0.01 * i);
  LyapunovProfile prof = profile(c, 500, eps_list, 1024);
  double eps0 = linearity_window(prof, 0.01);
  if (eps0 <= 0.0) eps0 = 0.05;
  double r = std::exp(2.0 * kPi * eps0);

  DecayReport rep = decay_check(spec, 1, r, 0.1, 2, 200, 10.0);
  require(std::isfinite(rep.c_fit) && rep.c_fit >= 0.0,
          strf("fitted C not finite: %.3e", rep.c_fit));
  require(rep.violations.empty(),
          strf("%zu modes violate the decay bound at C = 10 (first k=%ld)",
               rep.violations.size(), rep.violations.empty() ? 0 : rep.violations.front()));

  SmallK sk = measure_small_k(om);
  require(sk.measured <= sk.budget,
          strf("small-k constant %.4f exceeds budget %.4f", sk.measured, sk.budget));
  shared.c_v1 = sk.measured;
  return strf("k in [2,200]: C_fit = %.3f, 0 violations at C = 10 (window eps0 = %.3f); "
              "small-k constant %.4f <= budget %.4f",
              rep.c_fit, eps0, sk.measured, sk.budget);
}

std::string crit_band_decomposition(Shared& shared) {
  Frequency om = Frequency::golden();
  Cocycle c(Potential::amo(4.0), 0.0, om);
  PhaseField field = sample_field(c, 987, 0.0, 2048);
  BandDecomposition bd = band_decomposition(field, om, 0.3);

  double c_v1 = shared.c_v1 ? *shared.c_v1 : measure_small_k(om).measured;
  require(bd.completeness_residual < 1e-8,
          strf("completeness residual %.3e > 1e-8", bd.completeness_residual));
  double u1_budget = c_v1 * 0.3;
  require(bd.sup_norms[0] <= u1_budget,
          strf("|U1| = %.5f exceeds measured-constant budget %.5f", bd.sup_norms[0],
               u1_budget));
  double u4_budget = 2.0 * 1.0 * bd.scale.beta_n + 5.0 * 0.3;
  require(bd.sup_norms[3] <= u4_budget,
          strf("|U4| = %.5f exceeds 2 kappa beta_n + 5 delta = %.5f", bd.sup_norms[3],
               u4_budget));
  return strf("m=987 delta=0.3: residual %.1e (tol 1e-8); |U1| %.4f <= %.4f; "
              "|U4| %.4f <= %.4f (beta_n %.4f)",
              bd.completeness_residual, bd.sup_norms[0], u1_budget, bd.sup_norms[3],
              u4_budget, bd.scale.beta_n);
}

std::string crit_ldt_trend(Shared&) {
  Frequency om = Frequency::golden();
  Potential amo4 = Potential::amo(4.0);
  Cocycle c(amo4, 0.0, om);
  PhaseField fields[3];
  double meas[3];
  long ms[3] = {200, 400, 800};
  for (int i = 0; i < 3; ++i) {
    fields[i] = sample_field(c, ms[i], 0.0, 2048);
    meas[i] = deviation_measure(fields[i], 0.2);
  }
  // Decreasing along m at the pinned threshold; ties are only legitimate at
  // zero, where the deviation sets are already empty and cannot shrink.
  for (int i = 0; i + 1 < 3; ++i) {
    require(meas[i + 1] <= meas[i],
            strf("deviation measure increases along m: %.4f, %.4f, %.4f", meas[0], meas[1],
                 meas[2]));
    require(meas[i] == 0.0 || meas[i + 1] < meas[i],
            strf("deviation measure stalls at %.4f between m=%ld and m=%ld", meas[i], ms[i],
                 ms[i + 1]));
  }
  require(meas[2] < 0.01, strf("measure at m=800 is %.4f (tol < 0.01)", meas[2]));
  // Non-vacuous witness of the same trend: a threshold just below the m=200
  // sup-deviation has positive measure there and must lose it by m=800.
  double t0 = 0.9 * fields[0].sup_deviation();
  double shrink_from = deviation_measure(fields[0], t0);
  double shrink_to = deviation_measure(fields[2], t0);
  require(shrink_from > 0.0 && shrink_to < shrink_from,
          strf("measure at t=%.4f fails to shrink: %.5f -> %.5f", t0, shrink_from, shrink_to));

  double mean800 = fields[2].mean();
  Cocycle cc(amo4, complex<double>(0.0, 1e-8), om);
  EtaComplianceInput comp{1.0, match_scale(om, 800, 0.1).beta_n, 1.0, 0.1};
  ComplexDeviation dev = deviation_measure_complex(cc, 800, mean800 - 0.3, 2048, comp);
  require(dev.measure < 0.02,
          strf("one-sided complex-energy measure %.4f (tol < 0.02)", dev.measure));
  return strf("t=0.2: measures %.4f >= %.4f >= %.4f, last < 0.01 (t=%.3f: %.4f -> %.4f); "
              "complex eta=1e-8 one-sided measure %.4f < 0.02",
              meas[0], meas[1], meas[2], t0, shrink_from, shrink_to, dev.measure);
}

std::string crit_riesz_mass(Shared&) {
  Cocycle c(Potential::amo(3.0), 0.0, Frequency::golden());
  RieszMassEstimate in_band = riesz_mass(c, 600, 0.02, 0.05, 1024);
  RieszMassEstimate straddle = riesz_mass(c, 600, 0.0, 0.03, 1024);
  require(std::abs(in_band.mass) < 0.05,
          strf("in-window band mass %.4f (tol |mass| < 0.05)", in_band.mass));
  require(std::abs(straddle.mass - 2.0) < 0.2,
          strf("straddling band mass %.4f vs 2 (tol 0.2)", straddle.mass));
  require(in_band.mass <= 2.3 && straddle.mass <= 2.3,
          strf("band mass exceeds 2 kappa + 0.3 = 2.3: %.4f / %.4f", in_band.mass,
               straddle.mass));
  return strf("in-window mass %.4f (tol 0.05); straddling mass %.4f vs 2 (tol 0.2); "
              "both <= 2.3",
              in_band.mass, straddle.mass);
}

double median_energy(const Potential& pot, const Frequency& om, double theta, long n) {
  FiniteOperator op = finite_operator(pot, om, theta, n);
  double spread = 2.0 + pot.coeff_abs_sum() + 1e-3;
  double lo = -spread, hi = spread;
  long target = n / 2;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    if (eigen_count(op, mid) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::string crit_holder(Shared&) {
  Frequency om = Frequency::golden();
  Potential amo3 = Potential::amo(3.0);
  const long n = 8192;
  std::vector<double> etas;
  for (double eta = 1e-2; eta >= 4.0 / static_cast<double>(n); eta /= 2.0)
    etas.push_back(eta);

  double e_amo = median_energy(amo3, om, 0.231, n);
  HolderFit fit = holder_fit(amo3, om, 0.231, n, e_amo, etas);
  require(fit.exponent >= 0.1,
          strf("fitted exponent %.4f < 0.1 (E=%.6f)", fit.exponent, e_amo));
  require(fit.r_squared >= 0.8, strf("fit r^2 = %.4f < 0.8", fit.r_squared));

  // Free-Laplacian control: the IDS is C^1 in the bulk, so increments scale
  // linearly in eta.  Counts in the smallest admissible window hold only ~2
  // eigenvalues, so a single-energy fit is dominated by integer granularity;
  // averaging the increments over a grid of bulk energies recovers the smooth
  // scaling the control is meant to exhibit.
  FiniteOperator free_op = finite_operator(Potential::zero(), om, 0.231, n);
  std::vector<double> log_eta, log_inc;
  for (double eta : etas) {
    double acc = 0.0;
    int n_energies = 17;
    for (int i = 0; i < n_energies; ++i) {
      double e0 = -1.2 + 0.15 * static_cast<double>(i);
      acc += static_cast<double>(eigen_count(free_op, e0 + eta) - eigen_count(free_op, e0 - eta));
    }
    acc /= static_cast<double>(n_energies) * static_cast<double>(n);
    require(acc > 0.0, strf("empty control window at eta=%.2e", eta));
    log_eta.push_back(std::log(eta));
    log_inc.push_back(std::log(acc));
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  double np = static_cast<double>(log_eta.size());
  for (std::size_t i = 0; i < log_eta.size(); ++i) {
    sx += log_eta[i];
    sy += log_inc[i];
    sxx += log_eta[i] * log_eta[i];
    sxy += log_eta[i] * log_inc[i];
  }
  double slope0 = (np * sxy - sx * sy) / (np * sxx - sx * sx);
  require(std::abs(slope0 - 1.0) <= 0.1,
          strf("free-Laplacian control exponent %.4f outside 1 +- 0.1", slope0));
  return strf("exponent %.3f (>= 0.1), r^2 %.3f (>= 0.8) at E = %.5f; free control "
              "exponent %.3f (1 +- 0.1, averaged over 17 bulk energies)",
              fit.exponent, fit.r_squared, e_amo, slope0);
}

std::string crit_arithmetic(Shared&) {
  DetRng rng(1515);
  long freq_count = 30, identity_checks = 0, best_checks = 0;
  for (long f = 0; f < freq_count; ++f) {
    int len = static_cast<int>(rng.uniform_int(8, 14));
    std::vector<BigInt> qs;
    for (int i = 0; i < len; ++i) qs.emplace_back(rng.uniform_int(1, 9));
    Frequency om = Frequency::from_quotients(qs);
    std::vector<Convergent> cv = convergents(om, len);

    // Exact integer recurrences and the coprimality cross identity.
    for (int i = 1; i < len; ++i) {
      BigInt q_prev = i >= 2 ? cv[static_cast<size_t>(i - 2)].q : BigInt(1);
      BigInt p_prev = i >= 2 ? cv[static_cast<size_t>(i - 2)].p : BigInt(0);
      require(cv[static_cast<size_t>(i)].q ==
                  qs[static_cast<size_t>(i)] * cv[static_cast<size_t>(i - 1)].q + q_prev,
              strf("frequency %ld: denominator recurrence fails at level %d", f, i + 1));
      require(cv[static_cast<size_t>(i)].p ==
                  qs[static_cast<size_t>(i)] * cv[static_cast<size_t>(i - 1)].p + p_prev,
              strf("frequency %ld: numerator recurrence fails at level %d", f, i + 1));
      BigInt cross = cv[static_cast<size_t>(i)].p * cv[static_cast<size_t>(i - 1)].q -
                     cv[static_cast<size_t>(i - 1)].p * cv[static_cast<size_t>(i)].q;
      require(cross == 1 || cross == -1,
              strf("frequency %ld: cross identity != +-1 at level %d", f, i + 1));
    }

    // Lattice identity |q_{n-1} w| = a_{n+1} |q_n w| + |q_{n+1} w| to 1e-25.
    for (int n = 2; n + 1 <= len; ++n) {
      FixedFrac d_prev = torus_dist_exact(cv[static_cast<size_t>(n - 2)].q, om);
      FixedFrac d_n = torus_dist_exact(cv[static_cast<size_t>(n - 1)].q, om);
      FixedFrac d_next = torus_dist_exact(cv[static_cast<size_t>(n)].q, om);
      BigInt diff = qs[static_cast<size_t>(n)] * d_n.numerator() + d_next.numerator() -
                    d_prev.numerator();
      double resid = std::abs(ratio_to_double(diff, d_n.bits()));
      require(resid <= 1e-25,
              strf("frequency %ld: lattice identity residual %.2e > 1e-25 at level %d", f,
                   resid, n));
      ++identity_checks;
    }

    // Best approximation, exhaustive below 1e4.
    for (int n = 1; n < len; ++n) {
      const BigInt& q_next = cv[static_cast<size_t>(n)].q;
      if (q_next > 10000) break;
      const BigInt& q_n = cv[static_cast<size_t>(n - 1)].q;
      BigInt best_num = torus_dist_exact(q_n, om).numerator();
      for (BigInt j = 1; j < q_next; ++j) {
        require(torus_dist_exact(j, om).numerator() >= best_num,
                strf("frequency %ld: |j w| < |q_n w| for j below q_{n+1}", f));
        ++best_checks;
      }
    }
  }

  // Fejer kernel bounds on sampled (Q, q) pairs, Q >= q.
  std::vector<Frequency> oms = {Frequency::golden(), Frequency::sqrt2()};
  double worst_fr1 = 0.0;
  for (const Frequency& om : oms) {
    BigInt q_pick(0);
    std::vector<Convergent> cv = convergents(om, om.levels());
    for (size_t i = 1; i < cv.size(); ++i)
      if (cv[i - 1].q >= 30 && cv[i - 1].q <= 300 && q_pick == 0) q_pick = cv[i - 1].q;
    long q = static_cast<long>(q_pick);
    for (long big_q : {q, 3 * q}) {
      // Pointwise kernel bound.
      for (long k = 1; k <= 400; ++k) {
        double fq = fejer(big_q, BigInt(k), om);
        double t = torus_norm(k, om);
        double cap = std::min(1.0, 2.0 / (1.0 + static_cast<double>(big_q) *
                                                    static_cast<double>(big_q) * t * t));
        require(fq >= -1e-12 && fq <= cap + 1e-12,
                strf("kernel bound fails at Q=%ld k=%ld: F=%.6f cap=%.6f", big_q, k, fq,
                     cap));
        worst_fr1 = std::max(worst_fr1, fq - cap);
      }
      // Small-mode sum bound.
      double s = 0.0;
      for (long k = 1; k < q / 4; ++k) {
        double t = torus_norm(k, om);
        s += 2.0 / (1.0 + static_cast<double>(big_q) * static_cast<double>(big_q) * t * t);
      }
      require(s <= 2.0 * kPi * static_cast<double>(q) / static_cast<double>(big_q) + 1e-12,
              strf("small-mode sum %.4f exceeds 2 pi q/Q at Q=%ld q=%ld", s, big_q, q));
      // Per-block sums.
      for (long blk = 0; blk < 5; ++blk) {
        double sb = 0.0;
        for (long k = std::max(blk * q, 1L); k < (blk + 1) * q; ++k) {
          double t = torus_norm(k, om);
          sb += 1.0 / (1.0 + static_cast<double>(big_q) * static_cast<double>(big_q) * t * t);
        }
        require(sb <= 2.0 + 2.0 * kPi * static_cast<double>(q) / static_cast<double>(big_q) +
                          1e-12,
                strf("block sum %.4f exceeds 2 + 2 pi q/Q at block %ld", sb, blk));
      }
    }
  }
  return strf("30 frequencies: integer recurrences exact, %ld lattice identities within "
              "1e-25, %ld best-approximation comparisons exact; kernel bounds hold "
              "(max excess %.1e)",
              identity_checks, best_checks, worst_fr1);
}

}  // namespace

std::vector<CriterionResult> run_suite(std::ostream& out) {
  struct Entry {
    const char* name;
    std::string (*body)(Shared&);
  };
  const Entry entries[] = {
      {"sturm-count-exactness", crit_sturm_exactness},
      {"annulus-green-averages", crit_green_averages},
      {"annulus-green-fourier", crit_green_fourier},
      {"acceleration-quantization", crit_acceleration},
      {"lyapunov-ground-truth", crit_lyapunov_value},
      {"transfer-identities", crit_transfer_identities},
      {"thouless-consistency", crit_thouless},
      {"green-trace-bound", crit_trace_bound},
      {"resolvent-decoupling", crit_decoupling},
      {"fourier-decay", crit_fourier_decay},
      {"band-decomposition", crit_band_decomposition},
      {"ldt-decay-trend", crit_ldt_trend},
      {"riesz-mass", crit_riesz_mass},
      {"holder-regime", crit_holder},
      {"arithmetic-identities", crit_arithmetic},
  };
  std::vector<CriterionResult> results;
  Shared shared;
  int idx = 0;
  for (const Entry& e : entries) {
    ++idx;
    CriterionResult r;
    r.index = idx;
    r.name = e.name;
    try {
      r.detail = e.body(shared);
      r.passed = true;
    } catch (const std::exception& ex) {
      r.detail = ex.what();
      r.passed = false;
    }
    out << strf("[%2d/15] %s  %-28s %s\n", idx, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    out.flush();
    results.push_back(std::move(r));
  }
  int failures = count_failures(results);
  out << strf("%d/15 criteria passed\n", 15 - failures);
  return results;
}

int count_failures(const std::vector<CriterionResult>& results) {
  int n = 0;
  for (const auto& r : results)
    if (!r.passed) ++n;
  return n;
}

}  // namespace qps::acceptance
