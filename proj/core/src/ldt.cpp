#include "qps/ldt.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qps/fft.hpp"
#include "qps/reduction.hpp"

namespace qps {

double deviation_measure(const PhaseField& field, double t) {
  if (t < 0.0) throw std::invalid_argument("deviation_measure: t must be >= 0");
  double mu = field.mean();
  long hits = 0;
  for (double v : field.values)
    if (std::abs(v - mu) > t) ++hits;
  return static_cast<double>(hits) / static_cast<double>(field.values.size());
}

ComplexDeviation deviation_measure_complex(const Cocycle& c, long m, double threshold,
                                           long n_theta, const EtaComplianceInput& compliance) {
  PhaseField field = sample_field(c, m, 0.0, n_theta);
  ComplexDeviation out;
  out.eta = c.energy.imag();
  double exponent = -2.0 * static_cast<double>(m) *
                    (compliance.kappa * compliance.beta_n + 2.0 * compliance.C * compliance.delta);
  out.eta_bound = std::exp(exponent);
  out.eta_compliant = std::abs(out.eta) <= out.eta_bound;
  long hits = 0;
  for (double v : field.values)
    if (v < threshold) ++hits;
  out.measure = static_cast<double>(hits) / static_cast<double>(field.values.size());
  return out;
}

namespace {

// Fejer multiplier per |k| up to the Nyquist index (F_Q is even in k).
std::vector<double> fejer_table(long Q, const Frequency& om, long n) {
  std::vector<double> table(static_cast<std::size_t>(n / 2) + 1);
  for (long k = 0; k <= n / 2; ++k) table[static_cast<std::size_t>(k)] = fejer(Q, BigInt(k), om);
  return table;
}

long signed_mode(long idx, long n) { return idx <= n / 2 ? idx : idx - n; }

std::vector<double> real_parts(const std::vector<std::complex<double>>& z) {
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i].real();
  return out;
}

}  // namespace

PhaseField fejer_smooth(const PhaseField& field, long Q, const Frequency& om,
                        SmoothingMode mode, const Cocycle* reevaluate) {
  if (Q < 1) throw std::invalid_argument("fejer_smooth: Q must be >= 1");
  long n = field.n_theta;
  PhaseField out = field;
  if (Q == 1) return out;

  std::vector<double> weights(static_cast<std::size_t>(2 * Q - 1));
  for (long j = -(Q - 1); j <= Q - 1; ++j)
    weights[static_cast<std::size_t>(j + Q - 1)] =
        static_cast<double>(Q - std::abs(j)) / static_cast<double>(Q * Q);

  if (mode == SmoothingMode::kSpectral) {
    std::vector<std::complex<double>> coeffs =
        fourier_forward({field.values.begin(), field.values.end()});
    std::vector<double> table = fejer_table(Q, om, n);
    for (long i = 0; i < n; ++i) {
      long k = std::labs(signed_mode(i, n));
      coeffs[static_cast<std::size_t>(i)] *= table[static_cast<std::size_t>(k)];
    }
    out.values = real_parts(fourier_inverse(coeffs));
    return out;
  }

  // Shift fractions j*omega for j = -(Q-1)..(Q-1).
  std::vector<double> shift_frac(static_cast<std::size_t>(2 * Q - 1));
  for (long j = -(Q - 1); j <= Q - 1; ++j)
    shift_frac[static_cast<std::size_t>(j + Q - 1)] =
        j == 0 ? 0.0 : om.frac().times_int_mod1(j).to_double();

  if (mode == SmoothingMode::kNearestGrid) {
    std::vector<long> offsets(shift_frac.size());
    for (std::size_t i = 0; i < shift_frac.size(); ++i)
      offsets[i] = std::lround(shift_frac[i] * static_cast<double>(n)) % n;
    out.values = parallel_map(static_cast<std::size_t>(n), [&](std::size_t j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < offsets.size(); ++i) {
        long idx = (static_cast<long>(j) + offsets[i]) % n;
        acc += weights[i] * field.values[static_cast<std::size_t>(idx)];
      }
      return acc;
    });
    return out;
  }

  if (reevaluate == nullptr)
    throw std::invalid_argument("fejer_smooth: transfer mode needs the cocycle");
  const Cocycle& c = *reevaluate;
  std::vector<double> orbit = omega_multiples(c.frequency, field.m);
  double inv_m = 1.0 / static_cast<double>(field.m);
  double inv_n = 1.0 / static_cast<double>(n);
  out.values = parallel_map(static_cast<std::size_t>(n), [&](std::size_t j) {
    double theta = static_cast<double>(j) * inv_n;
    double acc = 0.0;
    for (std::size_t i = 0; i < shift_frac.size(); ++i) {
      double u = transfer_product_shifted(c, theta + shift_frac[i], orbit, field.m, field.eps)
                     .log_norm *
                 inv_m;
      acc += weights[i] * u;
    }
    return acc;
  });
  return out;
}

ScaleMatch match_scale(const Frequency& om, long m, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("match_scale: delta in (0,1)");
  std::vector<Convergent> conv = convergents(om, om.levels());
  double inv_d2 = 1.0 / (delta * delta);
  ScaleMatch best;
  bool have_best = false;
  for (std::size_t i = 0; i + 1 < conv.size(); ++i) {
    double qn = to_double_sat(conv[i].q);
    double qn1 = to_double_sat(conv[i + 1].q);
    double beta = log_big(conv[i + 1].q) / qn;
    double lo = inv_d2 * (beta + 1.0) * qn;
    double hi = inv_d2 * (beta + 1.0) * qn1;
    if (lo <= static_cast<double>(m)) {
      best.n = conv[i].index;
      best.beta_n = beta;
      best.q_n = conv[i].q;
      best.q_n1 = conv[i + 1].q;
      have_best = true;
      if (static_cast<double>(m) < hi) {
        best.matched = true;
        return best;
      }
    }
  }
  if (!have_best && !conv.empty()) {
    best.n = conv[0].index;
    best.q_n = conv[0].q;
    best.q_n1 = conv.size() > 1 ? conv[1].q : conv[0].q;
    best.beta_n = conv.size() > 1 ? log_big(best.q_n1) / to_double_sat(best.q_n) : 0.0;
  }
  best.matched = false;
  return best;
}

BandDecomposition band_decomposition(const PhaseField& field, const Frequency& om, double delta) {
  long n = field.n_theta;
  long m = field.m;
  long Q = static_cast<long>(std::floor(delta * static_cast<double>(m)));
  if (Q < 1) throw std::invalid_argument("band_decomposition: delta*m must be >= 1");

  BandDecomposition out;
  out.Q = Q;
  out.delta = delta;
  out.scale = match_scale(om, m, delta);
  out.scale_mismatch = !out.scale.matched;
  if (delta >= 1.0 / (out.scale.beta_n + 1.0))
    throw std::invalid_argument("band_decomposition: delta >= 1/(beta_n+1) at matched scale");

  double log_k7 = 4.0 * delta * delta * delta * delta * static_cast<double>(m);
  out.k7_cutoff = log_k7 < 700.0 ? std::exp(log_k7) : std::numeric_limits<double>::infinity();
  out.u7_beyond_nyquist = !(out.k7_cutoff <= static_cast<double>(n / 2));

  double k2_cut = 1.0 / (delta * delta);
  double q_n = to_double_sat(out.scale.q_n);
  double q_n1_4 = to_double_sat(out.scale.q_n1) / 4.0;
  bool qn_fits = out.scale.q_n <= BigInt(std::numeric_limits<long long>::max());
  long long qn_ll = qn_fits ? static_cast<long long>(out.scale.q_n) : 0;

  std::vector<std::complex<double>> coeffs =
      fourier_forward({field.values.begin(), field.values.end()});
  std::vector<double> table = fejer_table(Q, om, n);

  // Assign every nonzero mode to exactly one of U_2..U_7 by priority.
  std::array<std::vector<std::complex<double>>, 7> band_coeffs;
  for (auto& bc : band_coeffs) bc.assign(static_cast<std::size_t>(n), {0.0, 0.0});
  for (long i = 0; i < n; ++i) {
    long k = signed_mode(i, n);
    if (k == 0) continue;
    double ak = static_cast<double>(std::labs(k));
    int band;
    if (ak >= out.k7_cutoff)
      band = 7;
    else if (ak >= q_n1_4)
      band = 6;
    else if (ak <= k2_cut)
      band = 2;
    else if (ak < q_n)
      band = 3;
    else if (qn_fits && qn_ll > 0 && std::llabs(k) % qn_ll == 0)
      band = 4;
    else
      band = 5;
    band_coeffs[static_cast<std::size_t>(band - 1)][static_cast<std::size_t>(i)] =
        coeffs[static_cast<std::size_t>(i)] * table[static_cast<std::size_t>(std::labs(k))];
  }

  // U_1 = u - u^{(Q)} carries (1 - F_Q) across all modes.
  PhaseField smooth = fejer_smooth(field, Q, om, SmoothingMode::kSpectral);
  out.bands[0].resize(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j)
    out.bands[0][static_cast<std::size_t>(j)] =
        field.values[static_cast<std::size_t>(j)] - smooth.values[static_cast<std::size_t>(j)];

  for (int b = 2; b <= 7; ++b)
    out.bands[static_cast<std::size_t>(b - 1)] =
        real_parts(fourier_inverse(band_coeffs[static_cast<std::size_t>(b - 1)]));

  for (int b = 0; b < 7; ++b) {
    double sup = 0.0;
    for (double v : out.bands[static_cast<std::size_t>(b)]) sup = std::max(sup, std::abs(v));
    out.sup_norms[static_cast<std::size_t>(b)] = sup;
  }
  double l2 = 0.0;
  for (double v : out.bands[6]) l2 += v * v;
  out.u7_l2 = std::sqrt(l2 / static_cast<double>(n));

  double mu = field.mean();
  double worst = 0.0;
  for (long j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int b = 0; b < 7; ++b) sum += out.bands[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
    worst = std::max(worst, std::abs(sum - (field.values[static_cast<std::size_t>(j)] - mu)));
  }
  out.completeness_residual = worst;
  return out;
}

DecayReport decay_check(const FourierSpectrum& spec, int kappa, double R, double delta,
                        long k_min, long k_max, double c_default) {
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("decay_check: bad k range");
  if (!(R > 1.0)) throw std::invalid_argument("decay_check: R must be > 1");
  DecayReport report;
  report.c_default = c_default;
  double log_r = std::log(R);
  for (long k = k_min; k <= k_max && k <= spec.n_theta / 2; ++k) {
    double mag = std::abs(spec.at(k));
    double leading = (static_cast<double>(kappa) + delta) / static_cast<double>(k);
    double excess = mag - leading;
    if (excess > 0.0) {
      double needed = excess * std::exp(0.5 * static_cast<double>(k) * log_r);
      report.c_fit = std::max(report.c_fit, needed);
    }
    if (mag > leading + c_default * std::exp(-0.5 * static_cast<double>(k) * log_r))
      report.violations.push_back(k);
  }
  return report;
}

double small_k_constant(const FourierSpectrum& spec, const Frequency& om, long m, long k_max) {
  double worst = 0.0;
  for (long k = 1; k <= k_max && k <= spec.n_theta / 2; ++k) {
    double mag = std::abs(spec.at(k));
    double norm = torus_norm(static_cast<long long>(k), om);
    worst = std::max(worst, mag * 4.0 * static_cast<double>(m) * norm);
  }
  return worst;
}

}  // namespace qps
