#pragma once

#include <array>
#include <vector>

#include "qps/bigint.hpp"
#include "qps/cocycle.hpp"
#include "qps/frequency.hpp"
#include "qps/phase_field.hpp"

namespace qps {

// Fraction of grid points with |u(theta_j) - mean| > t (grid measure as the
// Lebesgue proxy).  Non-increasing in t by construction.
double deviation_measure(const PhaseField& field, double t);

// Caller-side parameters against which the eta-smallness contract
// |eta| <= e^{-2m(kappa beta_n + 2 C delta)} is recorded.
struct EtaComplianceInput {
  double kappa = 0.0;
  double beta_n = 0.0;
  double C = 0.0;
  double delta = 0.0;
};

struct ComplexDeviation {
  double measure = 0.0;   // fraction of grid points with u_{m,E+i eta} < threshold
  double eta = 0.0;
  double eta_bound = 0.0;
  bool eta_compliant = false;
};

// One-sided deviation for complex energy; eta is Im(c.energy).
ComplexDeviation deviation_measure_complex(const Cocycle& c, long m, double threshold,
                                           long n_theta, const EtaComplianceInput& compliance);

// u^{(Q)}(theta) = sum_{|j|<Q} ((Q-|j|)/Q^2) u(theta + j omega).
//  - kSpectral: multiply hat_u(k) by the Fejer multiplier F_Q(k); satisfies the
//    convolution identity exactly (to FFT roundoff) on the grid.
//  - kTransfer: re-evaluate u at every shifted phase (Q-fold cost); pointwise
//    faithful to the orbit average, but its grid transform differs from
//    hat_u(k) F_Q(k) by spectral aliasing of the tail of u.
//  - kNearestGrid: resample u at the nearest grid point per shift.
enum class SmoothingMode { kSpectral, kTransfer, kNearestGrid };

// reevaluate supplies the cocycle for kTransfer and is ignored otherwise.
PhaseField fejer_smooth(const PhaseField& field, long Q, const Frequency& om,
                        SmoothingMode mode = SmoothingMode::kSpectral,
                        const Cocycle* reevaluate = nullptr);

// Continued-fraction level n matched to the scale m:
//   delta^-2 (beta_n + 1) q_n <= m < delta^-2 (beta_n + 1) q_{n+1},
// scanning n upward; matched=false picks the deepest n whose lower bound
// still fits (callers see the ScaleMismatch flag downstream).
struct ScaleMatch {
  int n = 0;
  double beta_n = 0.0;
  BigInt q_n;
  BigInt q_n1;
  bool matched = false;
};

ScaleMatch match_scale(const Frequency& om, long m, double delta);

// Seven-band split of u - mean.  U_1 = u - u^{(Q)} (spectral smoothing);
// U_2..U_7 partition the remaining modes k != 0 of hat_u(k) F_Q(k) by
// priority:  |k| >= e^{4 delta^4 m} -> U_7;  |k| >= q_{n+1}/4 -> U_6;
// |k| <= delta^-2 -> U_2;  |k| < q_n -> U_3;  q_n | k -> U_4;  else U_5.
struct BandDecomposition {
  std::array<std::vector<double>, 7> bands;
  std::array<double, 7> sup_norms{};
  double u7_l2 = 0.0;
  long Q = 0;
  double delta = 0.0;
  ScaleMatch scale;
  bool scale_mismatch = false;
  double k7_cutoff = 0.0;         // e^{4 delta^4 m}, +inf when it overflows
  bool u7_beyond_nyquist = false; // cutoff exceeds the grid Nyquist
  double completeness_residual = 0.0;  // sup |sum_i U_i - (u - mean)|
};

BandDecomposition band_decomposition(const PhaseField& field, const Frequency& om, double delta);

// Smallest C with |hat_u(k)| <= (kappa+delta)/|k| + C R^{-|k|/2} over
// k in [k_min, k_max], plus the k violating the bound at C = c_default.
struct DecayReport {
  double c_fit = 0.0;
  std::vector<long> violations;
  double c_default = 10.0;
};

DecayReport decay_check(const FourierSpectrum& spec, int kappa, double R, double delta,
                        long k_min, long k_max, double c_default = 10.0);

// Measured small-k constant: max over 1 <= k <= k_max of
// |hat_u(k)| * 4 m ||k omega||.
double small_k_constant(const FourierSpectrum& spec, const Frequency& om, long m,
                        long k_max = 20);

}  // namespace qps
