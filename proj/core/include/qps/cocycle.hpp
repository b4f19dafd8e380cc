#pragma once

#include <complex>
#include <vector>

#include "qps/frequency.hpp"
#include "qps/mat2.hpp"
#include "qps/potential.hpp"

namespace qps {

// Schrodinger cocycle (omega, M_E) over the circle rotation theta -> theta + omega.
struct Cocycle {
  Potential potential;
  std::complex<double> energy{0.0, 0.0};
  Frequency frequency;

  Cocycle(Potential v, std::complex<double> e, Frequency om)
      : potential(std::move(v)), energy(e), frequency(std::move(om)) {}
};

// One transfer step  [[E - v(theta), -1], [1, 0]],  v evaluated on Im theta = eps.
Mat2 transfer_step(const Cocycle& c, double theta, double eps = 0.0);

// m-step product with norm renormalization.  normalized_matrix has unit operator
// norm; log_norm = log ||M_m|| (clamped at 0 since det M_m = 1 forces ||M_m|| >= 1).
// accumulated_log_scale is the unclamped log of the total scale taken out.
// det(normalized_matrix) = det_mantissa * 2^det_exponent is tracked through the
// same divisions that rescale the matrix; the power-of-two split keeps it
// representable when exp(-2 accumulated_log_scale) underflows.
struct TransferProduct {
  Mat2 normalized_matrix;
  double log_norm = 0.0;
  double accumulated_log_scale = 0.0;
  std::complex<double> det_mantissa{1.0, 0.0};
  long det_exponent = 0;
  long steps = 0;
  long rescale_count = 0;

  // log|det(normalized_matrix)| + 2 accumulated_log_scale.  Unit-determinant
  // steps force log|det M_m| == 0, so the residual isolates bookkeeping drift;
  // it stays finite even when exp(2 accumulated_log_scale) overflows.
  double det_log_residual() const;
};

// j*omega mod 1 for j = 0..m-1, each from one fixed-point lattice multiply,
// so the orbit carries no accumulated drift.
std::vector<double> omega_multiples(const Frequency& om, long m);

// Phases theta, theta+omega, ..., theta+(m-1)omega as doubles in [0,1).
std::vector<double> orbit_phases(const Frequency& om, double theta, long m);

TransferProduct transfer_product(const Cocycle& c, double theta, long m, double eps = 0.0);

// Same product evaluated from a precomputed phase orbit (phases.size() >= m).
TransferProduct transfer_product_phases(const Cocycle& c, const std::vector<double>& phases,
                                        long m, double eps = 0.0);

// Product along theta0 + shifts[j], shifts precomputed once per orbit and
// shared across many theta0 (grid sampling, Fejer orbit averages).
TransferProduct transfer_product_shifted(const Cocycle& c, double theta0,
                                         const std::vector<double>& shifts, long m,
                                         double eps = 0.0);

// Nonzero complex number stored as log-magnitude plus a unit phase factor.
struct LogComplex {
  double log_mag = 0.0;              // log |z|; -inf encodes z == 0
  std::complex<double> phase{1.0, 0.0};  // z / |z|

  std::complex<double> value() const;
  bool is_zero() const;
  static LogComplex zero();
  static LogComplex from(std::complex<double> z);
};

// Dirichlet determinant P_m(theta) = det(E I - H_m(theta)) on the block
// [theta, theta + (m-1) omega] via the three-term recurrence
//   P_j = (E - v(theta + (j-1) omega)) P_{j-1} - P_{j-2},  P_0 = 1, P_{-1} = 0,
// with exact power-of-two rescaling.  m == 0 returns log(1).
LogComplex dirichlet_determinant(const Cocycle& c, double theta, long m, double eps = 0.0);

// Determinants for all prefixes m = 0..m_max (index m holds P_m).
std::vector<LogComplex> dirichlet_prefix(const Cocycle& c, double theta, long m_max,
                                         double eps = 0.0);

}  // namespace qps
