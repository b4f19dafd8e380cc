#pragma once

#include <complex>
#include <vector>

#include "qps/cocycle.hpp"

namespace qps {

// u_{m}(theta_j + i eps) = (1/m) log ||M_m|| sampled on the uniform grid
// theta_j = j/n_theta.  Values are >= 0 (unit-determinant product).  mean()
// uses the fixed pairwise reduction, so it is bit-identical to the Lyapunov
// quadrature and independent of the thread count.
struct PhaseField {
  std::vector<double> values;
  long m = 0;
  long n_theta = 0;
  double eps = 0.0;
  std::complex<double> energy{0.0, 0.0};

  double mean() const;
  double sup_deviation() const;  // max_j |u_j - mean|
};

// Grid points evaluated independently (parallel over slots).
// n_theta must be a power of two (grid shared with the Fourier transform).
PhaseField sample_field(const Cocycle& c, long m, double eps, long n_theta);

// Fourier coefficients hat_u(k) = (1/n) sum_j u_j e^{-2 pi i jk/n}, stored
// k mod n; at(k) accepts signed k with |k| <= n/2.
struct FourierSpectrum {
  std::vector<std::complex<double>> coeffs;
  long n_theta = 0;
  long m = 0;
  double eps = 0.0;
  std::complex<double> energy{0.0, 0.0};

  std::complex<double> at(long k) const;
};

FourierSpectrum fourier(const PhaseField& field);

bool is_power_of_two(long n);

}  // namespace qps
