#pragma once

#include <complex>
#include <vector>

#include "qps/cocycle.hpp"
#include "qps/phase_field.hpp"

namespace qps {

// L_m(E, eps) over an eps grid at fixed quadrature size.  L is convex and
// even in eps up to quadrature noise; min_second_difference / max_evenness_gap
// expose the margins the tests assert against.
struct LyapunovProfile {
  std::vector<double> epsilons;  // sorted ascending
  std::vector<double> values;
  long m = 0;
  long n_theta = 0;
  std::complex<double> energy{0.0, 0.0};

  double min_second_difference() const;  // >= -tol_convex expected
  double max_evenness_gap() const;       // over matched +-eps pairs
};

// (1/n_theta) sum_j u_m(theta_j + i eps), fixed pairwise reduction.
// n_theta must be a power of two >= 64.
double finite_lyapunov(const Cocycle& c, long m, double eps, long n_theta);

LyapunovProfile profile(const Cocycle& c, long m, const std::vector<double>& eps_list,
                        long n_theta);

// Least-squares slope of eps -> L_m(eps) against 2 pi eps over a window in
// eps > 0.  The slope is quantized to an integer in the linear regime;
// quantization_suspect marks a residual > 0.1 (window straddles a kink).
struct AccelerationEstimate {
  double slope = 0.0;
  long nearest_integer = 0;
  double residual = 0.0;
  double eps_min = 0.0;
  double eps_max = 0.0;
  bool quantization_suspect = false;
};

AccelerationEstimate acceleration(const Cocycle& c, long m, double eps_min, double eps_max,
                                  int n_points, long n_theta);

// Largest eps such that the profile restricted to (0, eps] is affine within
// max residual <= tol; 0 if fewer than two positive points qualify.
double linearity_window(const LyapunovProfile& prof, double tol);

}  // namespace qps
