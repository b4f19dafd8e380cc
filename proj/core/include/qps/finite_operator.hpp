#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qps/cocycle.hpp"
#include "qps/frequency.hpp"
#include "qps/potential.hpp"

namespace qps {

// Dirichlet restriction of the operator to a window of size N: tridiagonal
// with unit hopping and diagonal v(theta + k omega), k = 0..N-1.
struct FiniteOperator {
  std::vector<double> diagonal;
  double theta = 0.0;
  std::string provenance;

  long size() const { return static_cast<long>(diagonal.size()); }
};

FiniteOperator finite_operator(const Potential& pot, const Frequency& om, double theta, long N);

// Exact count of eigenvalues strictly below E via the Sturm pivot recursion
// delta_k = (d_k - E) - 1/delta_{k-1}; a vanishing pivot is nudged to
// +tiny*(1+|E|) so eigenvalues exactly at E stay excluded (strict count).
long eigen_count(const FiniteOperator& op, double E);

// All N eigenvalues, ascending, by bisection on the counting function to
// width 1e-10 * (1 + |E|).
std::vector<double> dirichlet_eigenvalues(const FiniteOperator& op);

// Characteristic-polynomial determinants P(z) = det(zI - H) of leading and
// trailing sub-blocks, in log form.  prefix[j] covers the first j sites;
// suffix[j] covers sites j..N-1 (suffix[N] is the empty block).
std::vector<LogComplex> char_poly_prefix(const std::vector<double>& diag,
                                         std::complex<double> z);
std::vector<LogComplex> char_poly_suffix(const std::vector<double>& diag,
                                         std::complex<double> z);

// Diagonal resolvent entries G(k,k) = ((H - z)^{-1})_{kk} by Cramer ratios of
// the determinant arrays; Im G(k,k) > 0 whenever Im z > 0.
std::complex<double> green_diagonal(const FiniteOperator& op, std::complex<double> z, long k);
std::vector<std::complex<double>> green_diagonal_all(const FiniteOperator& op,
                                                     std::complex<double> z);

// d_N counts eigenvalues in [E-eta, E+eta) normalized by N; the trace bound
// (2 eta / N) sum_k Im G(k,k) dominates it.
struct GreenTraceBound {
  double d_n = 0.0;
  double bound = 0.0;
};

GreenTraceBound green_trace_bound(const FiniteOperator& op, double E, double eta);

// |G(k,k) - decoupled|, where the decoupled value restricts to the window
// [a,b] containing k and couples back through the two boundary bonds:
//   G(k,k) = G~(k,k) - G~(k,a) G(a-1,k) - G~(k,b) G(b+1,k).
// Boundary terms at a = 0 / b = N-1 drop.
double resolvent_decoupling_check(const FiniteOperator& op, std::complex<double> z, long k,
                                  long a, long b);

}  // namespace qps
