#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "qps/finite_operator.hpp"

namespace qps {

// Eigenvalue-counting curve of a Dirichlet restriction over an energy grid.
// counts[i] = #{eigenvalues < energies[i]}; value = count/N in [0,1].
// eigenvalues() refines the full spectrum lazily (bisection), caches it, and
// is safe to call concurrently.
struct IDSCurve {
  std::vector<double> energies;
  std::vector<long> counts;
  FiniteOperator op;

  long size() const { return op.size(); }
  double value(std::size_t i) const {
    return static_cast<double>(counts[i]) / static_cast<double>(op.size());
  }
  const std::vector<double>& eigenvalues() const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<double> evs;
    bool ready = false;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

IDSCurve ids_curve(const Potential& pot, const Frequency& om, double theta, long N,
                   const std::vector<double>& energy_grid);

// Thouless sum (1/N) sum_j log|E - E_j| over the curve's eigenvalues,
// excluding |E - E_j| < exclusion and re-adding the integrable estimate
// (excluded/N) * (log(exclusion) - 1) for the omitted near terms.
// Throws TooCloseToSpectrum when more than 5% of eigenvalues are excluded.
double thouless_lyapunov(const IDSCurve& curve, double E, double exclusion = 1e-6);

// Log-log fit of the IDS increment d_N(eta) = [count(E+eta)-count(E-eta)]/N
// against dyadic eta, floored at the resolution quantum 1/N.
struct HolderFit {
  std::vector<double> etas;        // decreasing
  std::vector<double> increments;  // d_N per eta
  double exponent = 0.0;
  double r_squared = 0.0;
};

HolderFit holder_fit(const Potential& pot, const Frequency& om, double theta, long N, double E,
                     const std::vector<double>& eta_list);

}  // namespace qps
