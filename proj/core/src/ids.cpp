#include "qps/ids.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qps/errors.hpp"
#include "qps/reduction.hpp"

namespace qps {

const std::vector<double>& IDSCurve::eigenvalues() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->ready) {
    cache_->evs = dirichlet_eigenvalues(op);
    cache_->ready = true;
  }
  return cache_->evs;
}

IDSCurve ids_curve(const Potential& pot, const Frequency& om, double theta, long N,
                   const std::vector<double>& energy_grid) {
  for (std::size_t i = 1; i < energy_grid.size(); ++i)
    if (energy_grid[i] < energy_grid[i - 1])
      throw std::invalid_argument("ids_curve: energy grid must be sorted");
  IDSCurve curve;
  curve.op = finite_operator(pot, om, theta, N);
  curve.energies = energy_grid;
  curve.counts.reserve(energy_grid.size());
  for (double e : energy_grid) curve.counts.push_back(eigen_count(curve.op, e));
  return curve;
}

double thouless_lyapunov(const IDSCurve& curve, double E, double exclusion) {
  if (!(exclusion > 0.0)) throw std::invalid_argument("thouless_lyapunov: exclusion > 0");
  const std::vector<double>& evs = curve.eigenvalues();
  double n = static_cast<double>(evs.size());
  std::vector<double> terms;
  terms.reserve(evs.size());
  long excluded = 0;
  for (double ej : evs) {
    double gap = std::abs(E - ej);
    if (gap < exclusion)
      ++excluded;
    else
      terms.push_back(std::log(gap));
  }
  if (static_cast<double>(excluded) > 0.05 * n)
    throw TooCloseToSpectrum("thouless_lyapunov: more than 5% of eigenvalues within exclusion");
  double correction = static_cast<double>(excluded) / n * (std::log(exclusion) - 1.0);
  return pairwise_sum(terms) / n + correction;
}

HolderFit holder_fit(const Potential& pot, const Frequency& om, double theta, long N, double E,
                     const std::vector<double>& eta_list) {
  if (eta_list.size() < 2) throw std::invalid_argument("holder_fit: need >= 2 etas");
  for (std::size_t i = 0; i < eta_list.size(); ++i) {
    if (!(eta_list[i] > 0.0)) throw std::invalid_argument("holder_fit: etas must be positive");
    if (i > 0 && eta_list[i] >= eta_list[i - 1])
      throw std::invalid_argument("holder_fit: etas must be strictly decreasing");
  }
  double n = static_cast<double>(N);
  if (eta_list.back() < 4.0 / n)
    throw std::invalid_argument("holder_fit: min eta below the 4/N resolution floor");

  FiniteOperator op = finite_operator(pot, om, theta, N);
  HolderFit fit;
  fit.etas = eta_list;
  fit.increments.reserve(eta_list.size());
  long quantized = 0;
  for (double eta : eta_list) {
    double d = static_cast<double>(eigen_count(op, E + eta) - eigen_count(op, E - eta)) / n;
    if (d < 2.0 / n) ++quantized;
    fit.increments.push_back(d);
  }
  if (2 * quantized > static_cast<long>(eta_list.size()))
    throw ResolutionFloor("holder_fit: most increments below the 2/N resolution quantum");

  double sx = 0.0, sy = 0.0;
  std::size_t cnt = eta_list.size();
  std::vector<double> xs(cnt), ys(cnt);
  for (std::size_t i = 0; i < cnt; ++i) {
    xs[i] = std::log(eta_list[i]);
    ys[i] = std::log(std::max(fit.increments[i], 1.0 / n));
    sx += xs[i];
    sy += ys[i];
  }
  double mx = sx / static_cast<double>(cnt), my = sy / static_cast<double>(cnt);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < cnt; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  fit.exponent = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.r_squared = (sxx > 0.0 && syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

}  // namespace qps
