#include "qps/riesz.hpp"

#include <cmath>
#include <stdexcept>

#include "qps/lyapunov.hpp"

namespace qps {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double slope_at(const Cocycle& c, long m, double eps, double h, long n_theta) {
  double lo = finite_lyapunov(c, m, eps - h, n_theta);
  double hi = finite_lyapunov(c, m, eps + h, n_theta);
  return (hi - lo) / (2.0 * h);
}

}  // namespace

RieszMassEstimate riesz_mass(const Cocycle& cocycle, long m, double eps1, double eps2,
                             long n_theta, double fd_step) {
  if (!(eps2 > eps1) || eps1 < 0.0)
    throw std::invalid_argument("band requires 0 <= eps1 < eps2");
  double h = fd_step > 0.0 ? fd_step : (eps2 - eps1) / 8.0;
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");

  RieszMassEstimate out;
  out.eps1 = eps1;
  out.eps2 = eps2;

  double s_pos2 = slope_at(cocycle, m, eps2, h, n_theta);
  double s_neg2 = slope_at(cocycle, m, -eps2, h, n_theta);
  if (eps1 == 0.0) {
    out.slopes = {s_neg2, 0.0, 0.0, s_pos2};
    out.mass = (s_pos2 - s_neg2) / kTwoPi;
    return out;
  }
  double s_pos1 = slope_at(cocycle, m, eps1, h, n_theta);
  double s_neg1 = slope_at(cocycle, m, -eps1, h, n_theta);
  out.slopes = {s_neg2, s_neg1, s_pos1, s_pos2};
  out.mass = (s_pos2 - s_pos1 + s_neg1 - s_neg2) / kTwoPi;
  return out;
}

}  // namespace qps
