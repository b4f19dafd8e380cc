#pragma once

#include <array>

#include "qps/cocycle.hpp"

namespace qps {

// Riesz mass of the subharmonic extension of the finite-scale Lyapunov
// exponent over the band eps1 < |Im theta| < eps2, computed from one-sided
// slopes of eps -> L_m(eps):
//   mass = [L'(eps2) - L'(eps1) + L'(-eps1) - L'(-eps2)] / (2 pi).
// With eps1 == 0 the band straddles the real axis and the middle slopes
// merge: mass = [L'(eps2) - L'(-eps2)] / (2 pi).
struct RieszMassEstimate {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double mass = 0.0;
  // Slopes at -eps2, -eps1, +eps1, +eps2 (the middle two coincide and are
  // reported once each when eps1 == 0).
  std::array<double, 4> slopes{};
};

// Slopes use central differences with the given step (default: band width / 8).
// Both signs of eps are evaluated explicitly.
RieszMassEstimate riesz_mass(const Cocycle& cocycle, long m, double eps1, double eps2,
                             long n_theta, double fd_step = 0.0);

}  // namespace qps
