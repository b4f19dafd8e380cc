#include "qps/lyapunov.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qps {

namespace {

struct AffineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

AffineFit fit_affine(const double* x, const double* y, int n) {
  double sx = 0.0, sy = 0.0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  AffineFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  for (int i = 0; i < n; ++i)
    fit.max_residual = std::max(fit.max_residual,
                                std::abs(y[i] - fit.intercept - fit.slope * x[i]));
  return fit;
}

}  // namespace

double LyapunovProfile::min_second_difference() const {
  // Difference of one-sided slopes; non-negative for a convex profile.
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < epsilons.size(); ++i) {
    double left = (values[i] - values[i - 1]) / (epsilons[i] - epsilons[i - 1]);
    double right = (values[i + 1] - values[i]) / (epsilons[i + 1] - epsilons[i]);
    worst = std::min(worst, right - left);
  }
  return worst;
}

double LyapunovProfile::max_evenness_gap() const {
  double gap = 0.0;
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (epsilons[i] >= 0.0) continue;
    for (std::size_t j = 0; j < epsilons.size(); ++j) {
      if (std::abs(epsilons[j] + epsilons[i]) <= 1e-12)
        gap = std::max(gap, std::abs(values[i] - values[j]));
    }
  }
  return gap;
}

double finite_lyapunov(const Cocycle& c, long m, double eps, long n_theta) {
  if (!is_power_of_two(n_theta) || n_theta < 64)
    throw std::invalid_argument("finite_lyapunov: n_theta must be a power of two >= 64");
  return sample_field(c, m, eps, n_theta).mean();
}

LyapunovProfile profile(const Cocycle& c, long m, const std::vector<double>& eps_list,
                        long n_theta) {
  for (std::size_t i = 1; i < eps_list.size(); ++i)
    if (eps_list[i] <= eps_list[i - 1])
      throw std::invalid_argument("profile: eps_list must be strictly increasing");
  LyapunovProfile prof;
  prof.epsilons = eps_list;
  prof.m = m;
  prof.n_theta = n_theta;
  prof.energy = c.energy;
  prof.values.reserve(eps_list.size());
  for (double e : eps_list) prof.values.push_back(finite_lyapunov(c, m, e, n_theta));
  return prof;
}

AccelerationEstimate acceleration(const Cocycle& c, long m, double eps_min, double eps_max,
                                  int n_points, long n_theta) {
  if (!(0.0 < eps_min && eps_min < eps_max))
    throw std::invalid_argument("acceleration: need 0 < eps_min < eps_max");
  if (n_points < 3) throw std::invalid_argument("acceleration: need >= 3 points");
  std::vector<double> x(static_cast<std::size_t>(n_points));
  std::vector<double> y(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    double e = eps_min + (eps_max - eps_min) * i / (n_points - 1);
    x[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi * e;
    y[static_cast<std::size_t>(i)] = finite_lyapunov(c, m, e, n_theta);
  }
  AffineFit fit = fit_affine(x.data(), y.data(), n_points);
  AccelerationEstimate est;
  est.slope = fit.slope;
  est.nearest_integer = std::llround(fit.slope);
  est.residual = std::abs(fit.slope - static_cast<double>(est.nearest_integer));
  est.eps_min = eps_min;
  est.eps_max = eps_max;
  est.quantization_suspect = est.residual > 0.1;
  return est;
}

double linearity_window(const LyapunovProfile& prof, double tol) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < prof.epsilons.size(); ++i) {
    if (prof.epsilons[i] > 0.0) {
      x.push_back(prof.epsilons[i]);
      y.push_back(prof.values[i]);
    }
  }
  for (int k = static_cast<int>(x.size()); k >= 2; --k) {
    AffineFit fit = fit_affine(x.data(), y.data(), k);
    if (fit.max_residual <= tol) return x[static_cast<std::size_t>(k) - 1];
  }
  return 0.0;
}

}  // namespace qps
