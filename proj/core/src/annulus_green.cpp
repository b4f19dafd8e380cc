#include "qps/annulus_green.hpp"

#include <cmath>
#include <stdexcept>

#include "qps/errors.hpp"

namespace qps {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace

AnnulusGreen::AnnulusGreen(double R, double truncation_tol)
    : r_outer_(R), tol_(truncation_tol) {
  if (!(R > 1.0)) throw std::invalid_argument("annulus radius must exceed 1");
  if (!(truncation_tol > 0.0) || truncation_tol >= 1.0)
    throw std::invalid_argument("truncation tolerance must lie in (0,1)");
  // Image factors at level k deviate from 1 by O(R^{-4k}); keep every level
  // down to the tolerance plus one safety term.
  terms_ = static_cast<int>(std::ceil(std::log(1.0 / tol_) / (4.0 * std::log(r_outer_)))) + 1;
}

void AnnulusGreen::check_domain(std::complex<double> p, const char* who) const {
  double a = std::abs(p);
  const double slack = 1e-12;
  if (a < 1.0 / r_outer_ - slack || a > r_outer_ + slack)
    throw std::invalid_argument(std::string(who) + " lies outside the annulus");
}

double AnnulusGreen::gamma(std::complex<double> z, std::complex<double> w) const {
  check_domain(z, "z");
  check_domain(w, "w");
  const double logR = std::log(r_outer_);
  double acc = 0.0;
  const std::complex<double> zc = std::conj(z);
  for (int k = 1; k <= terms_; ++k) {
    double r4k = std::pow(r_outer_, 4.0 * k);
    double r4k2 = std::pow(r_outer_, 4.0 * k - 2.0);
    acc += std::log(std::abs(1.0 - z / (r4k * w)));
    acc += std::log(std::abs(1.0 - w / (r4k * z)));
    acc -= std::log(std::abs(1.0 - w * zc / r4k2));
    acc -= std::log(std::abs(1.0 - 1.0 / (r4k2 * zc * w)));
  }
  acc -= logR;
  double radial = std::log(std::abs(z) / r_outer_) * std::log(std::abs(w) / r_outer_) /
                  (4.0 * kPi * logR);
  return acc / kTwoPi + radial;
}

double AnnulusGreen::green(std::complex<double> z, std::complex<double> w) const {
  check_domain(z, "z");
  check_domain(w, "w");
  if (std::abs(z - w) < 1e-14) throw CoincidentPoints("green evaluated on the diagonal");
  return std::log(std::abs(z - w)) / kTwoPi + gamma(z, w);
}

double AnnulusGreen::circle_average_quadrature(double r, std::complex<double> w,
                                               int n_quad) const {
  if (n_quad < 1) throw std::invalid_argument("n_quad must be positive");
  double acc = 0.0;
  for (int j = 0; j < n_quad; ++j) {
    double theta = static_cast<double>(j) / n_quad;
    std::complex<double> z = std::polar(r, kTwoPi * theta);
    acc += green(z, w);
  }
  return kTwoPi * acc / n_quad;
}

double AnnulusGreen::circle_average_closed(double r, std::complex<double> w) const {
  double rho = std::abs(w);
  const double logR = std::log(r_outer_);
  if (rho >= r)
    return std::log(r * r_outer_) * std::log(rho / r_outer_) / (2.0 * logR);
  return std::log(r / r_outer_) * std::log(rho * r_outer_) / (2.0 * logR);
}

double AnnulusGreen::gamma_average_quadrature(double r, std::complex<double> w,
                                              int n_quad) const {
  if (n_quad < 1) throw std::invalid_argument("n_quad must be positive");
  double acc = 0.0;
  for (int j = 0; j < n_quad; ++j) {
    double theta = static_cast<double>(j) / n_quad;
    std::complex<double> z = std::polar(r, kTwoPi * theta);
    acc += gamma(z, w);
  }
  return acc / n_quad;
}

double AnnulusGreen::gamma_average_closed(double r, std::complex<double> w) const {
  double rho = std::abs(w);
  const double logR = std::log(r_outer_);
  return std::log(r / r_outer_) * std::log(rho / r_outer_) / (4.0 * kPi * logR) -
         logR / kTwoPi;
}

std::complex<double> AnnulusGreen::fourier_closed(long k, std::complex<double> w) const {
  if (k == 0) throw std::invalid_argument("mode 0 is the circle average, not a coefficient");
  double ak = static_cast<double>(std::labs(k));
  double rho = std::abs(w);
  double phi = std::arg(w);
  double inner = std::pow(std::min(rho, 1.0 / rho), ak);
  double ring = (std::pow(rho, ak) + std::pow(rho, -ak)) /
                (std::pow(r_outer_, 2.0 * ak) + 1.0);
  double magnitude = (-inner + ring) / (2.0 * ak);
  return std::polar(1.0, -static_cast<double>(k) * phi) * magnitude;
}

std::complex<double> AnnulusGreen::fourier_quadrature(long k, std::complex<double> w,
                                                      int n_quad) const {
  if (n_quad < 1) throw std::invalid_argument("n_quad must be positive");
  std::complex<double> acc = 0.0;
  for (int j = 0; j < n_quad; ++j) {
    double theta = static_cast<double>(j) / n_quad;
    std::complex<double> z = std::polar(1.0, kTwoPi * theta);
    acc += kTwoPi * green(z, w) *
           std::polar(1.0, -kTwoPi * static_cast<double>(k) * theta);
  }
  return acc / static_cast<double>(n_quad);
}

double AnnulusGreen::fourier_bound(long k) const {
  if (k == 0) throw std::invalid_argument("mode 0 has no decay bound");
  double ak = static_cast<double>(std::labs(k));
  return (1.0 + std::pow(r_outer_, -ak)) / (2.0 * ak);
}

}  // namespace qps
