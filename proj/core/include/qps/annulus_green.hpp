#pragma once

#include <complex>

namespace qps {

// Green's function of the annulus 1/R < |z| < R by the method of images:
//   G_R(z,w) = (1/2pi) log|z-w| + Gamma_R(z,w),
// with the image product truncated once the omitted factors deviate from 1
// by less than truncation_tol.  Symmetric, rotation invariant, vanishing on
// both boundary circles.
class AnnulusGreen {
 public:
  explicit AnnulusGreen(double R, double truncation_tol = 1e-16);

  double R() const { return r_outer_; }
  int truncation_terms() const { return terms_; }

  // Throws CoincidentPoints when |z - w| < 1e-14; both points must lie in
  // the closed annulus.
  double green(std::complex<double> z, std::complex<double> w) const;

  // Harmonic correction Gamma_R alone.
  double gamma(std::complex<double> z, std::complex<double> w) const;

  // 2 pi * integral over theta in [0,1) of G_R(r e^{2 pi i theta}, w):
  // trapezoid quadrature and the branch-selected closed form
  //   log(rR) log(|w|/R) / (2 log R)   for |w| >= r,
  //   log(r/R) log(|w| R) / (2 log R)  for |w| <  r.
  double circle_average_quadrature(double r, std::complex<double> w, int n_quad) const;
  double circle_average_closed(double r, std::complex<double> w) const;

  // integral over theta of Gamma_R(r e^{2 pi i theta}, w):
  //   log(r/R) log(|w|/R) / (4 pi log R) - log(R) / (2 pi).
  double gamma_average_quadrature(double r, std::complex<double> w, int n_quad) const;
  double gamma_average_closed(double r, std::complex<double> w) const;

  // k-th Fourier coefficient of theta -> 2 pi G_R(e^{2 pi i theta}, w),
  // closed form (w = rho e^{2 pi i phi}, k != 0):
  //   e^{-2 pi i k phi} / (2|k|) * [ -min(rho,1/rho)^{|k|}
  //                                  + (rho^{|k|} + rho^{-|k|}) / (R^{2|k|}+1) ].
  std::complex<double> fourier_closed(long k, std::complex<double> w) const;
  std::complex<double> fourier_quadrature(long k, std::complex<double> w, int n_quad) const;

  // |coefficient| <= (1/(2|k|)) (1 + R^{-|k|}).
  double fourier_bound(long k) const;

 private:
  void check_domain(std::complex<double> p, const char* who) const;

  double r_outer_;
  double tol_;
  int terms_;
};

}  // namespace qps
