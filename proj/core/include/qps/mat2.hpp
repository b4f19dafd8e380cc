#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace qps {

// Dense complex 2x2 matrix with the closed-form operator norm.
struct Mat2 {
  std::complex<double> a{1.0, 0.0}, b{0.0, 0.0};
  std::complex<double> c{0.0, 0.0}, d{1.0, 0.0};

  static Mat2 identity() { return Mat2{}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  Mat2& operator*=(double s) {
    a *= s;
    b *= s;
    c *= s;
    d *= s;
    return *this;
  }

  std::complex<double> det() const { return a * d - b * c; }

  double max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  }

  // Largest singular value: with t = sum |entries|^2 and dd = |det|^2 the
  // squared singular values are (t +- sqrt(t^2 - 4 dd)) / 2.  Entries are
  // prescaled by max_abs so t*t cannot overflow for entries up to ~2^1023.
  double opnorm() const {
    double s = max_abs();
    if (s == 0.0 || !std::isfinite(s)) return s;
    std::complex<double> sa = a / s, sb = b / s, sc = c / s, sd = d / s;
    double t = std::norm(sa) + std::norm(sb) + std::norm(sc) + std::norm(sd);
    double dd = std::norm(sa * sd - sb * sc);
    double disc = t * t - 4.0 * dd;
    if (disc < 0.0) disc = 0.0;
    return s * std::sqrt(0.5 * (t + std::sqrt(disc)));
  }
};

}  // namespace qps
