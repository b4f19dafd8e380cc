#pragma once

#include <complex>
#include <map>
#include <vector>

namespace qps {

using Complex = std::complex<double>;

// Trigonometric polynomial v(theta) = sum_{|k|<=d} c_k e^{2 pi i k theta}
// with Hermitian coefficients c_{-k} = conj(c_k), so v is real on the circle.
// Evaluation extends to complexified phase theta + i*eps.
class Potential {
 public:
  explicit Potential(const std::map<int, Complex>& coeffs);

  // v(theta) = 2*lambda*cos(2 pi theta).
  static Potential amo(double lambda);
  static Potential zero();

  int degree() const { return degree_; }
  Complex coeff(int k) const;
  // All stored coefficients as (k, c_k) pairs, k ascending.
  std::vector<std::pair<int, Complex>> coeffs() const;

  Complex eval(double theta, double eps = 0.0) const;
  // sum_k |c_k|, a sup bound for |v| on the circle.
  double coeff_abs_sum() const;

 private:
  int degree_ = 0;
  std::vector<Complex> c_;  // index i corresponds to k = i - degree_
};

}  // namespace qps
