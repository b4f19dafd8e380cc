#include "qps/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace qps {

Potential::Potential(const std::map<int, Complex>& coeffs) {
  int d = 0;
  for (const auto& [k, c] : coeffs) d = std::max(d, std::abs(k));
  degree_ = d;
  c_.assign(static_cast<size_t>(2 * d + 1), Complex(0.0, 0.0));
  for (const auto& [k, c] : coeffs) c_[static_cast<size_t>(k + d)] = c;
  // Fill the Hermitian mirror of one-sided inputs; reject inconsistent pairs.
  for (int k = 1; k <= d; ++k) {
    Complex& pos = c_[static_cast<size_t>(k + d)];
    Complex& neg = c_[static_cast<size_t>(-k + d)];
    bool has_pos = coeffs.count(k) > 0;
    bool has_neg = coeffs.count(-k) > 0;
    if (has_pos && has_neg) {
      if (std::abs(neg - std::conj(pos)) > 1e-12 * (1.0 + std::abs(pos))) {
        throw std::invalid_argument("Potential: coefficients are not Hermitian");
      }
    } else if (has_pos) {
      neg = std::conj(pos);
    } else if (has_neg) {
      pos = std::conj(neg);
    }
  }
  if (std::abs(c_[static_cast<size_t>(d)].imag()) > 1e-12 * (1.0 + std::abs(c_[static_cast<size_t>(d)]))) {
    throw std::invalid_argument("Potential: constant coefficient must be real");
  }
}

Potential Potential::amo(double lambda) {
  return Potential({{1, Complex(lambda, 0.0)}, {-1, Complex(lambda, 0.0)}});
}

Potential Potential::zero() { return Potential({{0, Complex(0.0, 0.0)}}); }

Complex Potential::coeff(int k) const {
  if (std::abs(k) > degree_) return Complex(0.0, 0.0);
  return c_[static_cast<size_t>(k + degree_)];
}

std::vector<std::pair<int, Complex>> Potential::coeffs() const {
  std::vector<std::pair<int, Complex>> out;
  out.reserve(c_.size());
  for (int k = -degree_; k <= degree_; ++k) out.emplace_back(k, c_[static_cast<size_t>(k + degree_)]);
  return out;
}

Complex Potential::eval(double theta, double eps) const {
  // v(theta + i eps) = sum_k c_k e^{2 pi i k theta} e^{-2 pi k eps}
  Complex sum = c_[static_cast<size_t>(degree_)];
  for (int k = 1; k <= degree_; ++k) {
    double ang = 2.0 * M_PI * static_cast<double>(k) * theta;
    Complex phase(std::cos(ang), std::sin(ang));
    double damp = std::exp(-2.0 * M_PI * static_cast<double>(k) * eps);
    const Complex& cp = c_[static_cast<size_t>(k + degree_)];
    const Complex& cm = c_[static_cast<size_t>(-k + degree_)];
    sum += cp * phase * damp + cm * std::conj(phase) / damp;
  }
  return sum;
}

double Potential::coeff_abs_sum() const {
  double s = 0.0;
  for (const Complex& c : c_) s += std::abs(c);
  return s;
}

}  // namespace qps
