#include "qps/phase_field.hpp"

#include <cmath>
#include <stdexcept>

#include "qps/fft.hpp"
#include "qps/reduction.hpp"

namespace qps {

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

double PhaseField::mean() const {
  return pairwise_sum(values) / static_cast<double>(values.size());
}

double PhaseField::sup_deviation() const {
  double mu = mean();
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::abs(v - mu));
  return worst;
}

PhaseField sample_field(const Cocycle& c, long m, double eps, long n_theta) {
  if (!is_power_of_two(n_theta))
    throw std::invalid_argument("sample_field: n_theta must be a power of two");
  if (m < 1) throw std::invalid_argument("sample_field: m must be >= 1");
  PhaseField field;
  field.m = m;
  field.n_theta = n_theta;
  field.eps = eps;
  field.energy = c.energy;
  std::vector<double> shifts = omega_multiples(c.frequency, m);
  double inv_m = 1.0 / static_cast<double>(m);
  double inv_n = 1.0 / static_cast<double>(n_theta);
  field.values = parallel_map(static_cast<std::size_t>(n_theta), [&](std::size_t j) {
    double theta = static_cast<double>(j) * inv_n;
    return transfer_product_shifted(c, theta, shifts, m, eps).log_norm * inv_m;
  });
  return field;
}

std::complex<double> FourierSpectrum::at(long k) const {
  long n = n_theta;
  if (k > n / 2 || k < -n / 2)
    throw std::invalid_argument("FourierSpectrum::at: |k| beyond Nyquist");
  long idx = ((k % n) + n) % n;
  return coeffs[static_cast<std::size_t>(idx)];
}

FourierSpectrum fourier(const PhaseField& field) {
  FourierSpectrum spec;
  spec.n_theta = field.n_theta;
  spec.m = field.m;
  spec.eps = field.eps;
  spec.energy = field.energy;
  std::vector<std::complex<double>> data(field.values.begin(), field.values.end());
  spec.coeffs = fourier_forward(data);
  return spec;
}

}  // namespace qps
