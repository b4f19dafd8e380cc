#include "qps/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qps {

void fft_radix2(std::vector<std::complex<double>>& data, bool inverse) {
  std::size_t n = data.size();
  if (n == 0) return;
  if ((n & (n - 1)) != 0) throw std::invalid_argument("fft_radix2: size must be a power of two");

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = data[i + j];
        std::complex<double> v = data[i + j + len / 2] * w;
        data[i + j] = u + v;
        data[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<std::complex<double>> fourier_forward(const std::vector<std::complex<double>>& u) {
  std::vector<std::complex<double>> out = u;
  fft_radix2(out, false);
  double inv_n = 1.0 / static_cast<double>(out.size());
  for (auto& z : out) z *= inv_n;
  return out;
}

std::vector<std::complex<double>> fourier_inverse(const std::vector<std::complex<double>>& coeff) {
  std::vector<std::complex<double>> out = coeff;
  fft_radix2(out, true);
  return out;
}

}  // namespace qps
