#pragma once

#include <complex>
#include <vector>

namespace qps {

// In-place radix-2 FFT; data.size() must be a power of two.
// inverse == false applies sum_j x_j e^{-2 pi i jk/n} (no normalization);
// inverse == true applies sum_k X_k e^{+2 pi i jk/n} (no normalization).
void fft_radix2(std::vector<std::complex<double>>& data, bool inverse);

// Fourier coefficients of samples u_j = u(j/n):
//   coeff[k] = (1/n) sum_j u_j e^{-2 pi i jk/n},  k = 0..n-1 (k mod n indexing).
std::vector<std::complex<double>> fourier_forward(const std::vector<std::complex<double>>& u);

// Inverse of fourier_forward: u_j = sum_k coeff[k] e^{+2 pi i jk/n}.
std::vector<std::complex<double>> fourier_inverse(const std::vector<std::complex<double>>& coeff);

}  // namespace qps
