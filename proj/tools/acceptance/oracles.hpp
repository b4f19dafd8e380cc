#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qps::oracle {

// Deterministic RNG (splitmix64) so every acceptance run draws the same
// corpus on every platform; std::random distributions are not portable.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  long uniform_int(long lo, long hi);     // inclusive range

 private:
  std::uint64_t state_;
};

// All eigenvalues of the symmetric tridiagonal matrix with the given diagonal
// and subdiagonal, ascending, by implicit-shift QL iteration.  Independent of
// the Sturm-count machinery it serves as an oracle for.
std::vector<double> ql_eigenvalues(std::vector<double> diag, std::vector<double> off);

// Column `col` of (H - z)^{-1} for tridiagonal H with unit hopping, by dense
// Gaussian elimination with partial pivoting.
std::vector<std::complex<double>> dense_resolvent_column(const std::vector<double>& diag,
                                                         std::complex<double> z, long col);

}  // namespace qps::oracle
