#include "acceptance/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qps::oracle {

std::uint64_t DetRng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double DetRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double DetRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

long DetRng::uniform_int(long lo, long hi) {
  return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<double> ql_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return {};
  if (static_cast<int>(e.size()) != n - 1 && n > 1)
    throw std::invalid_argument("ql_eigenvalues: off-diagonal size must be n-1");
  e.resize(static_cast<size_t>(n), 0.0);  // e[i] couples i and i+1; e[n-1] sentinel

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-15 * dd) break;
      }
      if (m != l) {
        if (iter++ == 64) throw std::runtime_error("ql_eigenvalues: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::complex<double>> dense_resolvent_column(const std::vector<double>& diag,
                                                         std::complex<double> z, long col) {
  using C = std::complex<double>;
  const long n = static_cast<long>(diag.size());
  if (col < 0 || col >= n) throw std::invalid_argument("dense_resolvent_column: bad column");
  std::vector<C> a(static_cast<size_t>(n * n), C(0.0));
  auto at = [&](long i, long j) -> C& { return a[static_cast<size_t>(i * n + j)]; };
  for (long i = 0; i < n; ++i) {
    at(i, i) = diag[static_cast<size_t>(i)] - z;
    if (i + 1 < n) {
      at(i, i + 1) = 1.0;
      at(i + 1, i) = 1.0;
    }
  }
  std::vector<C> x(static_cast<size_t>(n), C(0.0));
  x[static_cast<size_t>(col)] = 1.0;

  for (long k = 0; k < n; ++k) {
    long piv = k;
    for (long i = k + 1; i < n; ++i)
      if (std::abs(at(i, k)) > std::abs(at(piv, k))) piv = i;
    if (piv != k) {
      for (long j = k; j < n; ++j) std::swap(at(k, j), at(piv, j));
      std::swap(x[static_cast<size_t>(k)], x[static_cast<size_t>(piv)]);
    }
    C pk = at(k, k);
    if (pk == C(0.0)) throw std::runtime_error("dense_resolvent_column: singular matrix");
    for (long i = k + 1; i < n; ++i) {
      C f = at(i, k) / pk;
      if (f == C(0.0)) continue;
      for (long j = k; j < n; ++j) at(i, j) -= f * at(k, j);
      x[static_cast<size_t>(i)] -= f * x[static_cast<size_t>(k)];
    }
  }
  for (long i = n - 1; i >= 0; --i) {
    C acc = x[static_cast<size_t>(i)];
    for (long j = i + 1; j < n; ++j) acc -= at(i, j) * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] = acc / at(i, i);
  }
  return x;
}

}  // namespace qps::oracle
