#include "qps/finite_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qps/reduction.hpp"

namespace qps {

FiniteOperator finite_operator(const Potential& pot, const Frequency& om, double theta, long N) {
  if (N < 1) throw std::invalid_argument("finite_operator: N must be >= 1");
  FiniteOperator op;
  op.theta = theta;
  op.diagonal.reserve(static_cast<std::size_t>(N));
  std::vector<double> phases = orbit_phases(om, theta, N);
  for (long k = 0; k < N; ++k)
    op.diagonal.push_back(pot.eval(phases[static_cast<std::size_t>(k)], 0.0).real());
  return op;
}

long eigen_count(const FiniteOperator& op, double E) {
  // tiny keeps 1/pivot finite: 1e-292 inverts to 1e292 without overflow.
  const double pivmin = 1e-292 * (1.0 + std::abs(E));
  long count = 0;
  double delta = 1.0;  // "no previous pivot": 1/delta term absent via flag
  bool first = true;
  for (double d : op.diagonal) {
    double next = first ? (d - E) : (d - E) - 1.0 / delta;
    first = false;
    if (next == 0.0) next = pivmin;
    if (next < 0.0) ++count;
    delta = next;
  }
  return count;
}

std::vector<double> dirichlet_eigenvalues(const FiniteOperator& op) {
  long n = op.size();
  double dmin = *std::min_element(op.diagonal.begin(), op.diagonal.end());
  double dmax = *std::max_element(op.diagonal.begin(), op.diagonal.end());
  double lo_all = dmin - 2.0 - 1e-6;
  double hi_all = dmax + 2.0 + 1e-6;
  std::vector<double> evs;
  evs.reserve(static_cast<std::size_t>(n));
  double lo_start = lo_all;
  for (long j = 0; j < n; ++j) {
    // Smallest x with count(x) >= j+1; the previous lower bracket remains
    // valid because counts are monotone.
    double lo = lo_start, hi = hi_all;
    while (hi - lo > 1e-10 * (1.0 + std::max(std::abs(lo), std::abs(hi)))) {
      double mid = 0.5 * (lo + hi);
      if (eigen_count(op, mid) >= j + 1)
        hi = mid;
      else
        lo = mid;
    }
    evs.push_back(0.5 * (lo + hi));
    lo_start = lo;
  }
  return evs;
}

namespace {

const double kScaleHi = std::ldexp(1.0, 512);
const double kScaleLo = std::ldexp(1.0, -512);

struct ScaledPair {
  std::complex<double> cur{1.0, 0.0};
  std::complex<double> prev{0.0, 0.0};
  long shift = 0;  // power-of-two rescaling is exact

  void step(std::complex<double> diag) {
    std::complex<double> next = diag * cur - prev;
    prev = cur;
    cur = next;
    double f = std::max(std::abs(cur), std::abs(prev));
    if (f > kScaleHi) {
      cur = std::complex<double>(std::ldexp(cur.real(), -512), std::ldexp(cur.imag(), -512));
      prev = std::complex<double>(std::ldexp(prev.real(), -512), std::ldexp(prev.imag(), -512));
      shift += 512;
    } else if (f < kScaleLo && f > 0.0) {
      cur = std::complex<double>(std::ldexp(cur.real(), 512), std::ldexp(cur.imag(), 512));
      prev = std::complex<double>(std::ldexp(prev.real(), 512), std::ldexp(prev.imag(), 512));
      shift -= 512;
    }
  }

  LogComplex current() const {
    double mag = std::abs(cur);
    if (mag == 0.0) return LogComplex::zero();
    return LogComplex{std::log(mag) + static_cast<double>(shift) * std::log(2.0), cur / mag};
  }
};

// value of a * b / c in ordinary precision (log magnitudes cancel first).
std::complex<double> ratio_value(const LogComplex& a, const LogComplex& b, const LogComplex& c) {
  double log_mag = a.log_mag + b.log_mag - c.log_mag;
  return std::exp(log_mag) * a.phase * b.phase / c.phase;
}

}  // namespace

std::vector<LogComplex> char_poly_prefix(const std::vector<double>& diag,
                                         std::complex<double> z) {
  std::vector<LogComplex> out;
  out.reserve(diag.size() + 1);
  ScaledPair p;
  out.push_back(p.current());
  for (double d : diag) {
    p.step(z - d);
    out.push_back(p.current());
  }
  return out;
}

std::vector<LogComplex> char_poly_suffix(const std::vector<double>& diag,
                                         std::complex<double> z) {
  std::size_t n = diag.size();
  std::vector<LogComplex> out(n + 1);
  ScaledPair p;
  out[n] = p.current();
  for (std::size_t i = n; i-- > 0;) {
    p.step(z - diag[i]);
    out[i] = p.current();
  }
  return out;
}

namespace {

// G(i,j) for i <= j from determinant arrays of the containing block:
// -P[first..i-1] P[j+1..last] / P[first..last], in prefix/suffix index form.
std::complex<double> green_entry(const std::vector<LogComplex>& prefix,
                                 const std::vector<LogComplex>& suffix, long i, long j) {
  long n = static_cast<long>(prefix.size()) - 1;
  return -ratio_value(prefix[static_cast<std::size_t>(i)],
                      suffix[static_cast<std::size_t>(j) + 1],
                      prefix[static_cast<std::size_t>(n)]);
}

}  // namespace

std::complex<double> green_diagonal(const FiniteOperator& op, std::complex<double> z, long k) {
  if (k < 0 || k >= op.size()) throw std::invalid_argument("green_diagonal: index out of range");
  std::vector<LogComplex> pre = char_poly_prefix(op.diagonal, z);
  std::vector<LogComplex> suf = char_poly_suffix(op.diagonal, z);
  return green_entry(pre, suf, k, k);
}

std::vector<std::complex<double>> green_diagonal_all(const FiniteOperator& op,
                                                     std::complex<double> z) {
  std::vector<LogComplex> pre = char_poly_prefix(op.diagonal, z);
  std::vector<LogComplex> suf = char_poly_suffix(op.diagonal, z);
  std::vector<std::complex<double>> out;
  out.reserve(op.diagonal.size());
  for (long k = 0; k < op.size(); ++k) out.push_back(green_entry(pre, suf, k, k));
  return out;
}

GreenTraceBound green_trace_bound(const FiniteOperator& op, double E, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("green_trace_bound: eta must be > 0");
  GreenTraceBound out;
  double n = static_cast<double>(op.size());
  out.d_n = static_cast<double>(eigen_count(op, E + eta) - eigen_count(op, E - eta)) / n;
  std::vector<std::complex<double>> diag = green_diagonal_all(op, {E, eta});
  std::vector<double> imag(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) imag[i] = diag[i].imag();
  out.bound = 2.0 * eta / n * pairwise_sum(imag);
  return out;
}

double resolvent_decoupling_check(const FiniteOperator& op, std::complex<double> z, long k,
                                  long a, long b) {
  long n = op.size();
  if (!(0 <= a && a <= k && k <= b && b < n))
    throw std::invalid_argument("resolvent_decoupling_check: need 0 <= a <= k <= b < N");
  if (!(z.imag() > 0.0))
    throw std::invalid_argument("resolvent_decoupling_check: need Im z > 0");

  std::vector<LogComplex> pre = char_poly_prefix(op.diagonal, z);
  std::vector<LogComplex> suf = char_poly_suffix(op.diagonal, z);
  std::complex<double> direct = green_entry(pre, suf, k, k);

  std::vector<double> window(op.diagonal.begin() + a, op.diagonal.begin() + b + 1);
  std::vector<LogComplex> wpre = char_poly_prefix(window, z);
  std::vector<LogComplex> wsuf = char_poly_suffix(window, z);

  std::complex<double> decoupled = green_entry(wpre, wsuf, k - a, k - a);
  if (a > 0) decoupled -= green_entry(wpre, wsuf, 0, k - a) * green_entry(pre, suf, a - 1, k);
  if (b < n - 1)
    decoupled -= green_entry(wpre, wsuf, k - a, b - a) * green_entry(pre, suf, k, b + 1);
  return std::abs(direct - decoupled);
}

}  // namespace qps
