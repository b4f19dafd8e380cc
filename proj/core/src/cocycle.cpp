#include "qps/cocycle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qps {

namespace {

// Rescale once the cheap max-entry proxy certifies ||M|| > 2^512.  For a 2x2
// matrix max_abs <= ||M|| <= 2 max_abs, so f > 2^512 certainly needs a rescale
// and f <= 2^511 certainly does not; in between fall back to the exact norm.
const double kRescaleHi = std::ldexp(1.0, 512);
const double kRescaleLo = std::ldexp(1.0, 511);

// Pull powers of two out of the determinant mantissa (exactly, via ldexp) so
// repeated /s^2 divisions never underflow the stored value.
void renorm_det(std::complex<double>& mantissa, long& exponent) {
  double mag = std::abs(mantissa);
  if (mag == 0.0 || !std::isfinite(mag)) return;
  int k = 0;
  std::frexp(mag, &k);
  if (k > 64 || k < -64) {
    mantissa = {std::ldexp(mantissa.real(), -k), std::ldexp(mantissa.imag(), -k)};
    exponent += k;
  }
}

void divide_det(std::complex<double>& mantissa, long& exponent, double s) {
  // Two single divisions: s*s itself can overflow for s near the 2^512 trigger.
  mantissa /= s;
  renorm_det(mantissa, exponent);
  mantissa /= s;
  renorm_det(mantissa, exponent);
}

void maybe_rescale(Mat2& m, double& log_acc, std::complex<double>& det_mantissa,
                   long& det_exponent, long& rescales) {
  double f = m.max_abs();
  double s;
  if (f > kRescaleHi) {
    s = m.opnorm();
  } else if (f <= kRescaleLo) {
    return;
  } else {
    s = m.opnorm();
    if (s <= kRescaleHi) return;
  }
  m *= 1.0 / s;
  divide_det(det_mantissa, det_exponent, s);
  log_acc += std::log(s);
  ++rescales;
}

}  // namespace

Mat2 transfer_step(const Cocycle& c, double theta, double eps) {
  std::complex<double> top = c.energy - c.potential.eval(theta, eps);
  return Mat2{top, {-1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
}

std::vector<double> omega_multiples(const Frequency& om, long m) {
  if (m < 0) throw std::invalid_argument("omega_multiples: negative length");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(m));
  for (long j = 0; j < m; ++j)
    out.push_back(j == 0 ? 0.0 : om.frac().times_int_mod1(j).to_double());
  return out;
}

namespace {

inline double wrap_unit(double x) {
  double p = x - std::floor(x);
  return p >= 1.0 ? 0.0 : p;
}

// Left-multiply acc by the companion step [[t, -1], [1, 0]]: two complex
// multiplies instead of a general 2x2 product.
inline void apply_step(Mat2& acc, std::complex<double> t) {
  std::complex<double> na = t * acc.a - acc.c;
  std::complex<double> nb = t * acc.b - acc.d;
  acc.c = acc.a;
  acc.d = acc.b;
  acc.a = na;
  acc.b = nb;
}

template <typename PhaseAt>
TransferProduct product_loop(const Cocycle& c, long m, double eps, PhaseAt phase_at) {
  if (m < 0) throw std::invalid_argument("transfer_product: negative length");
  TransferProduct out;
  out.steps = m;
  Mat2 acc = Mat2::identity();
  double log_acc = 0.0;
  std::complex<double> det_mantissa{1.0, 0.0};
  long det_exponent = 0;
  for (long j = 0; j < m; ++j) {
    apply_step(acc, c.energy - c.potential.eval(phase_at(j), eps));
    maybe_rescale(acc, log_acc, det_mantissa, det_exponent, out.rescale_count);
  }
  double s = acc.opnorm();
  if (s > 0.0) {
    acc *= 1.0 / s;
    divide_det(det_mantissa, det_exponent, s);
    log_acc += std::log(s);
  }
  out.normalized_matrix = acc;
  out.det_mantissa = det_mantissa;
  out.det_exponent = det_exponent;
  out.accumulated_log_scale = log_acc;
  out.log_norm = std::max(log_acc, 0.0);
  return out;
}

}  // namespace

std::vector<double> orbit_phases(const Frequency& om, double theta, long m) {
  std::vector<double> shifts = omega_multiples(om, m);
  double t0 = wrap_unit(theta);
  for (double& s : shifts) s = wrap_unit(t0 + s);
  return shifts;
}

TransferProduct transfer_product_phases(const Cocycle& c, const std::vector<double>& phases,
                                        long m, double eps) {
  if (m >= 0 && static_cast<size_t>(m) > phases.size())
    throw std::invalid_argument("transfer_product: phase orbit shorter than product");
  return product_loop(c, m, eps, [&](long j) { return phases[static_cast<size_t>(j)]; });
}

TransferProduct transfer_product_shifted(const Cocycle& c, double theta0,
                                         const std::vector<double>& shifts, long m,
                                         double eps) {
  if (m >= 0 && static_cast<size_t>(m) > shifts.size())
    throw std::invalid_argument("transfer_product: shift orbit shorter than product");
  double t0 = wrap_unit(theta0);
  return product_loop(c, m, eps,
                      [&](long j) { return wrap_unit(t0 + shifts[static_cast<size_t>(j)]); });
}

TransferProduct transfer_product(const Cocycle& c, double theta, long m, double eps) {
  return transfer_product_shifted(c, theta, omega_multiples(c.frequency, m), m, eps);
}

double TransferProduct::det_log_residual() const {
  constexpr double kLog2 = 0.69314718055994530942;
  return std::log(std::abs(det_mantissa)) + static_cast<double>(det_exponent) * kLog2 +
         2.0 * accumulated_log_scale;
}

std::complex<double> LogComplex::value() const { return std::exp(log_mag) * phase; }

bool LogComplex::is_zero() const { return log_mag == -std::numeric_limits<double>::infinity(); }

LogComplex LogComplex::zero() {
  return LogComplex{-std::numeric_limits<double>::infinity(), {1.0, 0.0}};
}

LogComplex LogComplex::from(std::complex<double> z) {
  double mag = std::abs(z);
  if (mag == 0.0) return zero();
  return LogComplex{std::log(mag), z / mag};
}

namespace {

const double kDetHi = std::ldexp(1.0, 512);
const double kDetLo = std::ldexp(1.0, -512);

struct ScaledPair {
  std::complex<double> cur{1.0, 0.0};   // P_j   / 2^shift
  std::complex<double> prev{0.0, 0.0};  // P_{j-1} / 2^shift
  long shift = 0;                       // power-of-two rescales are exact

  void step(std::complex<double> diag) {
    std::complex<double> next = diag * cur - prev;
    prev = cur;
    cur = next;
    double f = std::max(std::abs(cur), std::abs(prev));
    if (f > kDetHi) {
      cur = std::complex<double>(std::ldexp(cur.real(), -512), std::ldexp(cur.imag(), -512));
      prev = std::complex<double>(std::ldexp(prev.real(), -512), std::ldexp(prev.imag(), -512));
      shift += 512;
    } else if (f < kDetLo && f > 0.0) {
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

}  // namespace

LogComplex dirichlet_determinant(const Cocycle& c, double theta, long m, double eps) {
  if (m < 0) throw std::invalid_argument("dirichlet_determinant: negative size");
  std::vector<double> phases = orbit_phases(c.frequency, theta, m);
  ScaledPair p;
  for (long j = 0; j < m; ++j)
    p.step(c.energy - c.potential.eval(phases[static_cast<size_t>(j)], eps));
  return p.current();
}

std::vector<LogComplex> dirichlet_prefix(const Cocycle& c, double theta, long m_max,
                                         double eps) {
  if (m_max < 0) throw std::invalid_argument("dirichlet_prefix: negative size");
  std::vector<double> phases = orbit_phases(c.frequency, theta, m_max);
  std::vector<LogComplex> out;
  out.reserve(static_cast<size_t>(m_max) + 1);
  ScaledPair p;
  out.push_back(p.current());
  for (long j = 0; j < m_max; ++j) {
    p.step(c.energy - c.potential.eval(phases[static_cast<size_t>(j)], eps));
    out.push_back(p.current());
  }
  return out;
}

}  // namespace qps
