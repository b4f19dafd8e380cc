#include "qps/frequency.hpp"

#include <cmath>
#include <stdexcept>

#include "qps/errors.hpp"

namespace qps {

namespace {

constexpr long kGuardBits = 40;  // require |k| * 2^-bits < 2^-kGuardBits

long pick_bits(const BigInt& q_last) {
  long need = 2 * bit_length(q_last) + 128;
  return std::max<long>(FixedFrac::kDefaultBits, need);
}

// floor(sqrt(a)) for a >= 0.
BigInt isqrt(const BigInt& a) { return boost::multiprecision::sqrt(a); }

// Last two convergents (p_{N-1}, q_{N-1}, p_N, q_N) of the quotient list.
void tail_convergents(const std::vector<BigInt>& as, BigInt* p_prev, BigInt* q_prev, BigInt* p_last,
                      BigInt* q_last) {
  BigInt p0 = 1, q0 = 0;  // virtual n = -1
  BigInt p1 = 0, q1 = 1;  // n = 0
  for (const BigInt& a : as) {
    BigInt p2 = a * p1 + p0;
    BigInt q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  *p_prev = p0;
  *q_prev = q0;
  *p_last = p1;
  *q_last = q1;
}

// Fixed-point value of the continued fraction [0; a_1, ..., a_N, 1, 1, ...]:
// the listed quotients completed with a golden tail x = (1+sqrt(5))/2.
FixedFrac value_with_golden_tail(const std::vector<BigInt>& as, long bits) {
  BigInt p_prev, q_prev, p_last, q_last;
  tail_convergents(as, &p_prev, &q_prev, &p_last, &q_last);
  BigInt one = BigInt(1) << static_cast<unsigned>(bits);
  BigInt phi = (isqrt(BigInt(5) << static_cast<unsigned>(2 * bits)) + one) / 2;
  BigInt num = p_last * phi + (p_prev << static_cast<unsigned>(bits));
  BigInt den = q_last * phi + (q_prev << static_cast<unsigned>(bits));
  BigInt frac = (num << static_cast<unsigned>(bits)) / den;
  if (frac >= one) frac = one - 1;
  return FixedFrac(frac, static_cast<int>(bits));
}

std::vector<BigInt> repeated_quotients(unsigned long value, int depth) {
  if (depth < 1) throw std::invalid_argument("Frequency: depth must be >= 1");
  return std::vector<BigInt>(static_cast<size_t>(depth), BigInt(value));
}

void check_guard(const BigInt& k, const FixedFrac& frac) {
  if (k == 0) throw std::invalid_argument("torus_norm: k must be nonzero");
  if (bit_length(k) + kGuardBits > frac.bits()) {
    throw PrecisionExhausted("torus_norm: |k| too large for the fixed-point width");
  }
}

}  // namespace

Frequency::Frequency(std::vector<BigInt> quotients, FixedFrac frac)
    : quotients_(std::move(quotients)), frac_(std::move(frac)) {
  validate();
}

void Frequency::validate() const {
  if (quotients_.empty()) throw std::invalid_argument("Frequency: empty quotient list");
  for (const BigInt& a : quotients_) {
    if (a < 1) throw std::invalid_argument("Frequency: partial quotients must be positive");
  }
  if (frac_.is_zero()) throw std::invalid_argument("Frequency: fractional value must be nonzero");
  // |frac - p_N/q_N| <= 1/q_N^2, cross-multiplied to stay exact.
  BigInt p_prev, q_prev, p_last, q_last;
  tail_convergents(quotients_, &p_prev, &q_prev, &p_last, &q_last);
  BigInt lhs = frac_.numerator() * q_last - (p_last << static_cast<unsigned>(frac_.bits()));
  lhs = boost::multiprecision::abs(lhs) * q_last;
  BigInt rhs = BigInt(1) << static_cast<unsigned>(frac_.bits());
  if (lhs > rhs) throw std::invalid_argument("Frequency: value disagrees with quotients");
}

Frequency Frequency::golden(int depth) {
  auto as = repeated_quotients(1, depth);
  long bits = FixedFrac::kDefaultBits;
  BigInt one = BigInt(1) << static_cast<unsigned>(bits);
  BigInt num = (isqrt(BigInt(5) << static_cast<unsigned>(2 * bits)) - one) / 2;
  return Frequency(std::move(as), FixedFrac(num, static_cast<int>(bits)));
}

Frequency Frequency::sqrt2(int depth) {
  auto as = repeated_quotients(2, depth);
  long bits = FixedFrac::kDefaultBits;
  BigInt one = BigInt(1) << static_cast<unsigned>(bits);
  BigInt num = isqrt(BigInt(2) << static_cast<unsigned>(2 * bits)) - one;
  return Frequency(std::move(as), FixedFrac(num, static_cast<int>(bits)));
}

Frequency Frequency::from_quotients(std::vector<BigInt> quotients) {
  BigInt p_prev, q_prev, p_last, q_last;
  tail_convergents(quotients, &p_prev, &q_prev, &p_last, &q_last);
  long bits = pick_bits(q_last);
  FixedFrac frac = value_with_golden_tail(quotients, bits);
  return Frequency(std::move(quotients), std::move(frac));
}

Frequency Frequency::from_double(double x, int depth) {
  if (!(x > 0.0) || !(x < 1.0)) throw std::invalid_argument("Frequency: value must lie in (0, 1)");
  FixedFrac fx = FixedFrac::from_double(x);
  auto as = expand_continued_fraction(fx, depth);
  Frequency om = from_quotients(std::move(as));
  om.set_float_hint(x);
  return om;
}

std::vector<BigInt> expand_continued_fraction(const FixedFrac& x, int depth) {
  if (depth < 1) throw std::invalid_argument("expand_continued_fraction: depth must be >= 1");
  if (x.is_zero()) throw RationalDetected("expand_continued_fraction: zero input");
  BigInt r_prev = BigInt(1) << static_cast<unsigned>(x.bits());
  BigInt r = x.numerator();
  std::vector<BigInt> out;
  out.reserve(static_cast<size_t>(depth));
  while (static_cast<int>(out.size()) < depth) {
    if (r == 0) throw RationalDetected("expand_continued_fraction: remainder vanished");
    BigInt a = r_prev / r;
    if (bit_length(a) > 63) throw RationalDetected("expand_continued_fraction: quotient overflow");
    BigInt r_next = r_prev - a * r;
    out.push_back(std::move(a));
    r_prev = r;
    r = std::move(r_next);
  }
  return out;
}

std::vector<Convergent> convergents(const Frequency& om, int count) {
  if (count < 1) throw std::invalid_argument("convergents: count must be >= 1");
  if (count > om.levels()) throw std::invalid_argument("convergents: count exceeds quotient depth");
  std::vector<Convergent> out;
  out.reserve(static_cast<size_t>(count));
  BigInt p0 = 1, q0 = 0, p1 = 0, q1 = 1;
  for (int n = 1; n <= count; ++n) {
    const BigInt& a = om.quotients()[static_cast<size_t>(n - 1)];
    BigInt p2 = a * p1 + p0;
    BigInt q2 = a * q1 + q0;
    out.push_back(Convergent{n, p2, q2});
    p0 = p1;
    q0 = q1;
    p1 = std::move(p2);
    q1 = std::move(q2);
  }
  return out;
}

BetaSequence beta_sequence(const Frequency& om) {
  auto cs = convergents(om, om.levels());
  BetaSequence bs;
  int n_entries = om.levels() - 1;
  for (int n = 1; n <= n_entries; ++n) {
    double qn = to_double_sat(cs[static_cast<size_t>(n - 1)].q);
    double beta = log_big(cs[static_cast<size_t>(n)].q) / qn;
    bs.entries.push_back({n, beta});
  }
  if (!bs.entries.empty()) {
    size_t tail_start = bs.entries.size() / 2;
    double mx = bs.entries[tail_start].beta;
    for (size_t i = tail_start; i < bs.entries.size(); ++i) mx = std::max(mx, bs.entries[i].beta);
    bs.limsup_estimate = mx;
  }
  return bs;
}

Frequency make_liouville(double target_beta, int levels, std::vector<BigInt> seed, long digit_budget) {
  if (!(target_beta > 0.0)) throw std::invalid_argument("make_liouville: target_beta must be positive");
  if (seed.empty()) throw std::invalid_argument("make_liouville: seed must be nonempty");
  if (levels < static_cast<int>(seed.size())) {
    throw std::invalid_argument("make_liouville: levels smaller than seed length");
  }
  long budget_bits = static_cast<long>(std::ceil(static_cast<double>(digit_budget) * std::log2(10.0)));
  std::vector<BigInt> as = std::move(seed);
  BigInt p_prev, q_prev, p_last, q_last;
  tail_convergents(as, &p_prev, &q_prev, &p_last, &q_last);
  if (bit_length(q_last) > budget_bits) throw BudgetExceeded("make_liouville: seed exceeds digit budget");
  while (static_cast<int>(as.size()) < levels) {
    double log_qn = log_big(q_last);
    double qn_d = to_double_sat(q_last);
    double t = target_beta * qn_d;  // log of e^{beta q_n}
    double next_bits_est = (t + 1.0) * M_LOG2E;
    if (!(next_bits_est < static_cast<double>(budget_bits))) {
      throw BudgetExceeded("make_liouville: denominator would exceed digit budget");
    }
    BigInt a;
    if (t < 700.0) {
      a = BigInt(static_cast<long long>(std::ceil(std::exp(t) / qn_d)));
    } else {
      // a ~ e^t / q_n via a 53-bit mantissa; beta accuracy ~1e-12 suffices.
      double log2a = (t - log_qn) * M_LOG2E;
      long expo = static_cast<long>(std::floor(log2a));
      double mant = std::exp2(log2a - static_cast<double>(expo)) * 4503599627370496.0;  // 2^52 scale
      a = BigInt(static_cast<long long>(std::llround(mant)));
      long shift = expo - 52;
      if (shift > 0) {
        a <<= static_cast<unsigned>(shift);
      } else if (shift < 0) {
        a >>= static_cast<unsigned>(-shift);
      }
    }
    if (a < 1) a = 1;
    BigInt q_next = a * q_last + q_prev;
    BigInt p_next = a * p_last + p_prev;
    if (bit_length(q_next) > budget_bits) {
      throw BudgetExceeded("make_liouville: denominator would exceed digit budget");
    }
    as.push_back(std::move(a));
    p_prev = p_last;
    q_prev = q_last;
    p_last = std::move(p_next);
    q_last = std::move(q_next);
  }
  return Frequency::from_quotients(std::move(as));
}

FixedFrac torus_dist_exact(const BigInt& k, const Frequency& om) {
  check_guard(k, om.frac());
  FixedFrac f = om.frac().times_int_mod1(k);
  return FixedFrac(f.dist_numerator(), f.bits());
}

double torus_norm(const BigInt& k, const Frequency& om) { return torus_dist_exact(k, om).to_double(); }

double torus_norm(long long k, const Frequency& om) { return torus_norm(BigInt(k), om); }

double fejer(long long Q, const BigInt& k, const Frequency& om) {
  if (Q < 1) throw std::invalid_argument("fejer: Q must be >= 1");
  if (k == 0) return 1.0;
  check_guard(BigInt(Q) * k, om.frac());
  // F_Q(k) = (sin(pi Q k omega) / (Q sin(pi k omega)))^2; both sine arguments
  // reduce through sin^2(pi t), which has period 1, so torus distances suffice.
  double x1 = om.frac().times_int_mod1(k).dist_to_double();
  double x2 = om.frac().times_int_mod1(BigInt(Q) * k).dist_to_double();
  if (x1 == 0.0) return 1.0;
  double s1 = std::sin(M_PI * x1);
  double s2 = std::sin(M_PI * x2);
  double root = s2 / (static_cast<double>(Q) * s1);
  return std::min(1.0, root * root);
}

}  // namespace qps
