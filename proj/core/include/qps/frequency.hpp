#pragma once

#include <optional>
#include <vector>

#include "qps/fixed_frac.hpp"

namespace qps {

// Convergent p_n/q_n of a continued fraction, indexed from n = 1.
struct Convergent {
  int index = 0;
  BigInt p;
  BigInt q;
};

// beta_n = log(q_{n+1}) / q_n for each level with a successor, plus a
// limsup estimate taken as the max over the tail half of the sequence.
struct BetaSequence {
  struct Entry {
    int n = 0;
    double beta = 0.0;
  };
  std::vector<Entry> entries;
  double limsup_estimate = 0.0;
};

// Irrational frequency on the torus, held as its partial quotients together
// with a fixed-point value. The stored value always agrees with the listed
// quotients: |frac - p_N/q_N| <= 1/q_N^2 for the deepest convergent.
class Frequency {
 public:
  static Frequency golden(int depth = 40);
  static Frequency sqrt2(int depth = 40);
  // Completes the listed quotients with an all-ones tail to pin the value.
  static Frequency from_quotients(std::vector<BigInt> quotients);
  // Ingests a floating-point value via continued-fraction expansion.
  static Frequency from_double(double x, int depth = 40);

  const std::vector<BigInt>& quotients() const { return quotients_; }
  int levels() const { return static_cast<int>(quotients_.size()); }
  const FixedFrac& frac() const { return frac_; }
  double value() const { return frac_.to_double(); }
  std::optional<double> float_hint() const { return float_hint_; }
  void set_float_hint(double h) { float_hint_ = h; }

 private:
  Frequency(std::vector<BigInt> quotients, FixedFrac frac);
  void validate() const;

  std::vector<BigInt> quotients_;
  FixedFrac frac_;
  std::optional<double> float_hint_;
};

// Partial quotients of x by exact integer Euclid on the fixed-point lattice.
// Throws RationalDetected if a remainder vanishes or a quotient exceeds 2^63
// before `depth` quotients are produced.
std::vector<BigInt> expand_continued_fraction(const FixedFrac& x, int depth);

// Convergents p_n/q_n for n = 1..count (count <= om.levels()).
std::vector<Convergent> convergents(const Frequency& om, int count);

BetaSequence beta_sequence(const Frequency& om);

// Builds quotients a_{n+1} = ceil(e^{target_beta * q_n} / q_n) on top of the
// seed until `levels` quotients exist in total. Throws BudgetExceeded when a
// denominator would outgrow `digit_budget` decimal digits.
Frequency make_liouville(double target_beta, int levels, std::vector<BigInt> seed = {BigInt(2)},
                         long digit_budget = 10000);

// Distance from k*omega to the nearest integer. Guard: the fixed-point error
// |k| * 2^-bits must stay below 2^-40, else PrecisionExhausted.
double torus_norm(const BigInt& k, const Frequency& om);
double torus_norm(long long k, const Frequency& om);
// Same distance kept on the fixed-point lattice, for exact identity checks.
FixedFrac torus_dist_exact(const BigInt& k, const Frequency& om);

// Fejer multiplier F_Q(k) = sum_{|j|<Q} ((Q-|j|)/Q^2) e^{2 pi i k j omega}.
// Real by symmetry; evaluated in closed form on the fixed-point lattice.
double fejer(long long Q, const BigInt& k, const Frequency& om);

}  // namespace qps
