#pragma once

#include "qps/bigint.hpp"

namespace qps {

// Fixed-point representation of a fractional value in [0, 1): num / 2^bits.
// All torus operations (k*x mod 1, distance to the nearest integer) stay on
// the fixed-point lattice, so the only error source is the 2^-bits rounding
// of the stored value; multiplying by an integer k scales that error by |k|.
class FixedFrac {
 public:
  static constexpr int kDefaultBits = 192;

  FixedFrac() : num_(0), bits_(kDefaultBits) {}
  FixedFrac(BigInt num, int bits);

  // Exact for normal doubles in (0, 1); floor rounding otherwise.
  static FixedFrac from_double(double x, int bits = kDefaultBits);
  // floor(p * 2^bits / q); requires 0 <= p < q.
  static FixedFrac from_ratio(const BigInt& p, const BigInt& q, int bits);

  int bits() const { return bits_; }
  const BigInt& numerator() const { return num_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const;

  // Fractional part of k * value, exact on the lattice. k may be negative.
  FixedFrac times_int_mod1(const BigInt& k) const;

  // Distance to the nearest integer as a lattice numerator: min(num, 2^bits - num).
  BigInt dist_numerator() const;
  double dist_to_double() const;

 private:
  BigInt num_;
  int bits_;
};

}  // namespace qps
