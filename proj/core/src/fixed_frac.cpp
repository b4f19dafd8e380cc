#include "qps/fixed_frac.hpp"

#include <cmath>
#include <stdexcept>

namespace qps {

FixedFrac::FixedFrac(BigInt num, int bits) : num_(std::move(num)), bits_(bits) {
  if (bits_ < 64) throw std::invalid_argument("FixedFrac: bits must be >= 64");
  if (num_ < 0 || bit_length(num_) > bits_) throw std::invalid_argument("FixedFrac: numerator out of range");
}

FixedFrac FixedFrac::from_double(double x, int bits) {
  if (!(x >= 0.0) || x >= 1.0) throw std::invalid_argument("FixedFrac: value must lie in [0, 1)");
  // x = m * 2^e with 53-bit m; shift the mantissa onto the lattice.
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
  auto mant = static_cast<long long>(std::ldexp(m, 53));  // exact
  BigInt num = mant;
  long shift = bits + e - 53;
  if (shift >= 0) {
    num <<= static_cast<unsigned>(shift);
  } else {
    num >>= static_cast<unsigned>(-shift);
  }
  return FixedFrac(std::move(num), bits);
}

FixedFrac FixedFrac::from_ratio(const BigInt& p, const BigInt& q, int bits) {
  if (q <= 0 || p < 0 || p >= q) throw std::invalid_argument("FixedFrac: ratio must lie in [0, 1)");
  BigInt num = (p << static_cast<unsigned>(bits)) / q;
  return FixedFrac(std::move(num), bits);
}

double FixedFrac::to_double() const { return ratio_to_double(num_, bits_); }

FixedFrac FixedFrac::times_int_mod1(const BigInt& k) const {
  BigInt kk = boost::multiprecision::abs(k);
  BigInt mask = (BigInt(1) << static_cast<unsigned>(bits_)) - 1;
  BigInt prod = (kk & mask) * num_;
  BigInt frac = prod & mask;
  if (k < 0 && frac != 0) frac = mask + 1 - frac;
  return FixedFrac(std::move(frac), bits_);
}

BigInt FixedFrac::dist_numerator() const {
  BigInt half_complement = (BigInt(1) << static_cast<unsigned>(bits_)) - num_;
  return num_ <= half_complement ? num_ : half_complement;
}

double FixedFrac::dist_to_double() const { return ratio_to_double(dist_numerator(), bits_); }

}  // namespace qps
