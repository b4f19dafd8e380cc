#include "qps/bigint.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qps {

long bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1;
}

namespace {

// Top 64 bits of |x| as a double, together with the shift that was applied.
double top_mantissa(const BigInt& x, long* shift) {
  BigInt a = boost::multiprecision::abs(x);
  long bl = bit_length(a);
  *shift = bl > 64 ? bl - 64 : 0;
  BigInt top = a >> static_cast<unsigned>(*shift);
  return top.convert_to<double>();
}

}  // namespace

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: nonpositive argument");
  long shift = 0;
  double m = top_mantissa(x, &shift);
  return std::log(m) + static_cast<double>(shift) * M_LN2;
}

double to_double_sat(const BigInt& x) {
  long bl = bit_length(x);
  if (bl > 1023) return x < 0 ? -INFINITY : INFINITY;
  return x.convert_to<double>();
}

double ratio_to_double(const BigInt& x, long bits) {
  if (x == 0) return 0.0;
  long shift = 0;
  double m = top_mantissa(x, &shift);
  double v = m * std::exp2(static_cast<double>(shift - bits));
  return x < 0 ? -v : v;
}

}  // namespace qps
