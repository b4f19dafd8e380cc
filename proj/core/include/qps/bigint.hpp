#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qps {

using BigInt = boost::multiprecision::cpp_int;

// Number of bits in |x|; 0 for x == 0.
long bit_length(const BigInt& x);

// Natural log of a positive big integer, valid far beyond double range.
double log_big(const BigInt& x);

// Convert to double, saturating to +/-inf instead of throwing on overflow.
double to_double_sat(const BigInt& x);

// x / 2^bits as a double; underflows to 0 for very small ratios.
double ratio_to_double(const BigInt& x, long bits);

}  // namespace qps
