#pragma once

#include <stdexcept>
#include <string>

namespace qps {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric guard trips: the requested computation cannot proceed within the
// configured precision or size budget. CLI maps these to exit code 3.
struct NumericGuardError : Error {
  using Error::Error;
};

// Fixed-point torus arithmetic cannot certify the requested accuracy.
struct PrecisionExhausted : NumericGuardError {
  using NumericGuardError::NumericGuardError;
};

// A big-integer quantity outgrew its configured budget.
struct BudgetExceeded : NumericGuardError {
  using NumericGuardError::NumericGuardError;
};

// Continued-fraction expansion terminated: the input behaves like a rational.
struct RationalDetected : Error {
  using Error::Error;
};

// Too many eigenvalues inside the exclusion window of a spectral average.
struct TooCloseToSpectrum : Error {
  using Error::Error;
};

// Counting increments sit at the 1/N quantization floor; a fit would be noise.
struct ResolutionFloor : Error {
  using Error::Error;
};

// Green's function evaluation requested at (numerically) coincident points.
struct CoincidentPoints : Error {
  using Error::Error;
};

}  // namespace qps
