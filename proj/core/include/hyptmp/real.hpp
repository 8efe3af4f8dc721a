#pragma once

#include "hyptmp/quadext.hpp"
#include "hyptmp/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <string>

namespace hyptmp {

using Real = boost::multiprecision::mpfr_float;

// Boost's default mpfr precision is process-wide, so a scope holds a
// recursive lock for its lifetime and restores the previous precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

unsigned digits10_for_bits(unsigned bits);

Real to_real(const Rat& q);
Real to_real(const QuadExt& q);
// Decimal string with the given number of significant digits.
std::string to_decimal(const Real& x, unsigned digits);

// Best rational approximation with denominator <= max_den (continued fractions).
Rat rationalize(const Real& x, const Int& max_den);

}  // namespace hyptmp
