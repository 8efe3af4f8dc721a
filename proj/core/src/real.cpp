#include "hyptmp/real.hpp"

#include <cmath>

namespace hyptmp {

namespace {
std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}
}  // namespace

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits)
    : lock_(precision_mutex()), saved_(Real::default_precision()) {
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const Rat& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const QuadExt& q) {
  if (q.is_rational()) return to_real(q.a());
  Real d;
  mpfr_set_z(d.backend().data(), q.d().get_mpz_t(), MPFR_RNDN);
  return to_real(q.a()) + to_real(q.b()) * boost::multiprecision::sqrt(d);
}

std::string to_decimal(const Real& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

Rat rationalize(const Real& x, const Int& max_den) {
  // Convergents h/k of the continued fraction of x.
  Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Real rem = x;
  for (int it = 0; it < 400; ++it) {
    Real fl = boost::multiprecision::floor(rem);
    Int a;
    mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDN);
    Int h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    Real frac = rem - fl;
    if (frac == 0) break;
    rem = 1 / frac;
  }
  if (k1 == 0) return Rat(0);
  Rat r(h1, k1);
  r.canonicalize();
  return r;
}

}  // namespace hyptmp
