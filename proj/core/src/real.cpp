#include "cantor/real.hpp"

#include <mpfr.h>

#include "cantor/errors.hpp"

namespace cantor {

Real to_real(const Rational& x) {
  Real r;
  mpfr_set_q(r.backend().data(), x.gmp().get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const QuadElement& x) { return to_real(x.a()) + to_real(x.b()) * golden_mean(); }

Real to_real(const CubicElement& x) {
  const Real psi = second_golden_mean();
  return to_real(x.a()) + psi * (to_real(x.b()) + psi * to_real(x.c()));
}

Rational to_rational(const Real& x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x.backend().data());
  return Rational::from_gmp(q);
}

Real golden_mean() {
  static const Real phi = (1 + boost::multiprecision::sqrt(Real(5))) / 2;
  return phi;
}

Real second_golden_mean() {
  static const Real psi = [] {
    Real x = 1.75;
    for (int i = 0; i < 12; ++i) {
      const Real p = ((x - 2) * x + 1) * x - 1;
      const Real dp = (3 * x - 4) * x + 1;
      x -= p / dp;
    }
    return x;
  }();
  return psi;
}

Real euler_gamma() {
  static const Real g = [] {
    Real r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
  }();
  return g;
}

DecimalApprox approximate(const Real& value, const Real& error, int digits) {
  if (error < 0) fail(ErrorCode::invalid_argument, "negative error bound");
  const Rational v = to_rational(value);
  // Outward slack for the conversion of error itself.
  const Rational e = to_rational(error) * Rational(1000001, 1000000) +
                     Rational(BigInt(1), pow10(kRealDigits - 4));
  return from_enclosure(v - e, v + e, digits);
}

}  // namespace cantor
