#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "cantor/decimal.hpp"
#include "cantor/number_field.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Working-precision real: MPFR with 64 significant decimal digits.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<64>,
                                           boost::multiprecision::et_off>;

inline constexpr int kRealDigits = 64;

Real to_real(const Rational& x);
Real to_real(const QuadElement& x);
Real to_real(const CubicElement& x);

/// Exact value of a (finite) Real.
Rational to_rational(const Real& x);

Real golden_mean();         // phi
Real second_golden_mean();  // psi
Real euler_gamma();

/// Renders a computed value with an absolute error bound. The enclosure is
/// [value - error, value + error] widened outward to rationals.
DecimalApprox approximate(const Real& value, const Real& error, int digits);

}  // namespace cantor
