#pragma once

#include <string>

#include "cantor/number_field.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// A decimal rendering of an exact or computed quantity together with a
/// certified enclosure [lower, upper] of the true value.
/// Invariant: |true - value| <= error_bound <= 10^-digits.
struct DecimalApprox {
  std::string value;
  int digits = 0;
  Rational error_bound;
  Rational lower;
  Rational upper;

  Rational rendered() const;
  double to_double() const;
  /// Short scientific rendering of error_bound, rounded up (e.g. "5e-11").
  std::string error_bound_string() const;
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) * Rational(1, 2); }
};

/// Round-half-up rendering with exactly `digits` fractional digits.
std::string render_decimal(const Rational& x, int digits);

/// Builds an approximation from a certified enclosure. Requires the
/// enclosure width to be at most 10^-digits.
DecimalApprox from_enclosure(const Rational& lo, const Rational& hi, int digits);

/// Step `steps` of the interval Newton sequence for phi (resp. psi) on its
/// minimal polynomial, started from [3/2, 2]. Later steps are nested in
/// earlier ones.
RationalInterval phi_enclosure(int steps);
RationalInterval psi_enclosure(int steps);

/// Enclosures of field elements no wider than max_width.
RationalInterval enclose(const QuadElement& x, const Rational& max_width);
RationalInterval enclose(const CubicElement& x, const Rational& max_width);

/// Sign of a field element, decided by refining its enclosure.
int sign(const QuadElement& x);
int sign(const CubicElement& x);

DecimalApprox approximate(const Rational& x, int digits);
DecimalApprox approximate(const QuadElement& x, int digits);
DecimalApprox approximate(const CubicElement& x, int digits);

}  // namespace cantor
