#pragma once

#include <variant>

#include "cantor/decimal.hpp"
#include "cantor/ensembles.hpp"
#include "cantor/genfunc.hpp"
#include "cantor/number_field.hpp"
#include "cantor/real.hpp"

namespace cantor {

/// Total bitsum a_n, total squared bitsum b_n, c_n = count_n b_n - a_n^2 and
/// the member counts, n = 0..N.
struct BitsumSeries {
  EnsembleKind kind;
  Series a;
  Series b;
  Series c;
  Series counts;
};

/// Exact limit value living in Q, Q(phi) or Q(psi) depending on the kind.
using FieldValue = std::variant<Rational, QuadElement, CubicElement>;

std::string to_string(const FieldValue& v);
Real to_real(const FieldValue& v);
DecimalApprox approximate(const FieldValue& v, int digits);

struct DensityLimit {
  EnsembleKind kind;
  FieldValue mean_density;
  FieldValue variance_density;
  DecimalApprox mean_decimal;
  DecimalApprox variance_decimal;
};

/// The displayed generating functions of a_n, b_n and c_n (solus, multus).
RationalGF bitsum_gf(EnsembleKind kind, int which);  // which: 0 = a, 1 = b, 2 = c

BitsumSeries bitsum_series(EnsembleKind kind, int N);

/// lim E(S_n)/n and lim V(S_n)/n, derived exactly from the dominant pole of
/// the a_n and b_n generating functions.
DensityLimit bitsum_density(EnsembleKind kind, int digits = 10);

/// The multus limits as printed in radical form, evaluated at working
/// precision: {mean, variance}.
std::pair<Real, Real> multus_density_radicals();

struct EmpiricalBitsum {
  BigInt total;
  BigInt total_sq;
  Rational mean;
  Rational variance;
};

EmpiricalBitsum empirical_bitsum(EnsembleKind kind, unsigned m,
                                 std::uint64_t cap = kMaxEnumeration);

}  // namespace cantor
