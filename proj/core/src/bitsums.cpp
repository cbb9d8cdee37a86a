#include "cantor/bitsums.hpp"

#include "cantor/errors.hpp"
#include "cantor/singularity.hpp"

namespace cantor {

namespace {

const Poly kMultusD{1, -2, 1, -1};

template <ExactField F>
struct Limits {
  F mean;
  F variance;
};

// a_n ~ rho^-n (a1 n + a0), b_n ~ rho^-n (b2 n^2 + b1 n + b0), counts ~
// rho^-n f0. The n^2 term of count*b - a^2 must cancel.
template <ExactField F>
Limits<F> limits_from_poles(const RationalGF& a, const RationalGF& b, const RationalGF& counts,
                            const F& rho) {
  const auto pa = pole_expansion(a.numerator(), a.denominator(), rho, 2);
  const auto pb = pole_expansion(b.numerator(), b.denominator(), rho, 3);
  const auto pf = pole_expansion(counts.numerator(), counts.denominator(), rho, 1);
  const F& f0 = pf.growth[0];
  const F& a0 = pa.growth[0];
  const F& a1 = pa.growth[1];
  if (!(f0 * pb.growth[2] - a1 * a1).is_zero()) {
    fail(ErrorCode::invalid_argument, "quadratic variance term does not cancel");
  }
  const F two(2);
  return {a1 / f0, (f0 * pb.growth[1] - two * a1 * a0) / (f0 * f0)};
}

}  // namespace

std::string to_string(const FieldValue& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

Real to_real(const FieldValue& v) {
  return std::visit([](const auto& x) { return cantor::to_real(x); }, v);
}

DecimalApprox approximate(const FieldValue& v, int digits) {
  return std::visit([digits](const auto& x) { return cantor::approximate(x, digits); }, v);
}

RationalGF bitsum_gf(EnsembleKind kind, int which) {
  if (which < 0 || which > 2) fail(ErrorCode::invalid_argument, "which must be 0, 1 or 2");
  switch (kind) {
    case EnsembleKind::unconstrained:
      fail(ErrorCode::unsupported, "unconstrained bitsums are handled in closed form");
    case EnsembleKind::solus: {
      const Poly d{1, -1, -1};
      if (which == 0) return {Poly{0, 1}, d.pow(2)};
      if (which == 1) return {Poly{0, 1, -1, 1}, d.pow(3)};
      return {Poly{0, 1, -1}, Poly{1, 1}.pow(3) * Poly{1, -3, 1}.pow(2)};
    }
    case EnsembleKind::multus:
      if (which == 0) return {Poly{0, 0, 2, -1}, kMultusD.pow(2)};
      if (which == 1) return {Poly{0, 0, 4, -7, 4, 3, -1}, kMultusD.pow(3)};
      return {Poly{0, 0, 4, -9, 9, -9, -6, 1, -6, 0, 1},
              Poly{1, -1, 2, -1}.pow(3) * Poly{1, -2, -3, -1}.pow(2)};
  }
  fail(ErrorCode::invalid_argument, "unknown ensemble kind");
}

BitsumSeries bitsum_series(EnsembleKind kind, int N) {
  if (N < 0) fail(ErrorCode::invalid_argument, "N must be >= 0");
  BitsumSeries out{kind, gf_coefficients(bitsum_gf(kind, 0), N),
                   gf_coefficients(bitsum_gf(kind, 1), N), gf_coefficients(bitsum_gf(kind, 2), N),
                   gf_coefficients(counting_gf(kind), N)};
  return out;
}

DensityLimit bitsum_density(EnsembleKind kind, int digits) {
  DensityLimit out{kind, Rational(1, 2), Rational(1, 4), {}, {}};
  switch (kind) {
    case EnsembleKind::unconstrained:
      break;
    case EnsembleKind::solus: {
      const QuadElement rho(Rational(-1), Rational(1));  // 1/phi
      const auto l = limits_from_poles(bitsum_gf(kind, 0), bitsum_gf(kind, 1),
                                       counting_gf(kind), rho);
      out.mean_density = l.mean;
      out.variance_density = l.variance;
      break;
    }
    case EnsembleKind::multus: {
      const CubicElement rho = CubicElement::generator().inverse();
      const auto l = limits_from_poles(bitsum_gf(kind, 0), bitsum_gf(kind, 1),
                                       counting_gf(kind), rho);
      out.mean_density = l.mean;
      out.variance_density = l.variance;
      break;
    }
  }
  out.mean_decimal = approximate(out.mean_density, digits);
  out.variance_decimal = approximate(out.variance_density, digits);
  return out;
}

std::pair<Real, Real> multus_density_radicals() {
  const Real r69 = sqrt(Real(69));
  const Real mean = (2 - cbrt((23 + 3 * r69) / 1058) + cbrt((-23 + 3 * r69) / 1058)) / 3;
  const Real variance = cbrt(Real(69) / 2) / 1587 *
                        (cbrt(404685 + 35053 * r69) + cbrt(404685 - 35053 * r69));
  return {mean, variance};
}

EmpiricalBitsum empirical_bitsum(EnsembleKind kind, unsigned m, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t total_sq = 0;
  for_each_member(
      kind, m,
      [&](const BitString& s) {
        const auto w = static_cast<std::uint64_t>(s.popcount());
        total += w;
        total_sq += w * w;
      },
      cap);
  const BigInt n = count(kind, m);
  EmpiricalBitsum out{BigInt(std::to_string(total), 10), BigInt(std::to_string(total_sq), 10),
                      Rational(), Rational()};
  out.mean = Rational(out.total, n);
  out.variance = Rational(n * out.total_sq - out.total * out.total, n * n);
  return out;
}

}  // namespace cantor
