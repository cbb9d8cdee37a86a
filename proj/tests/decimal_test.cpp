#include <gtest/gtest.h>

#include "cantor/decimal.hpp"
#include "cantor/errors.hpp"
#include "cantor/real.hpp"

namespace cantor {
namespace {

TEST(Decimal, RoundsHalfUp) {
  EXPECT_EQ(render_decimal(Rational(1, 8), 2), "0.13");
  EXPECT_EQ(render_decimal(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(render_decimal(Rational(2, 3), 4), "0.6667");
  EXPECT_EQ(render_decimal(Rational(5), 3), "5.000");
  EXPECT_EQ(render_decimal(Rational(999, 1000), 2), "1.00");
}

TEST(Decimal, ExactRationalsHaveConsistentBounds) {
  const DecimalApprox d = approximate(Rational(1, 3), 10);
  EXPECT_EQ(d.value, "0.3333333333");
  EXPECT_TRUE(d.contains(Rational(1, 3)));
  EXPECT_LE((d.rendered() - Rational(1, 3)).abs(), d.error_bound);
  EXPECT_LE(d.error_bound, Rational(BigInt(1), pow10(10)));
}

TEST(Decimal, GoldenMeanEnclosuresAreNested) {
  RationalInterval prev = phi_enclosure(0);
  for (int step = 1; step < 8; ++step) {
    const RationalInterval cur = phi_enclosure(step);
    EXPECT_LE(prev.lo, cur.lo);
    EXPECT_GE(prev.hi, cur.hi);
    // phi^2 - phi - 1 changes sign across the interval
    const auto f = [](const Rational& x) { return x * x - x - Rational(1); };
    EXPECT_LE(f(cur.lo).sign() * f(cur.hi).sign(), 0);
    prev = cur;
  }
  EXPECT_LT(prev.width(), Rational(BigInt(1), pow10(30)));
}

TEST(Decimal, SecondGoldenMeanEnclosuresAreNested) {
  RationalInterval prev = psi_enclosure(0);
  for (int step = 1; step < 8; ++step) {
    const RationalInterval cur = psi_enclosure(step);
    EXPECT_LE(prev.lo, cur.lo);
    EXPECT_GE(prev.hi, cur.hi);
    prev = cur;
  }
  const auto f = [](const Rational& x) { return x * x * x - Rational(2) * x * x + x - Rational(1); };
  EXPECT_LT(f(prev.lo), Rational(0));
  EXPECT_GT(f(prev.hi), Rational(0));
}

TEST(Decimal, FieldElementsRenderWithinBound) {
  const QuadElement solus_mean(Rational(3, 5), Rational(-1, 5));  // (5 - sqrt5)/10
  const DecimalApprox d = approximate(solus_mean, 12);
  const Real exact = (5 - sqrt(Real(5))) / 10;
  EXPECT_LE(abs(to_real(d.rendered()) - exact), to_real(d.error_bound));
  EXPECT_EQ(d.value, "0.276393202250");
  const DecimalApprox p = approximate(CubicElement::generator(), 9);
  EXPECT_EQ(p.value, "1.754877666");
}

TEST(Decimal, SignIsDecidedExactly) {
  EXPECT_EQ(sign(QuadElement(Rational(-1), Rational(1))), 1);           // phi - 1
  EXPECT_EQ(sign(QuadElement(Rational(2), Rational(-1))), 1);           // 2 - phi
  EXPECT_EQ(sign(QuadElement(Rational(-1618034), Rational(1000000))), -1);  // 10^6 phi just below
  EXPECT_EQ(sign(CubicElement(Rational(-7), Rational(4), Rational(0))), 1);
  EXPECT_EQ(sign(QuadElement(0)), 0);
}

TEST(Decimal, ErrorBoundStringRoundsUp) {
  DecimalApprox d;
  d.error_bound = Rational(BigInt(123), pow10(13));
  EXPECT_EQ(d.error_bound_string(), "1.3e-11");
  d.error_bound = Rational(0);
  EXPECT_EQ(d.error_bound_string(), "0");
}

TEST(Decimal, WideEnclosureIsRejected) {
  EXPECT_THROW(from_enclosure(Rational(0), Rational(1, 10), 3), Error);
}

}  // namespace
}  // namespace cantor
