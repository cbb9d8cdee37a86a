#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cantor/errors.hpp"
#include "cantor/number_field.hpp"

namespace cantor {
namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;
const double kPsi = 1.7548776662466927;  // real root of x^3 - 2x^2 + x - 1

double value(const QuadElement& x) { return x.a().to_double() + x.b().to_double() * kPhi; }
double value(const CubicElement& x) {
  return x.a().to_double() + x.b().to_double() * kPsi + x.c().to_double() * kPsi * kPsi;
}

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

TEST(QuadElement, GoldenMeanSatisfiesItsMinimalPolynomial) {
  const QuadElement phi = QuadElement::generator();
  EXPECT_EQ(phi * phi, phi + QuadElement(1));
  EXPECT_EQ(phi.inverse(), phi - QuadElement(1));
  EXPECT_EQ(phi.norm(), Rational(-1));
}

TEST(QuadElement, ArithmeticAgreesWithFloatingEvaluation) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const QuadElement x(small_rational(rng), small_rational(rng));
    const QuadElement y(small_rational(rng), small_rational(rng));
    EXPECT_NEAR(value(x * y), value(x) * value(y), 1e-9 * (1 + std::abs(value(x) * value(y))));
    if (!y.is_zero()) {
      EXPECT_EQ(x / y * y, x);
      EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    }
    EXPECT_EQ(x.conjugate().conjugate(), x);
    EXPECT_EQ(QuadElement::parse(x.to_string()), x);
  }
}

TEST(QuadElement, ZeroHasNoInverse) {
  EXPECT_THROW((void)QuadElement(0).inverse(), Error);
}

TEST(QuadElement, ParsesSignedTerms) {
  EXPECT_EQ(QuadElement::parse("3/5-1/5*phi"), QuadElement(Rational(3, 5), Rational(-1, 5)));
  EXPECT_EQ(QuadElement::parse("2"), QuadElement(2));
  EXPECT_THROW(QuadElement::parse("2+phi*"), Error);
}

TEST(CubicElement, SecondGoldenMeanSatisfiesItsMinimalPolynomial) {
  const CubicElement psi = CubicElement::generator();
  const CubicElement one(1);
  EXPECT_EQ(psi.pow(3), CubicElement(2) * psi * psi - psi + one);
  EXPECT_EQ(psi.pow(4), CubicElement(Rational(2), Rational(-1), Rational(3)));
  EXPECT_EQ(psi * psi.inverse(), one);
}

TEST(CubicElement, ArithmeticAgreesWithFloatingEvaluation) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const CubicElement x(small_rational(rng), small_rational(rng), small_rational(rng));
    const CubicElement y(small_rational(rng), small_rational(rng), small_rational(rng));
    const double prod = value(x) * value(y);
    EXPECT_NEAR(value(x * y), prod, 1e-9 * (1 + std::abs(prod)));
    if (!y.is_zero()) EXPECT_EQ(x / y * y, x);
    EXPECT_EQ(CubicElement::parse(x.to_string()), x);
  }
}

TEST(CubicElement, ZeroHasNoInverse) {
  EXPECT_THROW((void)CubicElement(0).inverse(), Error);
}

}  // namespace
}  // namespace cantor
