#include <gtest/gtest.h>

#include <random>

#include "cantor/errors.hpp"
#include "cantor/rational.hpp"

namespace cantor {
namespace {

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-5"), Rational(-5));
  EXPECT_EQ(Rational::parse("-3/6").to_string(), "-1/2");
  EXPECT_EQ(Rational::parse("0/7").to_string(), "0");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "1.5", "a/b", "1/0", "1//2", " 1", "3/-6"}) {
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
  }
}

TEST(Rational, DivisionByZeroCarriesItsCode) {
  try {
    (void)(Rational(1) / Rational(0));
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::division_by_zero);
  }
}

TEST(Rational, TextRoundTripsForRandomFractions) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
  for (int i = 0; i < 500; ++i) {
    const long d = dist(rng);
    if (d == 0) continue;
    const Rational r(dist(rng), d);
    EXPECT_EQ(Rational::parse(r.to_string()), r);
  }
}

TEST(Rational, FieldAxiomsOnRandomSample) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-50, 50);
  auto draw = [&] {
    long d = 0;
    while (d == 0) d = dist(rng);
    return Rational(dist(rng), d);
  };
  for (int i = 0; i < 200; ++i) {
    const Rational a = draw();
    const Rational b = draw();
    const Rational c = draw();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Rational, FloorRoundsTowardMinusInfinity) {
  EXPECT_EQ(Rational(7, 2).floor(), BigInt(3));
  EXPECT_EQ(Rational(-7, 2).floor(), BigInt(-4));
  EXPECT_EQ(Rational(-4).floor(), BigInt(-4));
}

TEST(Rational, PowersAndBinomials) {
  EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
  EXPECT_EQ(binomial(10, 3), BigInt(120));
  EXPECT_EQ(binomial(4, 7), BigInt(0));
  EXPECT_EQ(pow10(5), BigInt(100000));
}

TEST(Rational, OrderingIsTotal) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
}

}  // namespace
}  // namespace cantor
