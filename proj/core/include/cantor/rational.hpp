#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cantor {

using BigInt = mpz_class;

/// Exact fraction over arbitrary-precision integers. Always kept in lowest
/// terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : v_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p", "-p" or "p/q" (decimal integers). Throws on malformed
  /// input or zero denominator.
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& gmp() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return from_gmp(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return from_gmp(::abs(v_)); }
  Rational inverse() const { return Rational(1) / *this; }
  Rational pow(unsigned exponent) const;

  /// Largest integer <= value.
  BigInt floor() const;

  double to_double() const { return v_.get_d(); }

  /// Canonical text form: "p" for integers, otherwise "p/q".
  std::string to_string() const { return v_.get_str(); }

  static Rational from_gmp(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    r.v_.canonicalize();
    return r;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n choose k as an exact integer (0 when k > n).
BigInt binomial(unsigned n, unsigned k);

/// Power of ten as an exact integer.
BigInt pow10(unsigned exponent);

}  // namespace cantor
