#pragma once

#include <array>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cantor/rational.hpp"

namespace cantor {

/// Element a + b*phi of Q(phi), phi = (1+sqrt 5)/2, reduced by phi^2 = phi + 1.
class QuadElement {
 public:
  QuadElement() = default;
  QuadElement(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadElement(long a) : a_(a) {}                 // NOLINT(google-explicit-constructor)
  QuadElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadElement generator() { return {Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// a^2 + ab - b^2; nonzero for every nonzero element.
  Rational norm() const;
  QuadElement conjugate() const;
  QuadElement inverse() const;

  QuadElement operator-() const { return {-a_, -b_}; }
  QuadElement& operator+=(const QuadElement& o);
  QuadElement& operator-=(const QuadElement& o);
  QuadElement& operator*=(const QuadElement& o);
  QuadElement& operator/=(const QuadElement& o) { return *this *= o.inverse(); }
  QuadElement& operator*=(const Rational& r);

  friend QuadElement operator+(QuadElement x, const QuadElement& y) { return x += y; }
  friend QuadElement operator-(QuadElement x, const QuadElement& y) { return x -= y; }
  friend QuadElement operator*(QuadElement x, const QuadElement& y) { return x *= y; }
  friend QuadElement operator/(QuadElement x, const QuadElement& y) { return x /= y; }
  friend QuadElement operator*(QuadElement x, const Rational& r) { return x *= r; }
  friend QuadElement operator*(const Rational& r, QuadElement x) { return x *= r; }
  friend bool operator==(const QuadElement&, const QuadElement&) = default;

  QuadElement pow(unsigned exponent) const;

  /// "a+b*phi" with rational a, b (the b sign folded into the operator).
  std::string to_string() const;
  static QuadElement parse(std::string_view text);

 private:
  Rational a_;
  Rational b_;
};

/// Element a + b*psi + c*psi^2 of Q(psi), psi the real root of
/// x^3 - 2x^2 + x - 1, reduced by psi^3 = 2psi^2 - psi + 1.
class CubicElement {
 public:
  CubicElement() = default;
  CubicElement(Rational a) : c_{std::move(a), Rational(), Rational()} {}  // NOLINT
  CubicElement(long a) : CubicElement(Rational(a)) {}                     // NOLINT
  CubicElement(Rational a, Rational b, Rational c)
      : c_{std::move(a), std::move(b), std::move(c)} {}

  static CubicElement generator() { return {Rational(0), Rational(1), Rational(0)}; }

  const Rational& a() const { return c_[0]; }
  const Rational& b() const { return c_[1]; }
  const Rational& c() const { return c_[2]; }
  const std::array<Rational, 3>& coefficients() const { return c_; }
  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

  CubicElement inverse() const;

  CubicElement operator-() const { return {-c_[0], -c_[1], -c_[2]}; }
  CubicElement& operator+=(const CubicElement& o);
  CubicElement& operator-=(const CubicElement& o);
  CubicElement& operator*=(const CubicElement& o);
  CubicElement& operator/=(const CubicElement& o) { return *this *= o.inverse(); }
  CubicElement& operator*=(const Rational& r);

  friend CubicElement operator+(CubicElement x, const CubicElement& y) { return x += y; }
  friend CubicElement operator-(CubicElement x, const CubicElement& y) { return x -= y; }
  friend CubicElement operator*(CubicElement x, const CubicElement& y) { return x *= y; }
  friend CubicElement operator/(CubicElement x, const CubicElement& y) { return x /= y; }
  friend CubicElement operator*(CubicElement x, const Rational& r) { return x *= r; }
  friend CubicElement operator*(const Rational& r, CubicElement x) { return x *= r; }
  friend bool operator==(const CubicElement&, const CubicElement&) = default;

  CubicElement pow(unsigned exponent) const;

  /// "a+b*psi+c*psi^2".
  std::string to_string() const;
  static CubicElement parse(std::string_view text);

 private:
  std::array<Rational, 3> c_;
};

std::ostream& operator<<(std::ostream& os, const QuadElement& x);
std::ostream& operator<<(std::ostream& os, const CubicElement& x);

/// Types the generic recurrences and pole expansions run over: Rational,
/// QuadElement and CubicElement.
template <class T>
concept ExactField = requires(T x, const T& y, const Rational& r) {
  { x + y } -> std::convertible_to<T>;
  { x - y } -> std::convertible_to<T>;
  { x * y } -> std::convertible_to<T>;
  { x / y } -> std::convertible_to<T>;
  { x * r } -> std::convertible_to<T>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.to_string() } -> std::convertible_to<std::string>;
};

}  // namespace cantor
