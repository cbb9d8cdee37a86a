#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

/// Polynomial over Q; coefficient i multiplies z^i. Trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<Rational> coefficients);  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<long> coefficients);

  static Poly monomial(const Rational& c, unsigned power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of z^i (zero beyond the degree).
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned exponent) const;
  Rational evaluate(const Rational& z) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Truncated power series c_0 + c_1 z + ... + c_N z^N.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Rational> coefficients);
  /// Zero series of the given truncation order.
  static Series zero(int truncation_order);
  /// The polynomial's coefficients through z^truncation_order.
  static Series of(const Poly& p, int truncation_order);

  int truncation_order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  Rational& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<Rational>& coefficients() const { return c_; }
  std::size_t size() const { return c_.size(); }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> c_;
};

enum class SeriesOp { add, sub, mul };

/// Exact truncated arithmetic; the result has the smaller truncation order.
Series series_ops(const Series& a, const Series& b, SeriesOp op);
inline Series operator+(const Series& a, const Series& b) { return series_ops(a, b, SeriesOp::add); }
inline Series operator-(const Series& a, const Series& b) { return series_ops(a, b, SeriesOp::sub); }
inline Series operator*(const Series& a, const Series& b) { return series_ops(a, b, SeriesOp::mul); }

/// P(z)/Q(z), kept exactly as constructed. Q(0) must be nonzero.
class RationalGF {
 public:
  RationalGF(Poly numerator, Poly denominator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

/// [z^k] P/Q for k = 0..n_max via c_k = (p_k - sum_{j>=1} q_j c_{k-j}) / q_0.
/// Sparse denominators are exploited; integral inputs with q_0 = +-1 run on
/// integers.
Series gf_coefficients(const RationalGF& g, int n_max);

/// True when P and Q have integer coefficients and Q(0) = +-1, so every
/// coefficient of P/Q is an integer.
bool has_integer_coefficients(const RationalGF& g);

/// The same coefficients as integers; requires has_integer_coefficients(g).
std::vector<BigInt> gf_integer_coefficients(const RationalGF& g, int n_max);

}  // namespace cantor
