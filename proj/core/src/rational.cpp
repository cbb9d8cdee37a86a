#include "cantor/rational.hpp"

#include <cctype>
#include <ostream>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    fail(ErrorCode::invalid_argument, "malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    fail(ErrorCode::invalid_argument, "malformed rational '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), parse_integer(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::division_by_zero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime; no canonicalization needed.
  Rational r;
  r.v_ = mpq_class(n, d);
  return r;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow10(unsigned exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

}  // namespace cantor
