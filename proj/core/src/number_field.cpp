#include "cantor/number_field.hpp"

#include <ostream>
#include <vector>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

// Appends "+|r|*sym" or "-|r|*sym".
void append_term(std::string& out, const Rational& r, std::string_view sym) {
  out += r.sign() < 0 ? '-' : '+';
  out += r.abs().to_string();
  out += '*';
  out += sym;
}

// Splits "t0<op>t1*sym1<op>t2*sym2..." into signed coefficient strings.
std::vector<Rational> parse_terms(std::string_view text, const std::vector<std::string_view>& syms) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  // Constant term: up to the first sign that is not at position 0. A bare
  // rational is accepted as an element with vanishing irrational part.
  const std::size_t next = text.find_first_of("+-", 1);
  out.push_back(Rational::parse(text.substr(0, next)));
  if (next == std::string_view::npos) {
    out.resize(syms.size() + 1, Rational(0));
    return out;
  }
  pos = next;
  for (std::string_view sym : syms) {
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) {
      fail(ErrorCode::invalid_argument, "malformed field element '" + std::string(text) + "'");
    }
    const bool negative = text[pos] == '-';
    const std::size_t star = text.find('*', pos);
    if (star == std::string_view::npos || text.substr(star + 1, sym.size()) != sym) {
      fail(ErrorCode::invalid_argument, "malformed field element '" + std::string(text) + "'");
    }
    Rational coeff = Rational::parse(text.substr(pos + 1, star - pos - 1));
    out.push_back(negative ? -coeff : coeff);
    pos = star + 1 + sym.size();
  }
  if (pos != text.size()) {
    fail(ErrorCode::invalid_argument, "malformed field element '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace

// ---- Q(phi) ----------------------------------------------------------------

Rational QuadElement::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

QuadElement QuadElement::conjugate() const { return {a_ + b_, -b_}; }

QuadElement QuadElement::inverse() const {
  if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero in Q(phi)");
  const Rational n = norm();
  QuadElement c = conjugate();
  c *= n.inverse();
  return c;
}

QuadElement& QuadElement::operator+=(const QuadElement& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElement& QuadElement::operator-=(const QuadElement& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElement& QuadElement::operator*=(const QuadElement& o) {
  // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
  const Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ + bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadElement& QuadElement::operator*=(const Rational& r) {
  a_ *= r;
  b_ *= r;
  return *this;
}

QuadElement QuadElement::pow(unsigned exponent) const {
  QuadElement result(1);
  QuadElement base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string QuadElement::to_string() const {
  std::string out = a_.to_string();
  append_term(out, b_, "phi");
  return out;
}

QuadElement QuadElement::parse(std::string_view text) {
  const auto t = parse_terms(text, {"phi"});
  return {t[0], t[1]};
}

// ---- Q(psi) ----------------------------------------------------------------

CubicElement& CubicElement::operator+=(const CubicElement& o) {
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

CubicElement& CubicElement::operator-=(const CubicElement& o) {
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

CubicElement& CubicElement::operator*=(const CubicElement& o) {
  const auto& x = c_;
  const auto& y = o.c_;
  const Rational p0 = x[0] * y[0];
  const Rational p1 = x[0] * y[1] + x[1] * y[0];
  const Rational p2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0];
  const Rational p3 = x[1] * y[2] + x[2] * y[1];
  const Rational p4 = x[2] * y[2];
  // psi^3 = 1 - psi + 2 psi^2,  psi^4 = 2 - psi + 3 psi^2
  c_[0] = p0 + p3 + Rational(2) * p4;
  c_[1] = p1 - p3 - p4;
  c_[2] = p2 + Rational(2) * p3 + Rational(3) * p4;
  return *this;
}

CubicElement& CubicElement::operator*=(const Rational& r) {
  for (auto& v : c_) v *= r;
  return *this;
}

CubicElement CubicElement::inverse() const {
  if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero in Q(psi)");
  // Column j of m holds the coordinates of x * psi^j; solve m v = e0.
  std::array<std::array<Rational, 4>, 3> m;
  CubicElement col = *this;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) m[i][j] = col.c_[i];
    col *= generator();
  }
  m[0][3] = Rational(1);
  for (int k = 0; k < 3; ++k) {
    int pivot = k;
    while (m[pivot][k].is_zero()) ++pivot;  // nonsingular: x != 0 in a field
    std::swap(m[k], m[pivot]);
    const Rational inv = m[k][k].inverse();
    for (int j = k; j < 4; ++j) m[k][j] *= inv;
    for (int i = 0; i < 3; ++i) {
      if (i == k || m[i][k].is_zero()) continue;
      const Rational f = m[i][k];
      for (int j = k; j < 4; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return {m[0][3], m[1][3], m[2][3]};
}

CubicElement CubicElement::pow(unsigned exponent) const {
  CubicElement result(1);
  CubicElement base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string CubicElement::to_string() const {
  std::string out = c_[0].to_string();
  append_term(out, c_[1], "psi");
  append_term(out, c_[2], "psi^2");
  return out;
}

CubicElement CubicElement::parse(std::string_view text) {
  const auto t = parse_terms(text, {"psi", "psi^2"});
  return {t[0], t[1], t[2]};
}

std::ostream& operator<<(std::ostream& os, const QuadElement& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const CubicElement& x) { return os << x.to_string(); }

}  // namespace cantor
