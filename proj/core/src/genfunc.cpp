#include "cantor/genfunc.hpp"

#include <algorithm>
#include <utility>

#include "cantor/errors.hpp"

namespace cantor {

Poly::Poly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<long> coefficients) {
  c_.reserve(coefficients.size());
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

Poly Poly::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly Poly::pow(unsigned exponent) const {
  Poly r{1};
  for (unsigned i = 0; i < exponent; ++i) r *= *this;
  return r;
}

Rational Poly::evaluate(const Rational& z) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const Rational mag = c_[i].abs();
    if (out.empty()) {
      if (c_[i].sign() < 0) out += "-";
    } else {
      out += c_[i].sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) out += mag.to_string();
    if (i > 0) {
      if (!unit) out += "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Series::Series(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) fail(ErrorCode::invalid_argument, "series needs at least one coefficient");
}

Series Series::zero(int truncation_order) {
  if (truncation_order < 0) fail(ErrorCode::invalid_argument, "negative truncation order");
  return Series(std::vector<Rational>(static_cast<std::size_t>(truncation_order) + 1));
}

Series Series::of(const Poly& p, int truncation_order) {
  Series s = zero(truncation_order);
  for (int i = 0; i <= truncation_order; ++i) s.c_[i] = p[static_cast<std::size_t>(i)];
  return s;
}

Series series_ops(const Series& a, const Series& b, SeriesOp op) {
  const int n = std::min(a.truncation_order(), b.truncation_order());
  Series r = Series::zero(n);
  for (int i = 0; i <= n; ++i) {
    switch (op) {
      case SeriesOp::add:
        r[i] = a[i] + b[i];
        break;
      case SeriesOp::sub:
        r[i] = a[i] - b[i];
        break;
      case SeriesOp::mul:
        for (int j = 0; j <= i; ++j) {
          if (!a[j].is_zero()) r[i] += a[j] * b[i - j];
        }
        break;
    }
  }
  return r;
}

RationalGF::RationalGF(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_[0].is_zero()) {
    fail(ErrorCode::division_by_zero, "generating function denominator has zero constant term");
  }
}

std::string RationalGF::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

bool all_integral(const Poly& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const Rational& r) { return r.is_integer(); });
}

// Nonzero denominator terms j >= 1 as (j, q_j).
template <class Coeff, class Convert>
std::vector<std::pair<int, Coeff>> sparse_tail(const Poly& q, Convert convert) {
  std::vector<std::pair<int, Coeff>> out;
  for (int j = 1; j <= q.degree(); ++j) {
    if (!q[j].is_zero()) out.emplace_back(j, convert(q[j]));
  }
  return out;
}

}  // namespace

bool has_integer_coefficients(const RationalGF& g) {
  return all_integral(g.numerator()) && all_integral(g.denominator()) &&
         g.denominator()[0].abs() == Rational(1);
}

std::vector<BigInt> gf_integer_coefficients(const RationalGF& g, int n_max) {
  if (n_max < 0) fail(ErrorCode::invalid_argument, "n_max must be >= 0");
  if (!has_integer_coefficients(g)) {
    fail(ErrorCode::invalid_argument, "generating function is not integral with unit q_0");
  }
  const Poly& p = g.numerator();
  const Poly& q = g.denominator();
  const bool negate = q[0] < Rational(0);
  std::vector<std::pair<int, long>> small_tail;
  std::vector<std::pair<int, BigInt>> big_tail;
  for (const auto& [j, qj] : sparse_tail<BigInt>(q, [](const Rational& r) { return r.num(); })) {
    if (qj.fits_slong_p()) {
      small_tail.emplace_back(j, qj.get_si());
    } else {
      big_tail.emplace_back(j, qj);
    }
  }
  std::vector<BigInt> c(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) {
    mpz_ptr v = c[k].get_mpz_t();
    if (k <= p.degree()) mpz_set(v, p[k].num().get_mpz_t());
    for (const auto& [j, qj] : small_tail) {
      if (j > k) break;
      mpz_srcptr prev = c[k - j].get_mpz_t();
      if (qj > 0) {
        mpz_submul_ui(v, prev, static_cast<unsigned long>(qj));
      } else {
        mpz_addmul_ui(v, prev, static_cast<unsigned long>(-qj));
      }
    }
    for (const auto& [j, qj] : big_tail) {
      if (j > k) break;
      mpz_submul(v, qj.get_mpz_t(), c[k - j].get_mpz_t());
    }
    if (negate) mpz_neg(v, v);
  }
  return c;
}

namespace {

Series integer_coefficients(const RationalGF& g, int n_max) {
  const std::vector<BigInt> c = gf_integer_coefficients(g, n_max);
  std::vector<Rational> out;
  out.reserve(c.size());
  for (const auto& v : c) out.emplace_back(v);
  return Series(std::move(out));
}

}  // namespace

Series gf_coefficients(const RationalGF& g, int n_max) {
  if (n_max < 0) fail(ErrorCode::invalid_argument, "n_max must be >= 0");
  const Poly& p = g.numerator();
  const Poly& q = g.denominator();
  const Rational q0 = q[0];
  if (has_integer_coefficients(g)) return integer_coefficients(g, n_max);
  const Rational inv_q0 = q0.inverse();
  auto tail = sparse_tail<Rational>(q, [](const Rational& r) { return r; });
  Series c = Series::zero(n_max);
  for (int k = 0; k <= n_max; ++k) {
    Rational v = p[k];
    for (const auto& [j, qj] : tail) {
      if (j > k) break;
      v -= qj * c[k - j];
    }
    c[k] = v * inv_q0;
  }
  return c;
}

}  // namespace cantor
