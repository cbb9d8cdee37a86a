#include "cantor/decimal.hpp"

#include <functional>
#include <vector>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

void require_digits(int digits) {
  if (digits < 1) fail(ErrorCode::invalid_argument, "digits must be >= 1");
}

Rational ten_to_minus(int digits) { return Rational(BigInt(1), pow10(static_cast<unsigned>(digits))); }

struct MinimalPolynomial {
  std::vector<Rational> coeffs;  // ascending powers

  Rational value(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Rational derivative(const Rational& x) const {
    Rational acc;
    for (std::size_t i = coeffs.size() - 1; i >= 1; --i) {
      acc = acc * x + coeffs[i] * Rational(static_cast<long>(i));
    }
    return acc;
  }
};

// Interval Newton with a bisection fallback. The polynomial is increasing
// with increasing derivative on [3/2, 2], so p'(X) = [p'(lo), p'(hi)].
RationalInterval newton_sequence(const MinimalPolynomial& p, int steps) {
  RationalInterval x{Rational(3, 2), Rational(2)};
  for (int s = 0; s < steps; ++s) {
    const Rational old_width = x.width();
    const Rational m = x.midpoint();
    const Rational pm = p.value(m);
    if (pm.is_zero()) return {m, m};
    const Rational dlo = p.derivative(x.lo);
    const Rational dhi = p.derivative(x.hi);
    Rational nlo;
    Rational nhi;
    if (pm.sign() > 0) {
      nlo = m - pm / dlo;
      nhi = m - pm / dhi;
    } else {
      nlo = m - pm / dhi;
      nhi = m - pm / dlo;
    }
    if (nlo > x.lo) x.lo = nlo;
    if (nhi < x.hi) x.hi = nhi;
    if (x.width() * Rational(2) > old_width) {
      const Rational mid = x.midpoint();
      if (p.value(mid).sign() > 0) {
        x.hi = mid;
      } else {
        x.lo = mid;
      }
    }
  }
  return x;
}

const MinimalPolynomial& phi_poly() {
  static const MinimalPolynomial p{{Rational(-1), Rational(-1), Rational(1)}};
  return p;
}

const MinimalPolynomial& psi_poly() {
  static const MinimalPolynomial p{{Rational(-1), Rational(1), Rational(-2), Rational(1)}};
  return p;
}

// a + b*[lo, hi] for rational a, b.
RationalInterval affine(const Rational& a, const Rational& b, const RationalInterval& r) {
  if (b.sign() >= 0) return {a + b * r.lo, a + b * r.hi};
  return {a + b * r.hi, a + b * r.lo};
}

RationalInterval add(const RationalInterval& x, const RationalInterval& y) {
  return {x.lo + y.lo, x.hi + y.hi};
}

RationalInterval refine_until(const std::function<RationalInterval(int)>& at_step,
                              const Rational& max_width) {
  for (int step = 0;; ++step) {
    RationalInterval r = at_step(step);
    if (r.width() <= max_width) return r;
  }
}

template <class Element>
int sign_by_refinement(const Element& x) {
  if (x.is_zero()) return 0;
  Rational width(1);
  for (;;) {
    const RationalInterval r = enclose(x, width);
    if (r.lo.sign() > 0) return 1;
    if (r.hi.sign() < 0) return -1;
    width *= Rational(1, 1024);
  }
}

}  // namespace

Rational DecimalApprox::rendered() const {
  // value is "[-]I.F"; exact rational I.F
  std::string digits_only;
  bool negative = false;
  for (char ch : value) {
    if (ch == '-') {
      negative = true;
    } else if (ch != '.') {
      digits_only += ch;
    }
  }
  const auto dot = value.find('.');
  const unsigned frac = dot == std::string::npos ? 0U : static_cast<unsigned>(value.size() - dot - 1);
  Rational r(BigInt(digits_only, 10), pow10(frac));
  return negative ? -r : r;
}

double DecimalApprox::to_double() const { return rendered().to_double(); }

std::string DecimalApprox::error_bound_string() const {
  if (error_bound.is_zero()) return "0";
  // Two significant digits, rounded up: m.d * 10^e >= error_bound.
  int e = 0;
  Rational scaled = error_bound;
  while (scaled >= Rational(10)) {
    scaled *= Rational(1, 10);
    ++e;
  }
  while (scaled < Rational(1)) {
    scaled *= Rational(10);
    --e;
  }
  BigInt tenths = (scaled * Rational(10)).floor();
  if (Rational(tenths) < scaled * Rational(10)) tenths += 1;
  if (tenths >= 100) {
    tenths = 10;
    ++e;
  }
  const std::string t = tenths.get_str();
  return t.substr(0, 1) + "." + t.substr(1) + "e" + std::to_string(e);
}

std::string render_decimal(const Rational& x, int digits) {
  require_digits(digits);
  const BigInt scale = pow10(static_cast<unsigned>(digits));
  const bool negative = x < Rational(0);
  const BigInt mag = ((negative ? -x : x) * Rational(scale) + Rational(1, 2)).floor();
  const BigInt ip = mag / scale;
  std::string frac = BigInt(mag % scale).get_str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return std::string(negative && mag != 0 ? "-" : "") + ip.get_str() + "." + frac;
}

DecimalApprox from_enclosure(const Rational& lo, const Rational& hi, int digits) {
  require_digits(digits);
  if (hi < lo) fail(ErrorCode::invalid_argument, "empty enclosure");
  if (hi - lo > ten_to_minus(digits)) {
    fail(ErrorCode::invalid_argument, "enclosure too wide for requested digits");
  }
  DecimalApprox out;
  out.digits = digits;
  out.value = render_decimal((lo + hi) * Rational(1, 2), digits);
  out.lower = lo;
  out.upper = hi;
  const Rational v = out.rendered();
  const Rational below = v - lo;
  const Rational above = hi - v;
  out.error_bound = below > above ? below : above;
  return out;
}

RationalInterval phi_enclosure(int steps) { return newton_sequence(phi_poly(), steps); }
RationalInterval psi_enclosure(int steps) { return newton_sequence(psi_poly(), steps); }

RationalInterval enclose(const QuadElement& x, const Rational& max_width) {
  if (x.b().is_zero()) return {x.a(), x.a()};
  return refine_until([&](int step) { return affine(x.a(), x.b(), phi_enclosure(step)); },
                      max_width);
}

RationalInterval enclose(const CubicElement& x, const Rational& max_width) {
  if (x.b().is_zero() && x.c().is_zero()) return {x.a(), x.a()};
  return refine_until(
      [&](int step) {
        const RationalInterval r = psi_enclosure(step);
        const RationalInterval sq{r.lo * r.lo, r.hi * r.hi};  // psi > 0
        return add(affine(x.a(), x.b(), r), affine(Rational(0), x.c(), sq));
      },
      max_width);
}

int sign(const QuadElement& x) { return sign_by_refinement(x); }
int sign(const CubicElement& x) { return sign_by_refinement(x); }

DecimalApprox approximate(const Rational& x, int digits) { return from_enclosure(x, x, digits); }

DecimalApprox approximate(const QuadElement& x, int digits) {
  require_digits(digits);
  const RationalInterval r = enclose(x, ten_to_minus(digits + 3));
  return from_enclosure(r.lo, r.hi, digits);
}

DecimalApprox approximate(const CubicElement& x, int digits) {
  require_digits(digits);
  const RationalInterval r = enclose(x, ten_to_minus(digits + 3));
  return from_enclosure(r.lo, r.hi, digits);
}

}  // namespace cantor
