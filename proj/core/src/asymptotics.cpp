#include "cantor/asymptotics.hpp"

#include <mpfr.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <sstream>
#include <utility>

#include "cantor/errors.hpp"
#include "cantor/moments.hpp"

namespace cantor {

namespace {

void require_digits(int digits, int max_digits) {
  if (digits < 1 || digits > max_digits) {
    fail(ErrorCode::invalid_argument,
         "digits must be in [1, " + std::to_string(max_digits) + "]");
  }
}

Real ten_to_minus(int e) { return pow(Real(10), -e); }

// Relative rounding slack for a handful of correctly rounded operations.
Real working_slack(const Real& v) { return abs(v) * ten_to_minus(kRealDigits - 6); }

std::string str(const Real& v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

// Upper bound of int_X^inf e^{-2x/3} x^{a-1} dx for 0 < a <= 1, X >= 1.
Real exp_tail(const Real& X, const Real& a) {
  return Real(3) / 2 * pow(X, a - 1) * exp(-2 * X / 3);
}

// Smallest X (stepping by 1) with scale * exp_tail(X) <= target.
Real upper_limit(const Real& a, const Real& scale, const Real& target) {
  Real X = 1;
  while (scale * exp_tail(X, a) > target) X += 1;
  return X;
}

struct Quadrature {
  Real value;
  Real error;
  std::size_t levels = 0;
};

// int_0^{X} g(x) x^{a-1} dx via x = u^{1/a}: (1/a) int_0^{X^a} g(u^{1/a}) du.
template <class G>
Quadrature integrate_power_weight(G g, const Real& a, const Real& X, const Real& tol) {
  // The default endpoint guard is the type's minimum value, which for MPFR
  // overflows the abscissa table setup.
  boost::math::quadrature::tanh_sinh<Real> integrator(12, ten_to_minus(4 * kRealDigits));
  const Real inv_a = 1 / a;
  auto f = [&](const Real& u) { return g(pow(u, inv_a)); };
  Real error = 0;
  Real l1 = 0;
  std::size_t levels = 0;
  const Real U = pow(X, a);
  const Real v = integrator.integrate(f, Real(0), U, tol, &error, &l1, &levels);
  return {v * inv_a, error * inv_a, levels};
}

std::pair<BigInt, BigInt> harmonic_split(unsigned long lo, unsigned long hi) {
  // sum_{j=lo}^{hi-1} 1/j = p/q
  if (hi - lo == 1) return {BigInt(1), BigInt(std::to_string(lo), 10)};
  const unsigned long mid = lo + (hi - lo) / 2;
  auto [p1, q1] = harmonic_split(lo, mid);
  auto [p2, q2] = harmonic_split(mid, hi);
  return {p1 * q2 + p2 * q1, q1 * q2};
}

}  // namespace

Rational harmonic_exact(unsigned long m) {
  if (m == 0) return Rational(0);
  auto [p, q] = harmonic_split(1, m + 1);
  return Rational(p, q);
}

DecimalApprox gamma_fn(const Real& s, int digits) {
  require_digits(digits, 50);
  if (s <= 0) fail(ErrorCode::invalid_argument, "gamma_fn needs s > 0");
  Real v;
  mpfr_gamma(v.backend().data(), s.backend().data(), MPFR_RNDN);
  return approximate(v, working_slack(v), digits);
}

DecimalApprox zeta_fn(const Real& s, int digits) {
  require_digits(digits, 50);
  if (s <= 1) fail(ErrorCode::invalid_argument, "zeta_fn needs s > 1");
  Real v;
  mpfr_zeta(v.backend().data(), s.backend().data(), MPFR_RNDN);
  return approximate(v, working_slack(v), digits);
}

AsymptoticConstant cantor_min_constant(int digits) {
  require_digits(digits, 30);
  const Real L = log(Real(3)) / log(Real(2));
  Real g;
  Real z;
  mpfr_gamma(g.backend().data(), L.backend().data(), MPFR_RNDN);
  mpfr_zeta(z.backend().data(), L.backend().data(), MPFR_RNDN);
  const Real c = 2 / (3 * log(Real(2))) * g * z;
  // The argument L carries one rounding; Gamma*zeta has modest slope there.
  const Real err = abs(c) * ten_to_minus(kRealDigits - 10);
  return {"cantor-min", approximate(c, err, digits),
          "closed form (2/(3 ln 2)) Gamma(ln3/ln2) zeta(ln3/ln2), MPFR gamma/zeta",
          {{"working_digits", std::to_string(kRealDigits)}}};
}

AsymptoticConstant cantor_moment_constant(int digits) {
  require_digits(digits, 12);
  const Real alpha = log(Real(2)) / log(Real(3));
  const Real prefactor = 1 / (2 * log(Real(3)));
  const Real tol = ten_to_minus(digits + 2);
  const Real X = upper_limit(alpha, prefactor, tol / 10);
  // Product tail: |log prod_{k>K}| <= sum_{k>K} 2x/3^k = x/3^K, so the
  // integral moves by at most prefactor * Gamma(alpha+1) (3/2)^{alpha+1} / 3^K.
  const Real moment1 = boost::multiprecision::tgamma(alpha + 1) * pow(Real(3) / 2, alpha + 1);
  int K = 2;
  while (prefactor * moment1 / pow(Real(3), K) > tol / 10) ++K;
  std::vector<Real> scale;
  for (int k = 2; k <= K; ++k) scale.push_back(2 / pow(Real(3), k));
  auto g = [&](const Real& x) {
    Real p = exp(-2 * x / 3);
    for (const auto& s : scale) p *= (1 + exp(-s * x)) / 2;
    return p;
  };
  const Quadrature q = integrate_power_weight(g, alpha, X, ten_to_minus(digits + 6));
  const Real value = prefactor * q.value;
  const Real err = prefactor * q.error + prefactor * exp_tail(X, alpha) +
                   prefactor * moment1 / pow(Real(3), K) + working_slack(value);
  return {"cantor-moment",
          approximate(value, err, digits),
          "tanh-sinh quadrature after x = u^(1/alpha), alpha = ln2/ln3",
          {{"X", str(X)}, {"K", std::to_string(K)}, {"levels", std::to_string(q.levels)},
           {"quadrature_error", str(q.error, 3)}}};
}

AsymptoticConstant cantor_moment_sum(int digits) {
  require_digits(digits, 12);
  constexpr int kExactUpTo = 20;
  const Real target = ten_to_minus(digits + 3);
  const Real ln2 = log(Real(2));
  const Real r = Real(2) / 3;
  // Tail after K: terms (2/3)^k H_{2^k} with H_{2^k} <= k ln2 + 1 shrink by a
  // ratio of at most rho_K < 1 from one k to the next.
  auto term_bound = [&](int k) { return pow(r, k) * (k * ln2 + 1); };
  auto tail_bound = [&](int K) {
    const Real rho = r * ((K + 2) * ln2 + 1) / ((K + 1) * ln2 + 1);
    return term_bound(K + 1) / (1 - rho);
  };
  int K = 1;
  while (r * tail_bound(K) > target) ++K;

  Real sum = 0;
  Real em_error = 0;
  Rational h;  // running exact H_{2^k}
  unsigned long filled = 0;
  for (int k = 1; k <= K; ++k) {
    const unsigned long m = 1UL << std::min(k, 62);
    Real hm;
    if (k <= kExactUpTo) {
      auto [p, q] = harmonic_split(filled + 1, m + 1);
      h += Rational(p, q);
      filled = m;
      hm = to_real(h);
    } else {
      // H_m = ln m + gamma + 1/(2m) - 1/(12m^2) + 1/(120m^4) - eps,
      // 0 < eps < 1/(252 m^6).
      const Real mm = pow(Real(2), k);
      hm = k * ln2 + euler_gamma() + 1 / (2 * mm) - 1 / (12 * mm * mm) +
           1 / (120 * pow(mm, 4));
      em_error += pow(r, k) / (252 * pow(mm, 6));
    }
    sum += pow(r, k) * hm;
  }
  const Real value = -Real(1) / 3 + r * sum;
  const Real err = r * tail_bound(K) + r * em_error + working_slack(value) * K;
  return {"moment-sum",
          approximate(value, err, digits),
          "double series -1/3 + (2/3) sum_k (2/3)^k H_{2^k}; exact H for k <= 20, "
          "Euler-Maclaurin beyond",
          {{"K", std::to_string(K)}, {"exact_harmonic_up_to_k", std::to_string(kExactUpTo)}}};
}

SolusMomentEgf::SolusMomentEgf(int terms) {
  const auto mu = solus_moments(Rational(1, 3), terms - 1, 4);
  Real fact = 1;
  Real scale = 1;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) {
      fact *= k;
      scale *= Real(4) / 9;
    }
    coeff_.push_back(to_real(mu[static_cast<std::size_t>(k)]) * scale / fact);
  }
}

Real SolusMomentEgf::operator()(const Real& x) const {
  Real acc = 0;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
  return exp(-x / 3) * acc;
}

AsymptoticConstant solus_moment_constant(int digits) {
  require_digits(digits, 8);
  const Real phi = golden_mean();
  const Real beta = log(phi) / log(Real(3));
  const Real prefactor = 1 / (2 * phi * log(Real(3)));
  const Real tol = ten_to_minus(digits + 2);
  // M(x) <= 1 because mu_k <= (3/4)^k, so the x-tail is an exp_tail.
  const Real X = upper_limit(beta, prefactor, tol / 10);
  // Series tail on [0, X]: e^{-y} sum_{k>=K} y^k/k! <= y^K/K!, y = X/3.
  const Real weight_integral = boost::multiprecision::tgamma(beta) * pow(Real(3) / 2, beta);
  const Real y = X / 3;
  int K = 1;
  Real yk_over_fact = y;  // y^K / K!
  while (prefactor * weight_integral * yk_over_fact > tol / 10) {
    ++K;
    yk_over_fact *= y / K;
  }
  const SolusMomentEgf M(K);
  auto g = [&](const Real& x) { return M(x) * exp(-2 * x / 3); };
  const Quadrature q = integrate_power_weight(g, beta, X, ten_to_minus(digits + 6));
  const Real value = prefactor * q.value;
  const Real err = prefactor * q.error + prefactor * exp_tail(X, beta) +
                   prefactor * weight_integral * yk_over_fact + working_slack(value);
  return {"solus-moment",
          approximate(value, err, digits),
          "tanh-sinh quadrature of the exponential-type moment generating function, "
          "x = u^(1/beta), beta = ln(phi)/ln3",
          {{"X", str(X)}, {"K", std::to_string(K)}, {"levels", std::to_string(q.levels)},
           {"quadrature_error", str(q.error, 3)}}};
}

DecimalApprox unconstrained_run_asymptotic(long n, int digits) {
  if (n < 2) fail(ErrorCode::invalid_argument, "run asymptotic needs n >= 2");
  require_digits(digits, 50);
  const Real ln2 = log(Real(2));
  const Real v = log(Real(n)) / ln2 - (Real(3) / 2 - euler_gamma() / ln2);
  return approximate(v, working_slack(v) + ten_to_minus(kRealDigits - 4), digits);
}

}  // namespace cantor
