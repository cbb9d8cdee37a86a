#pragma once

#include <map>
#include <string>

#include "cantor/decimal.hpp"
#include "cantor/real.hpp"

namespace cantor {

struct AsymptoticConstant {
  std::string name;
  DecimalApprox value;
  std::string method;
  /// Truncation and precision settings used, rendered as text.
  std::map<std::string, std::string> parameters;
};

/// Gamma(s), s > 0, and zeta(s), s > 1, correctly rounded at working
/// precision. digits <= 50.
DecimalApprox gamma_fn(const Real& s, int digits);
DecimalApprox zeta_fn(const Real& s, int digits);

/// c = (2/(3 ln 2)) Gamma(ln3/ln2) zeta(ln3/ln2); digits <= 30.
AsymptoticConstant cantor_min_constant(int digits);

/// C = (1/(2 ln 3)) int_0^inf prod_{k>=2} ((1 + e^{-2x/3^k})/2) e^{-2x/3}
///     x^{ln2/ln3 - 1} dx; digits <= 12.
AsymptoticConstant cantor_moment_constant(int digits);

/// -1/3 + (2/3) sum_{k>=1} (2/3)^k H_{2^k}; digits <= 12.
AsymptoticConstant cantor_moment_sum(int digits);

/// (1/(2 phi ln 3)) int_0^inf M(x) e^{-2x/3} x^{ln(phi)/ln3 - 1} dx with
/// M(x) = e^{-x/3} sum_k (mu_k/k!) (4x/9)^k over the solus moments at
/// theta = 1/3; digits <= 8.
AsymptoticConstant solus_moment_constant(int digits);

/// The exponential-type generating function M(x) above, truncated at K terms.
class SolusMomentEgf {
 public:
  explicit SolusMomentEgf(int terms);
  Real operator()(const Real& x) const;
  int terms() const { return static_cast<int>(coeff_.size()); }

 private:
  std::vector<Real> coeff_;  // mu_k / k! (4/9)^k
};

/// ln(n)/ln(2) - (3/2 - gamma/ln 2); n >= 2.
DecimalApprox unconstrained_run_asymptotic(long n, int digits = 10);

/// Harmonic number H_m as an exact rational (binary splitting).
Rational harmonic_exact(unsigned long m);

}  // namespace cantor
