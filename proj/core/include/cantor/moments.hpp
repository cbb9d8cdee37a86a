#pragma once

#include <vector>

#include "cantor/decimal.hpp"
#include "cantor/ensembles.hpp"
#include "cantor/number_field.hpp"
#include "cantor/real.hpp"

namespace cantor {

/// Limiting moments mu_0..mu_N of one distribution, exact plus rendered.
template <ExactField F>
struct MomentTable {
  EnsembleKind kind;
  Rational theta;
  std::vector<F> values;
  std::vector<DecimalApprox> decimals;

  const F& operator[](std::size_t n) const { return values.at(n); }
  std::size_t size() const { return values.size(); }
};

inline constexpr int kDefaultTableDigits = 12;

/// mu_n = 1/(2(1 - theta^n)) sum_{i<n} C(n,i) theta_bar^{n-i} theta^i mu_i.
MomentTable<Rational> cantor_moments(const Rational& theta, int N,
                                     int digits = kDefaultTableDigits);

/// mu_n = 1/(phi^2 - theta^n phi - theta^{2n}) *
///        sum_{i+j=n, j<n} C(n; i,j) theta_bar^i theta^{2j} mu_j, in Q(phi).
MomentTable<QuadElement> solus_moments(const Rational& theta, int N,
                                       int digits = kDefaultTableDigits);

/// mu_n = [psi^2 S3 + S4] / (psi^4 - theta^n psi^3 - theta^{2n} psi^2 - theta^{4n})
/// with S3, S4 the multinomial sums over weak compositions of n into three
/// and four parts (last part < n), in Q(psi).
MomentTable<CubicElement> multus_moments(const Rational& theta, int N,
                                         int digits = kDefaultTableDigits);

/// Exact average of F(omega)^n, n = 0..N, over all length-m members, by
/// exhaustive enumeration.
std::vector<Rational> empirical_moments(EnsembleKind kind, const Rational& theta, unsigned m,
                                        int N, std::uint64_t cap = kMaxEnumeration);

/// The same finite-length moments from the grammar's first-block
/// decomposition F(b omega) = F(b) + theta^{|b|} F(omega), without
/// enumerating strings.
std::vector<Rational> finite_moments(EnsembleKind kind, const Rational& theta, unsigned m,
                                     int N);

/// Floating evaluation of the Cantor / solus moment recurrences for large N.
/// All terms are positive, so the relative forward error stays below
/// 4 N^2 ulp of the 64-digit working precision.
std::vector<Real> cantor_moments_real(const Rational& theta, int N);
std::vector<Real> solus_moments_real(const Rational& theta, int N);

}  // namespace cantor
