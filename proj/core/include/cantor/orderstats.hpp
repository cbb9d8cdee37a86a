#pragma once

#include <cstdint>
#include <vector>

#include "cantor/ensembles.hpp"
#include "cantor/number_field.hpp"
#include "cantor/real.hpp"

namespace cantor {

/// Expected minimum xi_n and maximum eta_n of n independent draws, n = 1..N.
template <ExactField F>
struct OrderStatTable {
  EnsembleKind kind;
  Rational theta;
  std::vector<F> xi_values;   // xi_values[n-1] = xi_n
  std::vector<F> eta_values;  // eta_values[n-1] = eta_n
  F max_support;

  const F& xi(int n) const { return xi_values.at(static_cast<std::size_t>(n - 1)); }
  const F& eta(int n) const { return eta_values.at(static_cast<std::size_t>(n - 1)); }
  int size() const { return static_cast<int>(xi_values.size()); }
};

/// xi_n = [theta_bar + theta sum_{i=1}^{n-1} C(n,i) xi_i] / (2^n - 2 theta);
/// eta_n = 1 - xi_n (the law is symmetric under bit complement).
OrderStatTable<Rational> cantor_order_stats(const Rational& theta, int N);

/// Solus recurrences in Q(phi), with phi^{-1} = phi - 1:
///   xi_n  = [theta_bar phi^{-2n} + theta sum C(n,i) phi^{-i} phi^{-2(n-i)} xi_i] / D_n
///   eta_n = [theta_bar (1 - phi^{-n}) + theta^2 sum C(n,j) phi^{-2j} phi^{-(n-j)} eta_j] / D_n
/// with D_n = 1 - theta phi^{-n} - theta^2 phi^{-2n}.
OrderStatTable<QuadElement> solus_order_stats(const Rational& theta, int N);

/// Same recurrences in 64-digit floating point, for N in the thousands.
/// Every term is positive; the relative forward error is below 4 N^2 ulp.
struct RealOrderStats {
  std::vector<Real> xi;   // xi[n-1]
  std::vector<Real> eta;  // eta[n-1]
};
RealOrderStats cantor_order_stats_real(const Rational& theta, int N);
RealOrderStats solus_order_stats_real(const Rational& theta, int N);

/// Mean of values[n-1] * n^exponent over n in [lo, hi]; damps the periodic
/// fluctuations around a power law.
Real window_average(const std::vector<Real>& values, const Real& exponent, int lo, int hi);

enum class Extreme { min, max };

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

struct MonteCarloConfig {
  std::uint64_t samples = 100'000;
  unsigned prefix_len = 40;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

/// Sample mean of min/max of n F-values, each from a uniform prefix_len-bit
/// member of the kind. Samples are split into fixed seed-derived chunks and
/// combined in chunk order, so the result does not depend on `jobs`.
MonteCarloEstimate monte_carlo_order_stat(EnsembleKind kind, const Rational& theta, int n,
                                          Extreme which, const MonteCarloConfig& config);

}  // namespace cantor
