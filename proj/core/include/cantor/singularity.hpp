#pragma once

#include <vector>

#include "cantor/errors.hpp"
#include "cantor/genfunc.hpp"
#include "cantor/number_field.hpp"

namespace cantor {

/// Coefficient asymptotics of N(z)/D(z) at a dominant pole rho of order k:
///   [z^n] N/D = rho^{-n} * sum_i growth[i] n^i + (exponentially smaller),
/// with growth of degree k-1. Coefficients live in the field holding rho.
template <ExactField F>
struct PoleExpansion {
  F rho;
  int order = 0;
  std::vector<F> growth;  // ascending powers of n

  F growth_at(const F& n) const {
    F acc(0);
    for (auto it = growth.rbegin(); it != growth.rend(); ++it) acc = acc * n + *it;
    return acc;
  }
};

namespace detail {

template <ExactField F>
std::vector<F> taylor_shift(const Poly& p, const F& rho) {
  // Horner in the variable t with z = rho + t.
  std::vector<F> acc;
  for (int i = p.degree(); i >= 0; --i) {
    std::vector<F> next(acc.size() + 1, F(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] = next[j] + acc[j] * rho;
      next[j + 1] = next[j + 1] + acc[j];
    }
    next[0] = next[0] + F(p[static_cast<std::size_t>(i)]);
    acc = std::move(next);
  }
  if (acc.empty()) acc.push_back(F(0));
  return acc;
}

}  // namespace detail

/// Expands N/D around rho, a root of D of multiplicity exactly `order`
/// (checked). The caller is responsible for rho being the unique root of
/// smallest modulus.
template <ExactField F>
PoleExpansion<F> pole_expansion(const Poly& numerator, const Poly& denominator, const F& rho,
                                int order) {
  if (order < 1) fail(ErrorCode::invalid_argument, "pole order must be >= 1");
  std::vector<F> d = detail::taylor_shift(denominator, rho);
  const std::vector<F> n = detail::taylor_shift(numerator, rho);
  const auto k = static_cast<std::size_t>(order);
  for (std::size_t i = 0; i < k; ++i) {
    if (i >= d.size() || !d[i].is_zero()) {
      fail(ErrorCode::invalid_argument, "rho is not a root of the stated multiplicity");
    }
  }
  if (d.size() <= k || d[k].is_zero()) {
    fail(ErrorCode::invalid_argument, "rho is not a root of the stated multiplicity");
  }
  // E(t) = D(rho + t) / t^k, H = N / E to order k-1.
  std::vector<F> e(d.begin() + static_cast<std::ptrdiff_t>(k), d.end());
  const F e0_inv = F(1) / e[0];
  std::vector<F> h(k, F(0));
  for (std::size_t i = 0; i < k; ++i) {
    F v = i < n.size() ? n[i] : F(0);
    for (std::size_t j = 1; j <= i && j < e.size(); ++j) v = v - e[j] * h[i - j];
    h[i] = v * e0_inv;
  }
  // t^{-m} = (-rho)^{-m} (1 - z/rho)^{-m}; [z^n](1 - z/rho)^{-m} =
  // C(n+m-1, m-1) rho^{-n}.
  PoleExpansion<F> out{rho, order, std::vector<F>(k, F(0))};
  const F neg_rho_inv = F(-1) / rho;
  F scale = neg_rho_inv;
  for (std::size_t m = 1; m <= k; ++m) {
    // Polynomial in n of C(n+m-1, m-1) = prod_{r=1}^{m-1} (n + r) / r.
    std::vector<Rational> binom{Rational(1)};
    for (std::size_t r = 1; r < m; ++r) {
      std::vector<Rational> next(binom.size() + 1);
      const Rational inv_r(1L, static_cast<long>(r));
      for (std::size_t j = 0; j < binom.size(); ++j) {
        next[j] += binom[j] * Rational(static_cast<long>(r)) * inv_r;
        next[j + 1] += binom[j] * inv_r;
      }
      binom = std::move(next);
    }
    const F coeff = h[k - m] * scale;
    for (std::size_t j = 0; j < binom.size(); ++j) out.growth[j] = out.growth[j] + coeff * binom[j];
    scale = scale * neg_rho_inv;
  }
  return out;
}

}  // namespace cantor
