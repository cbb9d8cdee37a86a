#include "cantor/moments.hpp"

#include <algorithm>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

void require_order(int N) {
  if (N < 0) fail(ErrorCode::invalid_argument, "moment order N must be >= 0");
}

// Integer powers of p, q - p and q for theta = p/q, so that every
// theta_bar^a theta^b / q^-s term can be carried as an integer.
class ThetaPowers {
 public:
  ThetaPowers(const Rational& theta, unsigned max_exponent) {
    const BigInt p = theta.num();
    const BigInt q = theta.den();
    const BigInt r = q - p;
    p_.resize(max_exponent + 1);
    q_.resize(max_exponent + 1);
    r_.resize(max_exponent + 1);
    p_[0] = q_[0] = r_[0] = 1;
    for (unsigned e = 1; e <= max_exponent; ++e) {
      p_[e] = p_[e - 1] * p;
      q_[e] = q_[e - 1] * q;
      r_[e] = r_[e - 1] * r;
    }
  }
  const BigInt& p(unsigned e) const { return p_.at(e); }
  const BigInt& q(unsigned e) const { return q_.at(e); }
  const BigInt& r(unsigned e) const { return r_.at(e); }

 private:
  std::vector<BigInt> p_;
  std::vector<BigInt> q_;
  std::vector<BigInt> r_;
};

class PascalTriangle {
 public:
  explicit PascalTriangle(unsigned n_max) : rows_(n_max + 1) {
    for (unsigned n = 0; n <= n_max; ++n) {
      rows_[n].resize(n + 1);
      rows_[n][0] = rows_[n][n] = 1;
      for (unsigned k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }
  const BigInt& operator()(unsigned n, unsigned k) const { return rows_[n][k]; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

template <ExactField F>
MomentTable<F> finish(EnsembleKind kind, const Rational& theta, std::vector<F> values,
                      int digits) {
  MomentTable<F> t{kind, theta, std::move(values), {}};
  t.decimals.reserve(t.values.size());
  for (const auto& v : t.values) t.decimals.push_back(approximate(v, digits));
  return t;
}

// sum_k weight[k] * mu[k] / scale
template <ExactField F>
F weighted_sum(const std::vector<BigInt>& weight, const std::vector<F>& mu, const BigInt& scale) {
  F acc(0);
  for (std::size_t k = 0; k < weight.size(); ++k) {
    if (weight[k] == 0) continue;
    acc = acc + mu[k] * Rational(weight[k]);
  }
  return acc * Rational(BigInt(1), scale);
}

}  // namespace

MomentTable<Rational> cantor_moments(const Rational& theta, int N, int digits) {
  const DistributionParams params(theta);
  require_order(N);
  const auto n_max = static_cast<unsigned>(N);
  const ThetaPowers pw(theta, n_max);
  const PascalTriangle binom(n_max);
  std::vector<Rational> mu{Rational(1)};
  for (unsigned n = 1; n <= n_max; ++n) {
    // C(n,i) theta_bar^{n-i} theta^i = C(n,i) r^{n-i} p^i / q^n
    std::vector<BigInt> w(n);
    for (unsigned i = 0; i < n; ++i) w[i] = binom(n, i) * pw.r(n - i) * pw.p(i);
    const Rational s = weighted_sum(w, mu, pw.q(n));
    const Rational denom = Rational(2) * (Rational(1) - params.theta().pow(n));
    mu.push_back(s / denom);
  }
  return finish(EnsembleKind::unconstrained, theta, std::move(mu), digits);
}

MomentTable<QuadElement> solus_moments(const Rational& theta, int N, int digits) {
  const DistributionParams params(theta);
  require_order(N);
  const auto n_max = static_cast<unsigned>(N);
  const ThetaPowers pw(theta, 2 * n_max);
  const PascalTriangle binom(n_max);
  std::vector<QuadElement> mu{QuadElement(1)};
  for (unsigned n = 1; n <= n_max; ++n) {
    // i + j = n, j < n: C(n,j) r^i p^{2j} / q^{i+2j}, scaled by q^{2n}
    std::vector<BigInt> w(n);
    for (unsigned j = 0; j < n; ++j) {
      const unsigned i = n - j;
      w[j] = binom(n, j) * pw.r(i) * pw.p(2 * j) * pw.q(2 * n - (i + 2 * j));
    }
    const QuadElement s = weighted_sum(w, mu, pw.q(2 * n));
    // phi^2 - theta^n phi - theta^{2n} = (1 - theta^{2n}) + (1 - theta^n) phi
    const Rational tn = params.theta().pow(n);
    const QuadElement denom(Rational(1) - tn * tn, Rational(1) - tn);
    mu.push_back(s / denom);
  }
  return finish(EnsembleKind::solus, theta, std::move(mu), digits);
}

MomentTable<CubicElement> multus_moments(const Rational& theta, int N, int digits) {
  const DistributionParams params(theta);
  require_order(N);
  const auto n_max = static_cast<unsigned>(N);
  const ThetaPowers pw(theta, 4 * n_max);
  const PascalTriangle binom(n_max);
  const CubicElement psi = CubicElement::generator();
  const CubicElement psi2 = psi * psi;
  const CubicElement psi3 = psi2 * psi;
  const CubicElement psi4 = psi3 * psi;
  std::vector<CubicElement> mu{CubicElement(1)};
  for (unsigned n = 1; n <= n_max; ++n) {
    // S3: i+j+k = n, k < n; term C(n;i,j,k) r^{i+j} p^{j+2k} / q^{i+2j+2k},
    // scaled by q^{2n}. C(n;i,j,k) = C(n,k) C(n-k,j).
    std::vector<BigInt> w3(n);
    for (unsigned k = 0; k < n; ++k) {
      for (unsigned j = 0; j <= n - k; ++j) {
        const unsigned i = n - k - j;
        w3[k] += binom(n, k) * binom(n - k, j) * pw.r(i + j) * pw.p(j + 2 * k) *
                 pw.q(2 * n - (i + 2 * j + 2 * k));
      }
    }
    // S4: i+j+k+l = n, l < n; term C(n;i,j,k,l) r^{i+j+k} p^{j+2k+4l} /
    // q^{i+2j+3k+4l}, scaled by q^{4n}.
    std::vector<BigInt> w4(n);
    for (unsigned l = 0; l < n; ++l) {
      for (unsigned k = 0; k <= n - l; ++k) {
        for (unsigned j = 0; j <= n - l - k; ++j) {
          const unsigned i = n - l - k - j;
          w4[l] += binom(n, l) * binom(n - l, k) * binom(n - l - k, j) * pw.r(i + j + k) *
                   pw.p(j + 2 * k + 4 * l) * pw.q(4 * n - (i + 2 * j + 3 * k + 4 * l));
        }
      }
    }
    const CubicElement s3 = weighted_sum(w3, mu, pw.q(2 * n));
    const CubicElement s4 = weighted_sum(w4, mu, pw.q(4 * n));
    const Rational tn = params.theta().pow(n);
    const Rational t2n = tn * tn;
    const CubicElement denom = psi4 - psi3 * tn - psi2 * t2n - CubicElement(t2n * t2n);
    mu.push_back((psi2 * s3 + s4) / denom);
  }
  return finish(EnsembleKind::multus, theta, std::move(mu), digits);
}

std::vector<Rational> empirical_moments(EnsembleKind kind, const Rational& theta, unsigned m,
                                        int N, std::uint64_t cap) {
  const DistributionParams params(theta);
  require_order(N);
  require_enumerable(kind, m, cap);
  // F(omega) = X(omega) / q^m with integer X = sum_i omega_i (q-p) p^{i-1} q^{m-i}.
  const ThetaPowers pw(theta, m);
  std::vector<BigInt> weight(m);
  for (unsigned i = 0; i < m; ++i) weight[i] = pw.r(1) * pw.p(i) * pw.q(m - 1 - i);
  const bool small = m == 0 || pw.q(m) < BigInt("4611686018427387904", 10);
  std::vector<unsigned long> small_weight;
  if (small) {
    for (const auto& w : weight) small_weight.push_back(w.get_ui());
  }
  std::vector<BigInt> sums(static_cast<std::size_t>(N) + 1);
  BigInt power;
  BigInt x;
  for_each_member(
      kind, m,
      [&](const BitString& s) {
        if (small) {
          unsigned long xs = 0;
          for (unsigned i = 0; i < m; ++i) {
            if (s[i]) xs += small_weight[i];
          }
          power = 1;
          sums[0] += 1;
          for (int n = 1; n <= N; ++n) {
            mpz_mul_ui(power.get_mpz_t(), power.get_mpz_t(), xs);
            sums[n] += power;
          }
        } else {
          x = 0;
          for (unsigned i = 0; i < m; ++i) {
            if (s[i]) x += weight[i];
          }
          power = 1;
          sums[0] += 1;
          for (int n = 1; n <= N; ++n) {
            power *= x;
            sums[n] += power;
          }
        }
      },
      cap);
  const BigInt total = count(kind, m);
  std::vector<Rational> out;
  out.reserve(sums.size());
  BigInt scale = 1;
  for (int n = 0; n <= N; ++n) {
    out.emplace_back(sums[n], scale * total);
    scale *= pw.q(m);
  }
  return out;
}

std::vector<Rational> finite_moments(EnsembleKind kind, const Rational& theta, unsigned m,
                                     int N) {
  const DistributionParams params(theta);
  require_order(N);
  const Grammar& g = grammar(kind);
  const auto n_max = static_cast<unsigned>(N);
  const PascalTriangle binom(n_max);
  // sums[L][n] = sum over members of length L of F^n.
  std::vector<std::vector<Rational>> sums(m + 1, std::vector<Rational>(n_max + 1));
  std::vector<Rational> theta_pow(m + 1);
  theta_pow[0] = Rational(1);
  for (unsigned e = 1; e <= m; ++e) theta_pow[e] = theta_pow[e - 1] * params.theta();
  sums[0][0] = Rational(1);
  for (unsigned len = 1; len <= m; ++len) {
    for (const auto& t : g.terminals) {
      if (t.size() != len) continue;
      const Rational f = f_value(params, BitString::from_string(t));
      for (unsigned n = 0; n <= n_max; ++n) sums[len][n] += f.pow(n);
    }
    for (const auto& b : g.blocks) {
      if (b.size() > len) continue;
      const auto rest = len - static_cast<unsigned>(b.size());
      const Rational fb = f_value(params, BitString::from_string(b));
      const Rational& scale = theta_pow[b.size()];
      // (fb + scale*F)^n = sum_i C(n,i) fb^{n-i} scale^i F^i
      for (unsigned n = 0; n <= n_max; ++n) {
        Rational acc;
        for (unsigned i = 0; i <= n; ++i) {
          if (sums[rest][i].is_zero()) continue;
          acc += Rational(binom(n, i)) * fb.pow(n - i) * scale.pow(i) * sums[rest][i];
        }
        sums[len][n] += acc;
      }
    }
  }
  const Rational total(count(kind, m));
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(sums[m][n] / total);
  return out;
}

std::vector<Real> cantor_moments_real(const Rational& theta, int N) {
  const DistributionParams params(theta);
  require_order(N);
  const Real t = to_real(params.theta());
  const Real tb = to_real(params.theta_bar());
  const Real ratio = t / tb;
  std::vector<Real> mu{Real(1)};
  mu.reserve(static_cast<std::size_t>(N) + 1);
  Real tb_n = 1;
  Real t_n = 1;
  for (int n = 1; n <= N; ++n) {
    tb_n *= tb;
    t_n *= t;
    // Binomial weights C(n,i) tb^{n-i} t^i by the pmf ratio recursion.
    Real w = tb_n;
    Real acc = 0;
    for (int i = 0; i < n; ++i) {
      acc += w * mu[i];
      w *= ratio * (n - i);
      w /= (i + 1);
    }
    mu.push_back(acc / (2 * (1 - t_n)));
  }
  return mu;
}

std::vector<Real> solus_moments_real(const Rational& theta, int N) {
  const DistributionParams params(theta);
  require_order(N);
  const Real t = to_real(params.theta());
  const Real tb = to_real(params.theta_bar());
  const Real phi = golden_mean();
  const Real ratio = t * t / tb;
  std::vector<Real> mu{Real(1)};
  mu.reserve(static_cast<std::size_t>(N) + 1);
  Real tb_n = 1;
  Real t_n = 1;
  for (int n = 1; n <= N; ++n) {
    tb_n *= tb;
    t_n *= t;
    Real w = tb_n;  // C(n,j) tb^{n-j} t^{2j} at j = 0
    Real acc = 0;
    for (int j = 0; j < n; ++j) {
      acc += w * mu[j];
      w *= ratio * (n - j);
      w /= (j + 1);
    }
    mu.push_back(acc / (phi * phi - t_n * phi - t_n * t_n));
  }
  return mu;
}

}  // namespace cantor
