#include "oracles.hpp"

#include <algorithm>

namespace oracle {

bool is_member(Kind kind, const std::string& s) {
  switch (kind) {
    case Kind::unconstrained:
      return true;
    case Kind::solus:
      return s.find("11") == std::string::npos;
    case Kind::multus:
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '1') continue;
        const bool left = i > 0 && s[i - 1] == '1';
        const bool right = i + 1 < s.size() && s[i + 1] == '1';
        if (!left && !right) return false;
      }
      return true;
  }
  return false;
}

std::vector<std::string> members(Kind kind, unsigned m) {
  std::vector<std::string> out;
  const unsigned long total = 1UL << m;
  for (unsigned long code = 0; code < total; ++code) {
    std::string s(m, '0');
    for (unsigned i = 0; i < m; ++i) {
      if ((code >> (m - 1 - i)) & 1UL) s[i] = '1';
    }
    if (is_member(kind, s)) out.push_back(std::move(s));
  }
  return out;
}

mpq_class f_value(const mpq_class& theta, const std::string& s) {
  mpq_class sum = 0;
  mpq_class power = theta;
  for (char c : s) {
    if (c == '1') sum += power;
    power *= theta;
  }
  mpq_class out = (1 - theta) / theta * sum;
  out.canonicalize();
  return out;
}

std::size_t longest_run(const std::string& s, char bit) {
  std::size_t best = 0;
  std::size_t cur = 0;
  for (char c : s) {
    cur = c == bit ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

std::vector<mpq_class> finite_moments(Kind kind, const mpq_class& theta, unsigned m, int N) {
  const auto list = members(kind, m);
  std::vector<mpq_class> sums(static_cast<std::size_t>(N) + 1, mpq_class(0));
  for (const auto& s : list) {
    const mpq_class f = f_value(theta, s);
    mpq_class p = 1;
    for (int n = 0; n <= N; ++n) {
      sums[static_cast<std::size_t>(n)] += p;
      p *= f;
    }
  }
  for (auto& v : sums) {
    v /= static_cast<unsigned long>(list.size());
    v.canonicalize();
  }
  return sums;
}

mpq_class finite_order_stat(Kind kind, const mpq_class& theta, unsigned m, int n, bool maximum) {
  std::vector<mpq_class> values;
  for (const auto& s : members(kind, m)) values.push_back(f_value(theta, s));
  std::sort(values.begin(), values.end());
  if (maximum) std::reverse(values.begin(), values.end());
  const auto total = static_cast<unsigned long>(values.size());
  // P(extreme is values[j]) = ((total - j)/total)^n - ((total - j - 1)/total)^n
  auto power = [&](unsigned long k) {
    mpq_class base(static_cast<long>(k), static_cast<long>(total));
    base.canonicalize();
    mpq_class r = 1;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
  };
  mpq_class out = 0;
  for (unsigned long j = 0; j < total; ++j) out += values[j] * (power(total - j) - power(total - j - 1));
  out.canonicalize();
  return out;
}

std::vector<mpq_class> cantor_moments_by_cumulants(const mpq_class& theta, int N) {
  const auto size = static_cast<std::size_t>(N) + 1;
  std::vector<std::vector<mpz_class>> binom(size, std::vector<mpz_class>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
  }
  // Fair-bit moments are all 1/2; cumulants from
  // m_n = sum_{k=0}^{n-1} C(n-1,k) kappa_{k+1} m_{n-1-k}.
  std::vector<mpq_class> bit_moment(size, mpq_class(1, 2));
  bit_moment[0] = 1;
  std::vector<mpq_class> kappa(size, 0);
  for (std::size_t n = 1; n < size; ++n) {
    mpq_class rest = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) rest += binom[n - 1][k] * kappa[k + 1] * bit_moment[n - 1 - k];
    kappa[n] = bit_moment[n] - rest;
  }
  const mpq_class theta_bar = 1 - theta;
  std::vector<mpq_class> kx(size, 0);
  mpq_class tb_pow = 1;
  mpq_class t_pow = 1;
  for (std::size_t j = 1; j < size; ++j) {
    tb_pow *= theta_bar;
    t_pow *= theta;
    kx[j] = tb_pow * kappa[j] / (1 - t_pow);
  }
  std::vector<mpq_class> mu(size, 0);
  mu[0] = 1;
  for (std::size_t n = 1; n < size; ++n) {
    for (std::size_t k = 0; k < n; ++k) mu[n] += binom[n - 1][k] * kx[k + 1] * mu[n - 1 - k];
    mu[n].canonicalize();
  }
  return mu;
}

mpz_class count(Kind kind, unsigned m) {
  return static_cast<unsigned long>(members(kind, m).size());
}

}  // namespace oracle
