#include "cantor/runs.hpp"

#include "cantor/errors.hpp"

namespace cantor {

namespace {

void require_pair(EnsembleKind kind, int bit) {
  if (bit != 0 && bit != 1) fail(ErrorCode::invalid_argument, "bit must be 0 or 1");
  if (kind == EnsembleKind::solus && bit == 1) {
    fail(ErrorCode::unsupported, "longest 1-runs are not defined for solus strings");
  }
}

Poly z_pow(unsigned e, long c = 1) { return Poly::monomial(Rational(c), e); }

}  // namespace

RationalGF run_base_gf(EnsembleKind kind, int bit) {
  require_pair(kind, bit);
  if (kind == EnsembleKind::multus) return {Poly{0, 1, 0, 1}, Poly{1, -2, 1, -1}};
  return counting_gf(kind);
}

RationalGF no_run_gf(EnsembleKind kind, int bit, int k) {
  require_pair(kind, bit);
  if (k < 1) fail(ErrorCode::invalid_argument, "k must be >= 1");
  const auto u = static_cast<unsigned>(k);
  switch (kind) {
    case EnsembleKind::unconstrained:
      return {Poly{1} - z_pow(u), Poly{1, -2} + z_pow(u + 1)};
    case EnsembleKind::solus:
      return {Poly{1, 1} - z_pow(u) - z_pow(u + 1), Poly{1, -1, -1} + z_pow(u + 1)};
    case EnsembleKind::multus:
      if (bit == 1) {
        if (k == 1) return {Poly{0, 1}, Poly{1, -1}};
        return {(Poly{1, 0, 1} - z_pow(u - 1) - z_pow(u)) * Poly{0, 1},
                Poly{1, -2, 1, -1} + z_pow(u + 1)};
      }
      return {(Poly{1, 0, 1} - z_pow(u - 1) + z_pow(u) - z_pow(u + 1, 2)) * Poly{0, 1},
              Poly{1, -2, 1, -1} + z_pow(u + 2)};
  }
  fail(ErrorCode::invalid_argument, "unknown ensemble kind");
}

RunTable expected_longest_run(EnsembleKind kind, int bit, int N) {
  require_pair(kind, bit);
  if (N < 0) fail(ErrorCode::invalid_argument, "N must be >= 0");
  const auto n1 = static_cast<std::size_t>(N) + 1;
  const std::vector<BigInt> base = gf_integer_coefficients(run_base_gf(kind, bit), N);
  std::vector<BigInt> acc(n1);
  auto subtract = [&](const RationalGF& g) {
    const std::vector<BigInt> c = gf_integer_coefficients(g, N);
    for (std::size_t n = 0; n < n1; ++n) acc[n] -= c[n];
  };
  for (int k = 1; k <= N; ++k) {
    RationalGF term = no_run_gf(kind, bit, k);
    if (kind == EnsembleKind::multus && bit == 1 && k == 1) {
      // The summand as displayed uses the k > 1 family at k = 1 as well;
      // the correction below accounts for the difference.
      term = {Poly{0, 0, -1, 1}, Poly{1, -2, 2, -1}};
    }
    for (std::size_t n = 0; n < n1; ++n) acc[n] += base[n];
    subtract(term);
  }
  if (kind == EnsembleKind::multus && bit == 1) {
    subtract(RationalGF{Poly{0, 1}, Poly{1, -1} * Poly{1, -1, 1}});
  }
  std::vector<Rational> numerators;
  numerators.reserve(n1);
  for (const auto& v : acc) numerators.emplace_back(v);
  RunTable out{kind, bit, Series(std::move(numerators)), {}};
  out.expectations.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    out.expectations.push_back(out.numerators[static_cast<std::size_t>(n)] /
                               Rational(count(kind, static_cast<unsigned>(n))));
  }
  return out;
}

Rational empirical_longest_run(EnsembleKind kind, int bit, unsigned m, std::uint64_t cap) {
  if (bit != 0 && bit != 1) fail(ErrorCode::invalid_argument, "bit must be 0 or 1");
  std::uint64_t total = 0;
  for_each_member(
      kind, m, [&](const BitString& s) { total += s.longest_run(bit == 1); }, cap);
  return Rational(BigInt(std::to_string(total), 10), count(kind, m));
}

}  // namespace cantor
