#include "cantor/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "cantor/bitsums.hpp"
#include "cantor/moments.hpp"
#include "cantor/runs.hpp"

namespace cantor {

namespace {

constexpr EnsembleKind kKinds[] = {EnsembleKind::unconstrained, EnsembleKind::solus,
                                   EnsembleKind::multus};

std::vector<int> run_bits(EnsembleKind kind) {
  if (kind == EnsembleKind::solus) return {0};
  return {0, 1};
}

template <class A, class B>
OracleCheck compare(std::string name, EnsembleKind kind, unsigned m, const A& got,
                    const B& want) {
  OracleCheck c{std::move(name), kind, m, got == want, {}};
  if (!c.passed) c.detail = got.to_string() + " != " + want.to_string();
  return c;
}

void check_members(EnsembleKind kind, unsigned m, std::vector<OracleCheck>& out) {
  const auto members = enumerate(kind, m);
  std::set<std::string> distinct;
  bool all_members = true;
  for (const auto& s : members) {
    distinct.insert(s.to_string());
    all_members = all_members && s.size() == m && is_member(kind, s);
  }
  out.push_back(compare("count", kind, m, Rational(static_cast<long>(distinct.size())),
                        Rational(count(kind, m))));
  out.push_back({"membership", kind, m, all_members && distinct.size() == members.size(),
                 all_members ? "duplicate strings" : "non-member string produced"});
  if (out.back().passed) out.back().detail.clear();
}

}  // namespace

std::vector<OracleCheck> oracle_suite(unsigned max_len, const Rational& theta,
                                      int moment_order) {
  std::vector<OracleCheck> out;
  const int n_max = static_cast<int>(max_len);
  for (const EnsembleKind kind : kKinds) {
    std::optional<BitsumSeries> sums;
    if (kind != EnsembleKind::unconstrained) sums = bitsum_series(kind, n_max);
    std::map<int, RunTable> runs;
    for (const int bit : run_bits(kind)) runs.emplace(bit, expected_longest_run(kind, bit, n_max));

    for (unsigned m = 0; m <= max_len; ++m) {
      check_members(kind, m, out);

      const EmpiricalBitsum e = empirical_bitsum(kind, m);
      Rational a;
      Rational b;
      if (sums) {
        a = sums->a[m];
        b = sums->b[m];
      } else {
        // sum over all strings of S and S^2: m 2^{m-1} and m(m+1) 2^{m-2}
        const Rational pow2 = Rational(2).pow(m);
        a = Rational(static_cast<long>(m)) * pow2 / Rational(2);
        b = Rational(static_cast<long>(m) * static_cast<long>(m + 1)) * pow2 / Rational(4);
      }
      out.push_back(compare("bitsum-total", kind, m, Rational(e.total), a));
      out.push_back(compare("bitsum-squared", kind, m, Rational(e.total_sq), b));

      for (const auto& [bit, table] : runs) {
        const std::string suffix = "-" + std::to_string(bit);
        out.push_back(compare("longest-run" + suffix, kind, m, empirical_longest_run(kind, bit, m),
                              table.expectations[m]));
        // Per-k counts of members whose longest run is below k. The multus
        // families count nonempty strings only.
        if (kind == EnsembleKind::multus && m == 0) continue;
        std::map<std::size_t, long> by_run;
        for_each_member(kind, m, [&](const BitString& s) { ++by_run[s.longest_run(bit == 1)]; });
        long below = 0;
        bool ok = true;
        std::string detail;
        for (unsigned k = 1; k <= m + 1; ++k) {
          below += by_run[k - 1];
          const Series c = gf_coefficients(no_run_gf(kind, bit, static_cast<int>(k)), n_max);
          if (c[m] != Rational(below)) {
            ok = false;
            detail = "k=" + std::to_string(k) + ": " + c[m].to_string() +
                     " != " + std::to_string(below);
            break;
          }
        }
        out.push_back({"no-run" + suffix, kind, m, ok, detail});
      }

      const auto direct = empirical_moments(kind, theta, m, moment_order);
      const auto recursive = finite_moments(kind, theta, m, moment_order);
      bool same = direct == recursive;
      out.push_back({"finite-moments", kind, m, same, same ? "" : "moment mismatch"});
    }
  }
  return out;
}

std::vector<OracleCheck> count_suite(unsigned max_m) {
  std::vector<OracleCheck> out;
  for (const EnsembleKind kind : kKinds) {
    const Series g = gf_coefficients(counting_gf(kind), static_cast<int>(max_m));
    // f_k of the defining recurrence, shifted so that rec[m] = f_{m+2}.
    std::vector<BigInt> f{BigInt(0), BigInt(1), BigInt(1)};
    for (unsigned k = 3; k <= max_m + 2; ++k) {
      switch (kind) {
        case EnsembleKind::unconstrained:
          f.push_back(f[k - 1] * 2);
          break;
        case EnsembleKind::solus:
          f.push_back(f[k - 1] + f[k - 2]);
          break;
        case EnsembleKind::multus:
          f.push_back(2 * f[k - 1] - f[k - 2] + f[k - 3]);
          break;
      }
    }
    for (unsigned m = 0; m <= max_m; ++m) {
      const BigInt want = kind == EnsembleKind::unconstrained ? BigInt(1) << m : f[m + 2];
      out.push_back(compare("count-recurrence", kind, m, Rational(count(kind, m)), Rational(want)));
      out.push_back(compare("count-gf", kind, m, g[m], Rational(want)));
    }
  }
  return out;
}

bool all_passed(const std::vector<OracleCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed; });
}

}  // namespace cantor
