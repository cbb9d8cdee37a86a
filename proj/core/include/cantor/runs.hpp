#pragma once

#include <vector>

#include "cantor/ensembles.hpp"
#include "cantor/genfunc.hpp"

namespace cantor {

/// E(R_{n,bit}) for n = 0..N: numerator_n / count(kind, n).
struct RunTable {
  EnsembleKind kind;
  int bit;
  Series numerators;
  std::vector<Rational> expectations;
};

/// Counting GF of members whose longest run of `bit` is shorter than k.
/// The multus families count nonempty strings only (their n = 0 coefficient
/// is 0), matching the base series (1 + z^2) z / (1 - 2z + z^2 - z^3).
/// Solus 1-runs are rejected with ErrorCode::unsupported.
RationalGF no_run_gf(EnsembleKind kind, int bit, int k);

/// The series G_0 that no_run_gf is subtracted from.
RationalGF run_base_gf(EnsembleKind kind, int bit);

/// sum_{k=1}^{N} [G_0 - no_run_gf(k)] through z^N, plus the multus 1-run
/// correction -z/((1-z)(1-z+z^2)).
RunTable expected_longest_run(EnsembleKind kind, int bit, int N);

/// Exact average longest `bit`-run over all length-m members.
Rational empirical_longest_run(EnsembleKind kind, int bit, unsigned m,
                               std::uint64_t cap = kMaxEnumeration);

}  // namespace cantor
