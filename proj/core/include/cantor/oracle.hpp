#pragma once

#include <string>
#include <vector>

#include "cantor/ensembles.hpp"

namespace cantor {

struct OracleCheck {
  std::string name;
  EnsembleKind kind;
  unsigned length;
  bool passed;
  std::string detail;  // first mismatch, empty when passed
};

/// Compares every finite-length analytic quantity against exhaustive
/// enumeration for all kinds and lengths 0..max_len: member counts and
/// membership, bitsum totals, longest-run expectations, no-run counts and
/// finite-length moments of order <= moment_order.
std::vector<OracleCheck> oracle_suite(unsigned max_len, const Rational& theta = Rational(1, 3),
                                      int moment_order = 4);

/// count(kind, m) against the defining recurrence and the counting
/// generating function, m = 0..max_m.
std::vector<OracleCheck> count_suite(unsigned max_m = 30);

bool all_passed(const std::vector<OracleCheck>& checks);

}  // namespace cantor
