#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/bitstring.hpp"
#include "cantor/errors.hpp"
#include "cantor/genfunc.hpp"
#include "cantor/rational.hpp"

namespace cantor {

enum class EnsembleKind { unconstrained, solus, multus };

std::string to_string(EnsembleKind kind);
EnsembleKind parse_kind(std::string_view text);

/// theta in (0, 1/2] and theta_bar = 1 - theta.
class DistributionParams {
 public:
  explicit DistributionParams(Rational theta);
  static DistributionParams classical() { return DistributionParams(Rational(1, 3)); }

  const Rational& theta() const { return theta_; }
  const Rational& theta_bar() const { return theta_bar_; }

 private:
  Rational theta_;
  Rational theta_bar_;
};

/// Default cap on exhaustive enumeration.
inline constexpr std::uint64_t kMaxEnumeration = 100'000'000;

/// Structural recurrence Omega = terminals + blocks x Omega, where every
/// member factors uniquely as a sequence of blocks followed by one terminal
/// (the empty terminal included).
struct Grammar {
  std::vector<std::string> blocks;
  std::vector<std::string> terminals;
};

const Grammar& grammar(EnsembleKind kind);

/// Membership predicate: solus has no "11"; multus has no maximal 1-run of
/// length one.
bool is_member(EnsembleKind kind, const BitString& s);

/// Number of length-m members: 2^m, Fibonacci f_{m+2}, or the second upper
/// Fibonacci f_{m+2}.
BigInt count(EnsembleKind kind, unsigned m);

/// Denominator-recurrence counting GF G_0(z) of the kind.
RationalGF counting_gf(EnsembleKind kind);

/// Throws infeasible_size when count(kind, m) exceeds the cap.
void require_enumerable(EnsembleKind kind, unsigned m, std::uint64_t cap = kMaxEnumeration);

namespace detail {

template <class Fn>
void expand(const Grammar& g, BitString& buf, unsigned remaining, Fn& fn) {
  if (remaining == 0) {
    fn(static_cast<const BitString&>(buf));
    return;
  }
  for (const auto& t : g.terminals) {
    if (t.size() != remaining) continue;
    buf.append(t);
    fn(static_cast<const BitString&>(buf));
    buf.truncate(buf.size() - t.size());
  }
  for (const auto& b : g.blocks) {
    if (b.size() > remaining) continue;
    buf.append(b);
    expand(g, buf, remaining - static_cast<unsigned>(b.size()), fn);
    buf.truncate(buf.size() - b.size());
  }
}

}  // namespace detail

/// Streams every length-m member exactly once, generated from the grammar.
template <class Fn>
void for_each_member(EnsembleKind kind, unsigned m, Fn&& fn,
                     std::uint64_t cap = kMaxEnumeration) {
  require_enumerable(kind, m, cap);
  BitString buf;
  buf.reserve(m);
  detail::expand(grammar(kind), buf, m, fn);
}

std::vector<BitString> enumerate(EnsembleKind kind, unsigned m,
                                 std::uint64_t cap = kMaxEnumeration);

/// F(omega) = (theta_bar/theta) * sum_i omega_i theta^i, exactly.
Rational f_value(const DistributionParams& params, const BitString& s);

/// Exactly uniform sampler over length-m members. Walks the membership
/// automaton choosing each bit by exact suffix-completion counts.
class UniformSampler {
 public:
  UniformSampler(EnsembleKind kind, unsigned m);

  EnsembleKind kind() const { return kind_; }
  unsigned length() const { return m_; }

  /// Draws into `out` (cleared first).
  void draw(std::mt19937_64& rng, BitString& out) const;
  BitString draw(std::mt19937_64& rng) const;

 private:
  static constexpr int kDead = -1;

  EnsembleKind kind_;
  unsigned m_;
  int states_ = 1;
  std::array<std::array<int, 2>, 3> next_{};
  // completions_[len][state]: accepted suffixes of length len from state.
  std::vector<std::array<BigInt, 3>> completions_;
  std::vector<std::array<std::uint64_t, 3>> small_;  // same, when they fit
  bool fits_u64_ = false;
};

BitString sample_uniform(EnsembleKind kind, unsigned m, std::uint64_t seed);

/// Uniform integer in [0, bound) by rejection on 64-bit words.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng);

/// Length-n prefix of the fixed point of 0 -> 01, 1 -> 0.
BitString fibonacci_word(std::size_t n);

}  // namespace cantor
