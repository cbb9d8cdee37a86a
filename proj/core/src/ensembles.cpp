#include "cantor/ensembles.hpp"

#include <limits>

namespace cantor {

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::unconstrained:
      return "unconstrained";
    case EnsembleKind::solus:
      return "solus";
    case EnsembleKind::multus:
      return "multus";
  }
  return "?";
}

EnsembleKind parse_kind(std::string_view text) {
  if (text == "unconstrained" || text == "cantor") return EnsembleKind::unconstrained;
  if (text == "solus") return EnsembleKind::solus;
  if (text == "multus") return EnsembleKind::multus;
  fail(ErrorCode::invalid_argument, "unknown ensemble kind '" + std::string(text) + "'");
}

DistributionParams::DistributionParams(Rational theta) : theta_(std::move(theta)) {
  if (theta_ <= Rational(0) || theta_ > Rational(1, 2)) {
    fail(ErrorCode::invalid_argument, "theta must satisfy 0 < theta <= 1/2, got " + theta_.to_string());
  }
  theta_bar_ = Rational(1) - theta_;
}

const Grammar& grammar(EnsembleKind kind) {
  static const Grammar unconstrained{{"0", "1"}, {}};
  static const Grammar solus{{"0", "10"}, {"1"}};
  static const Grammar multus{{"0", "11", "1110"}, {"111"}};
  switch (kind) {
    case EnsembleKind::unconstrained:
      return unconstrained;
    case EnsembleKind::solus:
      return solus;
    case EnsembleKind::multus:
      return multus;
  }
  return unconstrained;
}

bool is_member(EnsembleKind kind, const BitString& s) {
  switch (kind) {
    case EnsembleKind::unconstrained:
      return true;
    case EnsembleKind::solus:
      for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] && s[i - 1]) return false;
      }
      return true;
    case EnsembleKind::multus:
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s[i]) continue;
        const bool left = i > 0 && s[i - 1];
        const bool right = i + 1 < s.size() && s[i + 1];
        if (!left && !right) return false;
      }
      return true;
  }
  return false;
}

BigInt count(EnsembleKind kind, unsigned m) {
  switch (kind) {
    case EnsembleKind::unconstrained: {
      BigInt r;
      mpz_ui_pow_ui(r.get_mpz_t(), 2, m);
      return r;
    }
    case EnsembleKind::solus: {
      BigInt r;
      mpz_fib_ui(r.get_mpz_t(), m + 2);
      return r;
    }
    case EnsembleKind::multus: {
      // f_k = 2 f_{k-1} - f_{k-2} + f_{k-3}, f_0 = 0, f_1 = f_2 = 1
      BigInt f0 = 0;
      BigInt f1 = 1;
      BigInt f2 = 1;
      for (unsigned k = 3; k <= m + 2; ++k) {
        BigInt f3 = 2 * f2 - f1 + f0;
        f0 = std::move(f1);
        f1 = std::move(f2);
        f2 = std::move(f3);
      }
      return f2;
    }
  }
  return 0;
}

RationalGF counting_gf(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::unconstrained:
      return {Poly{1}, Poly{1, -2}};
    case EnsembleKind::solus:
      return {Poly{1, 1}, Poly{1, -1, -1}};
    case EnsembleKind::multus:
      return {Poly{1, -1, 1}, Poly{1, -2, 1, -1}};
  }
  return {Poly{1}, Poly{1}};
}

void require_enumerable(EnsembleKind kind, unsigned m, std::uint64_t cap) {
  if (count(kind, m) > BigInt(std::to_string(cap), 10)) {
    fail(ErrorCode::infeasible_size, "enumerating " + to_string(kind) + " strings of length " +
                                         std::to_string(m) + " exceeds the cap of " +
                                         std::to_string(cap) + " strings");
  }
}

std::vector<BitString> enumerate(EnsembleKind kind, unsigned m, std::uint64_t cap) {
  std::vector<BitString> out;
  for_each_member(kind, m, [&](const BitString& s) { out.push_back(s); }, cap);
  return out;
}

Rational f_value(const DistributionParams& params, const BitString& s) {
  // Horner from the last bit: F = (theta_bar/theta) * theta * (w1 + theta*(w2 + ...)).
  const Rational& theta = params.theta();
  Rational acc;
  for (std::size_t i = s.size(); i-- > 0;) {
    acc *= theta;
    if (s[i]) acc += Rational(1);
  }
  return acc * params.theta_bar();
}

UniformSampler::UniformSampler(EnsembleKind kind, unsigned m) : kind_(kind), m_(m) {
  std::array<bool, 3> accept{true, true, true};
  switch (kind) {
    case EnsembleKind::unconstrained:
      states_ = 1;
      next_[0] = {0, 0};
      break;
    case EnsembleKind::solus:
      states_ = 2;
      next_[0] = {0, 1};
      next_[1] = {0, kDead};
      break;
    case EnsembleKind::multus:
      // 0: after a 0 (or start); 1: a lone 1 so far; 2: inside a run >= 2.
      states_ = 3;
      next_[0] = {0, 1};
      next_[1] = {kDead, 2};
      next_[2] = {0, 2};
      accept = {true, false, true};
      break;
  }
  completions_.resize(m + 1);
  for (int s = 0; s < states_; ++s) completions_[0][s] = accept[s] ? 1 : 0;
  for (unsigned len = 1; len <= m; ++len) {
    for (int s = 0; s < states_; ++s) {
      BigInt total = 0;
      for (int bit = 0; bit < 2; ++bit) {
        const int t = next_[s][bit];
        if (t != kDead) total += completions_[len - 1][t];
      }
      completions_[len][s] = total;
    }
  }
  const BigInt limit("9223372036854775807", 10);
  fits_u64_ = true;
  for (const auto& row : completions_) {
    for (int s = 0; s < states_; ++s) fits_u64_ = fits_u64_ && row[s] < limit;
  }
  if (fits_u64_) {
    small_.resize(m + 1);
    for (unsigned len = 0; len <= m; ++len) {
      for (int s = 0; s < states_; ++s) small_[len][s] = completions_[len][s].get_ui();
    }
  }
}

void UniformSampler::draw(std::mt19937_64& rng, BitString& out) const {
  out.truncate(0);
  int state = 0;
  if (fits_u64_) {
    const std::uint64_t total = small_[m_][0];
    // Rejection on the smallest covering power of two.
    std::uint64_t mask = total - 1;
    for (int shift = 1; shift < 64; shift <<= 1) mask |= mask >> shift;
    std::uint64_t r = 0;
    do {
      r = rng() & mask;
    } while (r >= total);
    for (unsigned len = m_; len > 0; --len) {
      const int t0 = next_[state][0];
      const std::uint64_t c0 = t0 == kDead ? 0 : small_[len - 1][t0];
      if (r < c0) {
        out.push_back(false);
        state = t0;
      } else {
        r -= c0;
        out.push_back(true);
        state = next_[state][1];
      }
    }
    return;
  }
  BigInt r = uniform_below(completions_[m_][0], rng);
  for (unsigned len = m_; len > 0; --len) {
    const int t0 = next_[state][0];
    const BigInt c0 = t0 == kDead ? BigInt(0) : completions_[len - 1][t0];
    if (r < c0) {
      out.push_back(false);
      state = t0;
    } else {
      r -= c0;
      out.push_back(true);
      state = next_[state][1];
    }
  }
}

BitString UniformSampler::draw(std::mt19937_64& rng) const {
  BitString out;
  draw(rng, out);
  return out;
}

BitString sample_uniform(EnsembleKind kind, unsigned m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return UniformSampler(kind, m).draw(rng);
}

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
  if (bound <= 0) fail(ErrorCode::invalid_argument, "uniform_below needs a positive bound");
  const std::size_t bits = mpz_sizeinbase(BigInt(bound - 1).get_mpz_t(), 2);
  for (;;) {
    BigInt r = 0;
    std::size_t have = 0;
    while (have < bits) {
      r <<= 64;
      const std::uint64_t word = rng();
      r += BigInt(std::to_string(word), 10);
      have += 64;
    }
    // Keep exactly `bits` low bits.
    mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
    if (r < bound) return r;
  }
}

BitString fibonacci_word(std::size_t n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "fibonacci_word needs n >= 1");
  // S_{k+1} = S_k S_{k-1} with S_0 = "0", S_1 = "01".
  std::string prev = "0";
  std::string cur = "01";
  while (cur.size() < n) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return BitString::from_string(std::string_view(cur).substr(0, n));
}

}  // namespace cantor
