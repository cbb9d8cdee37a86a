#include "cantor/orderstats.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

void require_count(int N) {
  if (N < 1) fail(ErrorCode::invalid_argument, "order statistics need N >= 1");
}

std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row(n + 1);
  for (unsigned k = 0; k <= n; ++k) row[k] = binomial(n, k);
  return row;
}

}  // namespace

OrderStatTable<Rational> cantor_order_stats(const Rational& theta, int N) {
  const DistributionParams params(theta);
  require_count(N);
  OrderStatTable<Rational> t{EnsembleKind::unconstrained, theta, {}, {}, Rational(1)};
  for (int n = 1; n <= N; ++n) {
    const auto row = binomial_row(static_cast<unsigned>(n));
    Rational acc;
    for (int i = 1; i < n; ++i) acc += Rational(row[i]) * t.xi(i);
    BigInt two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    const Rational xi = (params.theta_bar() + params.theta() * acc) /
                        (Rational(two_n) - Rational(2) * params.theta());
    t.xi_values.push_back(xi);
    t.eta_values.push_back(Rational(1) - xi);
  }
  return t;
}

OrderStatTable<QuadElement> solus_order_stats(const Rational& theta, int N) {
  const DistributionParams params(theta);
  require_count(N);
  const Rational& th = params.theta();
  const Rational th2 = th * th;
  const QuadElement phi_inv(Rational(-1), Rational(1));
  std::vector<QuadElement> inv_pow{QuadElement(1)};
  for (int e = 1; e <= 2 * N; ++e) inv_pow.push_back(inv_pow.back() * phi_inv);

  OrderStatTable<QuadElement> t{EnsembleKind::solus, theta, {}, {},
                                QuadElement(Rational(1) / (Rational(1) + th))};
  for (int n = 1; n <= N; ++n) {
    const auto row = binomial_row(static_cast<unsigned>(n));
    const QuadElement denom = QuadElement(1) - inv_pow[n] * th - inv_pow[2 * n] * th2;
    QuadElement sx(0);
    QuadElement se(0);
    for (int i = 1; i < n; ++i) {
      const Rational c(row[i]);
      sx += inv_pow[i] * inv_pow[2 * (n - i)] * t.xi(i) * c;
      se += inv_pow[2 * i] * inv_pow[n - i] * t.eta(i) * c;
    }
    const QuadElement xi =
        (inv_pow[2 * n] * params.theta_bar() + sx * th) / denom;
    const QuadElement eta =
        ((QuadElement(1) - inv_pow[n]) * params.theta_bar() + se * th2) / denom;
    t.xi_values.push_back(xi);
    t.eta_values.push_back(eta);
  }
  return t;
}

RealOrderStats cantor_order_stats_real(const Rational& theta, int N) {
  const DistributionParams params(theta);
  require_count(N);
  const Real th = to_real(params.theta());
  const Real tb = to_real(params.theta_bar());
  RealOrderStats out;
  Real half_n = 1;
  for (int n = 1; n <= N; ++n) {
    half_n /= 2;
    // C(n,i) 2^{-n} by the ratio recursion; divide through by 2^n.
    Real w = half_n;
    Real acc = 0;
    for (int i = 1; i < n; ++i) {
      w *= (n - i + 1);
      w /= i;
      acc += w * out.xi[static_cast<std::size_t>(i - 1)];
    }
    const Real xi = (tb * half_n + th * acc) / (1 - 2 * th * half_n);
    out.xi.push_back(xi);
    out.eta.push_back(1 - xi);
  }
  return out;
}

RealOrderStats solus_order_stats_real(const Rational& theta, int N) {
  const DistributionParams params(theta);
  require_count(N);
  const Real th = to_real(params.theta());
  const Real tb = to_real(params.theta_bar());
  const Real phi = golden_mean();
  const Real inv = 1 / phi;
  RealOrderStats out;
  Real inv_n = 1;
  for (int n = 1; n <= N; ++n) {
    inv_n *= inv;
    const Real inv_2n = inv_n * inv_n;
    // wx_i = C(n,i) phi^{-(2n-i)}, we_j = C(n,j) phi^{-(n+j)}
    Real wx = inv_2n;
    Real we = inv_n;
    Real sx = 0;
    Real se = 0;
    for (int i = 1; i < n; ++i) {
      wx *= phi * (n - i + 1);
      wx /= i;
      we *= inv * (n - i + 1);
      we /= i;
      sx += wx * out.xi[static_cast<std::size_t>(i - 1)];
      se += we * out.eta[static_cast<std::size_t>(i - 1)];
    }
    const Real denom = 1 - th * inv_n - th * th * inv_2n;
    out.xi.push_back((tb * inv_2n + th * sx) / denom);
    out.eta.push_back((tb * (1 - inv_n) + th * th * se) / denom);
  }
  return out;
}

Real window_average(const std::vector<Real>& values, const Real& exponent, int lo, int hi) {
  if (lo < 1 || hi < lo || static_cast<std::size_t>(hi) > values.size()) {
    fail(ErrorCode::invalid_argument, "window outside the computed range");
  }
  Real acc = 0;
  for (int n = lo; n <= hi; ++n) acc += values[static_cast<std::size_t>(n - 1)] * pow(Real(n), exponent);
  return acc / (hi - lo + 1);
}

namespace {

struct ChunkSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;
};

constexpr std::uint64_t kChunks = 64;

ChunkSums run_chunk(const UniformSampler& sampler, const std::vector<double>& weight, int n,
                    Extreme which, std::uint64_t draws, std::uint64_t seed,
                    std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), 0x5eedU};
  std::mt19937_64 rng(seq);
  BitString bits;
  ChunkSums out;
  for (std::uint64_t s = 0; s < draws; ++s) {
    double best = which == Extreme::min ? 2.0 : -1.0;
    for (int d = 0; d < n; ++d) {
      sampler.draw(rng, bits);
      double f = 0.0;
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) f += weight[i];
      }
      best = which == Extreme::min ? std::min(best, f) : std::max(best, f);
    }
    out.sum += best;
    out.sum_sq += best * best;
  }
  out.count = draws;
  return out;
}

}  // namespace

MonteCarloEstimate monte_carlo_order_stat(EnsembleKind kind, const Rational& theta, int n,
                                          Extreme which, const MonteCarloConfig& config) {
  const DistributionParams params(theta);
  if (n < 1) fail(ErrorCode::invalid_argument, "need n >= 1 draws");
  if (config.samples < 1000) fail(ErrorCode::invalid_argument, "need at least 1000 samples");
  const double th = params.theta().to_double();
  if (static_cast<double>(config.prefix_len) * std::log10(th) > -12.0) {
    fail(ErrorCode::invalid_argument, "prefix_len too short: theta^prefix_len must be < 1e-12");
  }
  const UniformSampler sampler(kind, config.prefix_len);
  // F = theta_bar * sum_i omega_i theta^{i-1}
  std::vector<double> weight(config.prefix_len);
  double w = params.theta_bar().to_double();
  for (auto& x : weight) {
    x = w;
    w *= th;
  }
  std::vector<ChunkSums> chunks(kChunks);
  const auto draws_in = [&](std::uint64_t c) {
    return config.samples / kChunks + (c < config.samples % kChunks ? 1 : 0);
  };
  const unsigned jobs = std::max(1U, config.jobs);
  if (jobs == 1) {
    for (std::uint64_t c = 0; c < kChunks; ++c) {
      chunks[c] = run_chunk(sampler, weight, n, which, draws_in(c), config.seed, c);
    }
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        for (std::uint64_t c = j; c < kChunks; c += jobs) {
          chunks[c] = run_chunk(sampler, weight, n, which, draws_in(c), config.seed, c);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  ChunkSums total;
  for (const auto& c : chunks) {
    total.sum += c.sum;
    total.sum_sq += c.sum_sq;
    total.count += c.count;
  }
  const auto count = static_cast<double>(total.count);
  const double mean = total.sum / count;
  const double var = std::max(0.0, (total.sum_sq - count * mean * mean) / (count - 1.0));
  return {mean, std::sqrt(var / count), total.count};
}

}  // namespace cantor
