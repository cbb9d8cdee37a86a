#include <gtest/gtest.h>

#include <cmath>

#include "cantor/errors.hpp"
#include "cantor/orderstats.hpp"
#include "oracles.hpp"

namespace cantor {
namespace {

double as_double(const QuadElement& x) { return static_cast<double>(to_real(x)); }

TEST(CantorOrderStats, ClassicalMinimumValues) {
  const auto t = cantor_order_stats(Rational(1, 3), 5);
  EXPECT_EQ(t.xi(1), Rational(1, 2));
  EXPECT_EQ(t.xi(2), Rational(3, 10));
  EXPECT_EQ(t.xi(3), Rational(1, 5));
  EXPECT_EQ(t.xi(4), Rational(33, 230));
  EXPECT_EQ(t.xi(5), Rational(5, 46));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(t.eta(n), Rational(1) - t.xi(n));
}

TEST(CantorOrderStats, MatchFiniteLengthBruteForce) {
  // Truncating every string after m bits moves F by at most theta^m.
  const Rational theta(1, 3);
  const unsigned m = 11;
  const auto t = cantor_order_stats(theta, 4);
  const double tol = std::pow(1.0 / 3.0, m);
  for (int n = 1; n <= 4; ++n) {
    const mpq_class lo = oracle::finite_order_stat(oracle::Kind::unconstrained, theta.gmp(), m, n, false);
    const mpq_class hi = oracle::finite_order_stat(oracle::Kind::unconstrained, theta.gmp(), m, n, true);
    EXPECT_NEAR(t.xi(n).to_double(), lo.get_d(), tol) << n;
    EXPECT_NEAR(t.eta(n).to_double(), hi.get_d(), tol) << n;
  }
}

TEST(SolusOrderStats, ApproachedByFiniteLengthBruteForce) {
  const Rational theta(1, 3);
  const auto t = solus_order_stats(theta, 3);
  for (int n = 1; n <= 3; ++n) {
    double prev_gap = 1.0;
    for (unsigned m : {8U, 13U, 18U}) {
      const double brute =
          oracle::finite_order_stat(oracle::Kind::solus, theta.gmp(), m, n, false).get_d();
      const double gap = std::abs(brute - as_double(t.xi(n)));
      EXPECT_LT(gap, prev_gap);
      prev_gap = gap;
    }
    EXPECT_LT(prev_gap, 1e-4) << n;
  }
}

TEST(SolusOrderStats, SupportAndMonotonicity) {
  const auto t = solus_order_stats(Rational(1, 3), 12);
  EXPECT_EQ(t.max_support, QuadElement(Rational(3, 4)));
  for (int n = 1; n <= 12; ++n) {
    EXPECT_GT(as_double(t.xi(n)), 0.0);
    EXPECT_LT(as_double(t.eta(n)), 0.75);
    if (n > 1) {
      EXPECT_LT(as_double(t.xi(n)), as_double(t.xi(n - 1)));
      EXPECT_GT(as_double(t.eta(n)), as_double(t.eta(n - 1)));
    }
  }
  // n = 1 is the mean of the limiting law.
  EXPECT_NEAR(as_double(t.xi(1)), 0.338826005329, 1e-11);
  EXPECT_EQ(t.xi(1), t.eta(1));
}

TEST(OrderStats, FloatingRecurrencesTrackExactValues) {
  const Rational theta(1, 3);
  const auto c = cantor_order_stats(theta, 40);
  const auto s = solus_order_stats(theta, 40);
  const auto rc = cantor_order_stats_real(theta, 40);
  const auto rs = solus_order_stats_real(theta, 40);
  for (int n = 1; n <= 40; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    EXPECT_LT(abs(rc.xi[i] - to_real(c.xi(n))), Real(1e-55));
    EXPECT_LT(abs(rs.xi[i] - to_real(s.xi(n))), Real(1e-55));
    EXPECT_LT(abs(rs.eta[i] - to_real(s.eta(n))), Real(1e-55));
  }
}

TEST(OrderStats, CantorMinimumFollowsItsPowerLaw) {
  const auto r = cantor_order_stats_real(Rational(1, 3), 4096);
  const Real expo = log(Real(3)) / log(Real(2));
  for (int n = 512; n <= 4096; n += 97) {
    const double scaled = static_cast<double>(r.xi[static_cast<std::size_t>(n - 1)] * pow(Real(n), expo));
    EXPECT_NEAR(scaled / 1.9967049717, 1.0, 0.01) << n;
  }
}

TEST(OrderStats, WindowAverageOfExactPowerLaw) {
  std::vector<Real> v;
  for (int n = 1; n <= 100; ++n) v.push_back(Real(7) / pow(Real(n), Real(1.5)));
  EXPECT_LT(abs(window_average(v, Real(1.5), 10, 90) - 7), Real(1e-50));
  EXPECT_THROW(window_average(v, Real(1), 0, 5), Error);
  EXPECT_THROW(window_average(v, Real(1), 50, 101), Error);
}

TEST(MonteCarlo, DeterministicAndIndependentOfJobs) {
  MonteCarloConfig cfg;
  cfg.samples = 20'000;
  cfg.seed = 42;
  const auto a = monte_carlo_order_stat(EnsembleKind::solus, Rational(1, 3), 3, Extreme::min, cfg);
  cfg.jobs = 3;
  const auto b = monte_carlo_order_stat(EnsembleKind::solus, Rational(1, 3), 3, Extreme::min, cfg);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.standard_error, b.standard_error);
  EXPECT_EQ(a.samples, 20'000U);
}

TEST(MonteCarlo, AgreesWithRecurrence) {
  MonteCarloConfig cfg;
  cfg.samples = 20'000;
  const auto exact = cantor_order_stats(Rational(1, 3), 4);
  for (int n : {2, 4}) {
    const auto lo = monte_carlo_order_stat(EnsembleKind::unconstrained, Rational(1, 3), n, Extreme::min, cfg);
    const auto hi = monte_carlo_order_stat(EnsembleKind::unconstrained, Rational(1, 3), n, Extreme::max, cfg);
    EXPECT_LT(std::abs(lo.estimate - exact.xi(n).to_double()), 4 * lo.standard_error);
    EXPECT_LT(std::abs(hi.estimate - exact.eta(n).to_double()), 4 * hi.standard_error);
  }
}

TEST(MonteCarlo, RejectsUnderpoweredConfigurations) {
  MonteCarloConfig cfg;
  cfg.samples = 10;
  EXPECT_THROW(monte_carlo_order_stat(EnsembleKind::solus, Rational(1, 3), 2, Extreme::min, cfg), Error);
  cfg.samples = 10'000;
  cfg.prefix_len = 5;
  EXPECT_THROW(monte_carlo_order_stat(EnsembleKind::solus, Rational(1, 3), 2, Extreme::min, cfg), Error);
}

}  // namespace
}  // namespace cantor
