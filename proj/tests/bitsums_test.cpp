#include <gtest/gtest.h>

#include <cmath>

#include "cantor/bitsums.hpp"
#include "cantor/errors.hpp"
#include "oracles.hpp"

namespace cantor {
namespace {

std::vector<long> slice(const Series& s, std::size_t from, std::size_t to) {
  std::vector<long> out;
  for (std::size_t i = from; i <= to; ++i) out.push_back(s[i].num().get_si());
  return out;
}

TEST(BitsumSeries, SolusLeadingCoefficients) {
  const BitsumSeries s = bitsum_series(EnsembleKind::solus, 5);
  EXPECT_EQ(slice(s.a, 1, 5), (std::vector<long>{1, 2, 5, 10, 20}));
  EXPECT_EQ(slice(s.b, 1, 5), (std::vector<long>{1, 2, 7, 16, 38}));
  EXPECT_EQ(slice(s.c, 1, 5), (std::vector<long>{1, 2, 10, 28, 94}));
}

TEST(BitsumSeries, MultusLeadingCoefficients) {
  const BitsumSeries s = bitsum_series(EnsembleKind::multus, 5);
  EXPECT_EQ(slice(s.a, 2, 5), (std::vector<long>{2, 7, 16, 34}));
  EXPECT_EQ(slice(s.b, 2, 5), (std::vector<long>{4, 17, 46, 116}));
  EXPECT_EQ(slice(s.c, 2, 5), (std::vector<long>{4, 19, 66, 236}));
}

TEST(BitsumSeries, EmptyStringHasZeroBitsum) {
  for (const auto kind : {EnsembleKind::solus, EnsembleKind::multus}) {
    const BitsumSeries s = bitsum_series(kind, 0);
    EXPECT_TRUE(s.a[0].is_zero() && s.b[0].is_zero() && s.c[0].is_zero());
  }
}

TEST(BitsumSeries, VarianceCombinationIdentity) {
  for (const auto kind : {EnsembleKind::solus, EnsembleKind::multus}) {
    const BitsumSeries s = bitsum_series(kind, 300);
    for (std::size_t n = 0; n <= 300; ++n) {
      EXPECT_EQ(s.c[n], s.counts[n] * s.b[n] - s.a[n] * s.a[n]) << n;
      EXPECT_EQ(s.counts[n], Rational(count(kind, static_cast<unsigned>(n))));
    }
  }
}

TEST(BitsumSeries, TotalsMatchBruteForce) {
  const std::pair<EnsembleKind, oracle::Kind> kinds[] = {{EnsembleKind::solus, oracle::Kind::solus},
                                                         {EnsembleKind::multus, oracle::Kind::multus}};
  for (const auto& [kind, okind] : kinds) {
    const BitsumSeries s = bitsum_series(kind, 18);
    for (unsigned m = 0; m <= 18; ++m) {
      long total = 0;
      long total_sq = 0;
      for (const auto& w : oracle::members(okind, m)) {
        const long k = static_cast<long>(std::count(w.begin(), w.end(), '1'));
        total += k;
        total_sq += k * k;
      }
      EXPECT_EQ(s.a[m], Rational(total)) << m;
      EXPECT_EQ(s.b[m], Rational(total_sq)) << m;
    }
  }
}

TEST(BitsumSeries, UnconstrainedIsClosedForm) {
  EXPECT_THROW(bitsum_series(EnsembleKind::unconstrained, 4), Error);
  EXPECT_THROW(bitsum_series(EnsembleKind::solus, -1), Error);
}

TEST(EmpiricalBitsum, Examples) {
  const auto s = empirical_bitsum(EnsembleKind::solus, 3);
  EXPECT_EQ(s.total, BigInt(5));
  EXPECT_EQ(s.total_sq, BigInt(7));
  const auto m = empirical_bitsum(EnsembleKind::multus, 3);
  EXPECT_EQ(m.total, BigInt(7));
  EXPECT_EQ(m.total_sq, BigInt(17));
  EXPECT_EQ(m.mean, Rational(7, 4));
  EXPECT_EQ(m.variance, Rational(4 * 17 - 49, 16));
  const auto u = empirical_bitsum(EnsembleKind::unconstrained, 2);
  EXPECT_EQ(u.total, BigInt(4));
  EXPECT_EQ(u.mean, Rational(1));
  EXPECT_EQ(u.variance, Rational(1, 2));
  EXPECT_THROW(empirical_bitsum(EnsembleKind::unconstrained, 40), Error);
}

TEST(Density, UnconstrainedHalfAndQuarter) {
  const DensityLimit d = bitsum_density(EnsembleKind::unconstrained);
  EXPECT_EQ(std::get<Rational>(d.mean_density), Rational(1, 2));
  EXPECT_EQ(std::get<Rational>(d.variance_density), Rational(1, 4));
}

TEST(Density, SolusClosedForms) {
  const DensityLimit d = bitsum_density(EnsembleKind::solus, 12);
  const Real r5 = sqrt(Real(5));
  EXPECT_LT(abs(to_real(d.mean_density) - (5 - r5) / 10), Real(1e-60));
  EXPECT_LT(abs(to_real(d.variance_density) - 1 / (5 * r5)), Real(1e-60));
  EXPECT_NEAR(d.mean_decimal.to_double(), 0.2763932022, 1e-9);
  EXPECT_NEAR(d.variance_decimal.to_double(), 0.0894427190, 1e-9);
}

TEST(Density, MultusExactValuesMatchPrintedRadicals) {
  const DensityLimit d = bitsum_density(EnsembleKind::multus, 12);
  const auto [mean, variance] = multus_density_radicals();
  EXPECT_LT(abs(to_real(d.mean_density) - mean), Real(1e-55));
  EXPECT_LT(abs(to_real(d.variance_density) - variance), Real(1e-55));
  EXPECT_NEAR(d.mean_decimal.to_double(), 0.5885044113, 1e-9);
  EXPECT_NEAR(d.variance_decimal.to_double(), 0.2810976123, 1e-9);
}

TEST(Density, SeriesRatiosConverge) {
  for (const auto kind : {EnsembleKind::solus, EnsembleKind::multus}) {
    const BitsumSeries s = bitsum_series(kind, 2000);
    const DensityLimit d = bitsum_density(kind);
    const Real f = to_real(s.counts[2000]);
    const Real mean = to_real(s.a[2000]) / (2000 * f);
    const Real var = to_real(s.c[2000]) / (2000 * f * f);
    EXPECT_LT(abs(mean - to_real(d.mean_density)), Real(1e-3));
    EXPECT_LT(abs(var - to_real(d.variance_density)), Real(1e-3));
  }
}

TEST(Density, OrderingAndFibonacciWordPlacement) {
  const double solus = bitsum_density(EnsembleKind::solus).mean_decimal.to_double();
  const double solus_var = bitsum_density(EnsembleKind::solus).variance_decimal.to_double();
  const double multus = bitsum_density(EnsembleKind::multus).mean_decimal.to_double();
  const double multus_var = bitsum_density(EnsembleKind::multus).variance_decimal.to_double();
  EXPECT_GT(multus, 0.5);
  EXPECT_LT(solus, 0.5);
  EXPECT_GT(multus_var, 0.25);
  EXPECT_LT(solus_var, 0.25);
  const double fib = 1 - 2 / (1 + std::sqrt(5.0));
  EXPECT_GT(fib, solus);
  EXPECT_LT(fib, solus + std::sqrt(solus_var));
}

}  // namespace
}  // namespace cantor
