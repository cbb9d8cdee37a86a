#include <benchmark/benchmark.h>

#include "cantor/moments.hpp"
#include "cantor/orderstats.hpp"

namespace {

using cantor::EnsembleKind;
using cantor::Rational;

void BM_CantorMoments(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cantor::cantor_moments(Rational(1, 3), order));
}
BENCHMARK(BM_CantorMoments)->Arg(4)->Arg(16)->Arg(64);

void BM_SolusMoments(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cantor::solus_moments(Rational(1, 3), order));
}
BENCHMARK(BM_SolusMoments)->Arg(4)->Arg(16);

void BM_MultusMoments(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cantor::multus_moments(Rational(1, 3), order));
}
BENCHMARK(BM_MultusMoments)->Arg(4)->Arg(16);

// Block recursion over string length, all three ensembles.
void BM_FiniteMoments(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    for (auto kind : {EnsembleKind::unconstrained, EnsembleKind::solus, EnsembleKind::multus}) {
      benchmark::DoNotOptimize(cantor::finite_moments(kind, Rational(1, 3), m, 4));
    }
  }
}
BENCHMARK(BM_FiniteMoments)->Arg(16)->Arg(64)->Arg(256);

void BM_CantorOrderStats(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cantor::cantor_order_stats(Rational(1, 3), n));
}
BENCHMARK(BM_CantorOrderStats)->Arg(8)->Arg(32);

}  // namespace
