#include <benchmark/benchmark.h>

#include <numbers>

#include "qcest/formulas.hpp"
#include "qcest/locc.hpp"
#include "qcest/povm.hpp"

namespace {

constexpr double pi = std::numbers::pi;

void BM_AverageFidelitySingleCircle(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  const int n = (total + 1) / 2;
  const qcest::Scenario sc(qcest::SingleCircle{n, total - n, pi / 3});
  const auto strategy = qcest::fourier_strategy_single_circle(n, total - n, pi / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcest::average_fidelity(strategy, sc));
  }
}
BENCHMARK(BM_AverageFidelitySingleCircle)->DenseRange(1, 8);

void BM_AverageFidelityOpposite(benchmark::State& state) {
  const qcest::Scenario sc(qcest::OppositeCircles{pi / 3, qcest::PairKind::antiparallel});
  const auto strategy = qcest::opposite_antiparallel_strategy(pi / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcest::average_fidelity(strategy, sc));
  }
}
BENCHMARK(BM_AverageFidelityOpposite);

void BM_MonteCarloFidelity(benchmark::State& state) {
  const qcest::Scenario sc(qcest::SingleCircle{1, 1, pi / 3});
  const auto strategy = qcest::fourier_strategy_single_circle(1, 1, pi / 3);
  const std::int64_t samples = state.range(0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcest::monte_carlo_fidelity(strategy, sc, samples, seed++));
  }
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_MonteCarloFidelity)->Arg(1000)->Arg(10000);

void BM_RandomPovmValidate(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto povm = qcest::random_povm(dim, 2 * dim, seed++);
    benchmark::DoNotOptimize(qcest::validate_povm(povm));
  }
}
BENCHMARK(BM_RandomPovmValidate)->Arg(3)->Arg(4)->Arg(8);

void BM_HillClimbPhases(benchmark::State& state) {
  const qcest::Scenario sc(qcest::TwoCircle{1.1, 0.4});
  const auto povm = qcest::random_povm(3, 5, 7);
  qcest::Strategy strategy{povm, {0.0, 1.0, 2.0, 3.0, 4.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcest::hill_climb_phases(strategy, sc, 40, 11));
  }
}
BENCHMARK(BM_HillClimbPhases);

void BM_LoccMonteCarlo(benchmark::State& state) {
  const std::int64_t samples = state.range(0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcest::locc_average_fidelity_mc(pi / 3, samples, seed++));
  }
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_LoccMonteCarlo)->Arg(10000);

}  // namespace
