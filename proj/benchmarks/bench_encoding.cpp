#include <benchmark/benchmark.h>

#include <numbers>

#include "qcest/encoding.hpp"
#include "qcest/entropy.hpp"

namespace {

constexpr double pi = std::numbers::pi;

void BM_EncodingBasis(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  const int n = (total + 1) / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcest::encoding_basis(n, total - n, 1.1));
  }
}
BENCHMARK(BM_EncodingBasis)->DenseRange(2, 10, 2);

void BM_EncodeSuppliedState(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  const int n = (total + 1) / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcest::encode_supplied_state(n, total - n, 1.1, 2.2));
  }
}
BENCHMARK(BM_EncodeSuppliedState)->DenseRange(2, 12, 2);

void BM_SphereAverageState(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qcest::sphere_average_state(qcest::PairKind::antiparallel, order, order));
  }
}
BENCHMARK(BM_SphereAverageState)->Arg(32)->Arg(64);

void BM_CircleEntropy(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qcest::von_neumann_entropy(qcest::circle_average_state(1, 1, 1.1)));
  }
}
BENCHMARK(BM_CircleEntropy);

}  // namespace
