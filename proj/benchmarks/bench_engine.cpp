#include <benchmark/benchmark.h>

#include "bqcnn/datagen.hpp"
#include "bqcnn/engine.hpp"
#include "bqcnn/expressibility.hpp"
#include "bqcnn/optimizer.hpp"

namespace {

void BM_run_exact_bqcnn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto circuit = bqcnn::build_bqcnn(n);
  auto params = bqcnn::random_parameters(circuit, 7);
  bqcnn::Statevector input(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bqcnn::run_exact(circuit, params, input));
  }
}
BENCHMARK(BM_run_exact_bqcnn)->Arg(4)->Arg(8);

void BM_run_trajectory_bqcnn4(benchmark::State& state) {
  auto circuit = bqcnn::build_bqcnn(4);
  auto params = bqcnn::random_parameters(circuit, 8);
  bqcnn::Statevector input(4);
  std::uint64_t shot = 0;
  for (auto _ : state) {
    bqcnn::Rng rng(bqcnn::derive_seed(9, shot++));
    benchmark::DoNotOptimize(bqcnn::run_trajectory(circuit, params, input, rng));
  }
}
BENCHMARK(BM_run_trajectory_bqcnn4);

void BM_deferred_fidelity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto circuit = bqcnn::build_bqcnn(n);
  auto theta = bqcnn::random_parameters(circuit, 10);
  auto phi = bqcnn::random_parameters(circuit, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bqcnn::fidelity(circuit, theta, phi));
  }
}
BENCHMARK(BM_deferred_fidelity)->Arg(4)->Arg(8);

void BM_mae_cost_artificial(benchmark::State& state) {
  auto circuit = bqcnn::build_bqcnn(4);
  auto gen = bqcnn::random_parameters(circuit, 12);
  auto ds = bqcnn::artificial_dataset(circuit, gen);
  auto trial = bqcnn::random_parameters(circuit, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bqcnn::mae_cost(circuit, trial, ds));
  }
}
BENCHMARK(BM_mae_cost_artificial);

} // namespace
