#include <benchmark/benchmark.h>

#include "bqcnn/gates.hpp"
#include "bqcnn/statevector.hpp"

namespace {

std::vector<double> random_angles(bqcnn::Rng& rng, int count) {
  std::vector<double> v(count);
  for (auto& a : v) a = rng.uniform(0.0, 6.283185307179586);
  return v;
}

void BM_apply_su4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  bqcnn::Rng rng(1);
  bqcnn::Statevector s(n);
  bqcnn::Matrix gate = bqcnn::su4(random_angles(rng, 15));
  const int targets[2] = {0, n / 2};
  for (auto _ : state) {
    s.apply_gate(gate, targets);
    benchmark::DoNotOptimize(s);
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(BM_apply_su4)->DenseRange(4, 16, 4)->Complexity();

void BM_apply_controlled_su2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  bqcnn::Rng rng(2);
  bqcnn::Statevector s(n);
  bqcnn::Matrix gate = bqcnn::su2(random_angles(rng, 3));
  const int targets[1] = {0};
  const bqcnn::ControlBit controls[2] = {{1, 1}, {n - 1, 0}};
  for (auto _ : state) {
    s.apply_controlled(gate, targets, controls);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_apply_controlled_su2)->DenseRange(4, 16, 4);

void BM_build_su4(benchmark::State& state) {
  bqcnn::Rng rng(3);
  auto angles = random_angles(rng, 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bqcnn::su4(angles));
  }
}
BENCHMARK(BM_build_su4);

void BM_expectation_string_order(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  bqcnn::Rng rng(4);
  bqcnn::Statevector s(n);
  bqcnn::PauliString op;
  op.add(0, bqcnn::Pauli::Z);
  op.add(1, bqcnn::Pauli::Y);
  for (int i = 2; i <= n - 3; ++i) op.add(i, bqcnn::Pauli::X);
  op.add(n - 2, bqcnn::Pauli::Y);
  op.add(n - 1, bqcnn::Pauli::Z);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bqcnn::expectation(s, op));
  }
}
BENCHMARK(BM_expectation_string_order)->DenseRange(4, 16, 4);

} // namespace
