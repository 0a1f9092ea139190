#include "doctest.h"

#include <cmath>

#include "bqcnn/datagen.hpp"
#include "bqcnn/engine.hpp"
#include "bqcnn/optimizer.hpp"

using namespace bqcnn;

TEST_SUITE_BEGIN("datagen");

TEST_CASE("random_parameters is deterministic per seed and sized to the circuit") {
  auto circuit = build_bqcnn(4);
  auto a = random_parameters(circuit, 7);
  auto b = random_parameters(circuit, 7);
  CHECK(a == b);
  CHECK(a.size() == 111);

  auto c = random_parameters(circuit, 8);
  int differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != c[i]) ++differing;
  CHECK(differing >= 1);

  for (double angle : a) {
    CHECK(angle >= 0.0);
    CHECK(angle < 2 * 3.14159265358979323846);
  }
}

TEST_CASE("zero parameters generate exactly the basis states") {
  auto circuit = build_bqcnn(4);
  std::vector<double> zeros(circuit.parameter_count(), 0.0);
  auto ds = artificial_dataset(circuit, zeros);
  REQUIRE(ds.size() == 16);
  for (std::uint64_t x = 0; x < 16; ++x) {
    CHECK(std::abs(ds.items[x].state.amplitude(x) - Complex{1, 0}) < 1e-12);
    CHECK(ds.items[x].label == static_cast<int>(x & 1));
  }
}

TEST_CASE("generated states classify perfectly with the generating parameters") {
  auto circuit = build_bqcnn(4);
  for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
    auto params = random_parameters(circuit, seed);
    auto ds = artificial_dataset(circuit, params);
    for (const auto& item : ds.items)
      CHECK(std::abs(item.label - classify(circuit, params, item.state)) < 1e-9);
    CHECK(mae_cost(circuit, params, ds) < 1e-9);
  }
}

TEST_CASE("the 16 generated states are pairwise orthogonal") {
  auto circuit = build_bqcnn(4);
  auto params = random_parameters(circuit, 123);
  auto ds = artificial_dataset(circuit, params);
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = 0; j < ds.size(); ++j) {
      const Complex g = ds.items[i].state.inner(ds.items[j].state);
      if (i == j)
        CHECK(std::abs(g - Complex{1, 0}) < 1e-8);
      else
        CHECK(std::abs(g) < 1e-8);
    }
}

TEST_CASE("per-item provenance records the basis state and branch path") {
  auto circuit = build_bqcnn(4);
  auto params = random_parameters(circuit, 5);
  auto ds = artificial_dataset(circuit, params);
  CHECK(ds.kind == "artificial");
  CHECK(ds.metadata["params_digest"] == parameter_digest(params));
  for (std::uint64_t x = 0; x < 16; ++x) {
    CHECK(ds.items[x].provenance["basis_state"] == x);
    const auto path = ds.items[x].provenance["branch_path"].get<std::vector<int>>();
    REQUIRE(path.size() == 1);
    // Outcome bits are x's values at the pooled qubits 1 and 3.
    CHECK(path[0] == static_cast<int>(((x >> 1) & 1) | (((x >> 3) & 1) << 1)));
  }
}

TEST_CASE("generation works for the limited-branch policy") {
  auto circuit = build_bqcnn(4, BranchPolicy::limit(2));
  auto params = random_parameters(circuit, 31);
  auto ds = artificial_dataset(circuit, params);
  for (const auto& item : ds.items)
    CHECK(std::abs(item.label - classify(circuit, params, item.state)) < 1e-9);
}

TEST_SUITE_END();
