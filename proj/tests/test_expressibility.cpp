#include "doctest.h"

#include <cmath>

#include "bqcnn/expressibility.hpp"

using namespace bqcnn;

TEST_SUITE_BEGIN("expressibility");

TEST_CASE("haar_bin_mass fixtures") {
  // N=1: uniform density, mass equals width.
  CHECK(haar_bin_mass(0.2, 0.5, 1) == doctest::Approx(0.3).epsilon(1e-12));
  // Full interval normalizes for any N.
  for (int n : {1, 2, 3, 8})
    CHECK(haar_bin_mass(0.0, 1.0, n) == doctest::Approx(1.0).epsilon(1e-12));
  // Closed form at N=3.
  CHECK(haar_bin_mass(0.0, 0.5, 3) == doctest::Approx(0.9921875).epsilon(1e-12));
  CHECK_THROWS_AS(haar_bin_mass(0.5, 0.2, 3), std::invalid_argument);
}

TEST_CASE("haar_bin_mass sums to 1 over any partition") {
  for (int n : {1, 2, 4, 8}) {
    double uniform_total = 0.0;
    const int bins = 500;
    for (int b = 0; b < bins; ++b)
      uniform_total +=
          haar_bin_mass(static_cast<double>(b) / bins,
                        static_cast<double>(b + 1) / bins, n);
    CHECK(std::abs(uniform_total - 1.0) < 1e-12);

    // Uneven partition.
    const double edges[] = {0.0, 1e-4, 0.037, 0.2, 0.5, 0.9, 0.99, 1.0};
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < std::size(edges); ++i)
      total += haar_bin_mass(edges[i], edges[i + 1], n);
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("self-fidelity is 1") {
  auto circuit = build_bqcnn(4);
  Rng rng(60);
  std::vector<double> theta(circuit.parameter_count());
  for (auto& a : theta) a = rng.uniform(0, 6.28);
  CHECK(fidelity(circuit, theta, theta) == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<double> zeros(circuit.parameter_count(), 0.0);
  CHECK(fidelity(circuit, zeros, zeros) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orthogonal rotations give zero fidelity") {
  // Width-2 QCNN is a single su4; Ry(pi) in both outer su2 slots flips
  // |00> to |11>, orthogonal to the zero-angle state.
  auto circuit = build_qcnn(2);
  std::vector<double> theta(15, 0.0);
  std::vector<double> phi(15, 0.0);
  phi[1] = 3.14159265358979323846; // A1 = Ry(pi)
  phi[4] = 3.14159265358979323846; // A2 = Ry(pi)
  CHECK(fidelity(circuit, theta, phi) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fidelity rejects mismatched parameter sizes") {
  auto circuit = build_qcnn(4);
  std::vector<double> theta(circuit.parameter_count(), 0.0);
  std::vector<double> phi(3, 0.0);
  CHECK_THROWS_AS(fidelity(circuit, theta, phi), std::invalid_argument);
}

TEST_CASE("empty circuit concentrates all mass in the last bin") {
  auto circuit = build_empty(2);
  auto result = estimate(circuit, 200, 50, 7);
  CHECK(result.histogram.counts[49] == 200);
  const double q_last = haar_bin_mass(49.0 / 50.0, 1.0, 2);
  CHECK(result.kl == doctest::Approx(std::log(1.0 / q_last)).epsilon(1e-9));
  CHECK(result.kl > 5.0);
}

TEST_CASE("a single su2 nearly Haar-covers one qubit") {
  // The smallest tree ansatz is width 2, so histogram one-qubit su2 states
  // directly against the N=1 Haar masses.
  Rng rng(61);
  const int n_pairs = 100000, n_bins = 75;
  std::vector<std::int64_t> counts(n_bins, 0);
  for (int i = 0; i < n_pairs; ++i) {
    double a1[3] = {rng.uniform(0, 6.283185307179586),
                    rng.uniform(0, 6.283185307179586),
                    rng.uniform(0, 6.283185307179586)};
    double a2[3] = {rng.uniform(0, 6.283185307179586),
                    rng.uniform(0, 6.283185307179586),
                    rng.uniform(0, 6.283185307179586)};
    Statevector s1(1), s2(1);
    const int t[1] = {0};
    s1.apply_gate(su2(a1), t);
    s2.apply_gate(su2(a2), t);
    const double f = std::norm(s1.inner(s2));
    int b = static_cast<int>(f * n_bins);
    if (b >= n_bins) b = n_bins - 1;
    ++counts[b];
  }
  double kl = 0.0;
  for (int b = 0; b < n_bins; ++b) {
    if (counts[b] == 0) continue;
    const double p = static_cast<double>(counts[b]) / n_pairs;
    const double q = haar_bin_mass(static_cast<double>(b) / n_bins,
                                   static_cast<double>(b + 1) / n_bins, 1);
    kl += p * std::log(p / q);
  }
  CHECK(kl < 0.02);
}

TEST_CASE("estimate is deterministic for any thread count") {
  auto circuit = build_bqcnn(4);
  auto r1 = estimate(circuit, 300, 75, 99, 1);
  auto r2 = estimate(circuit, 300, 75, 99, 4);
  CHECK(r1.kl == r2.kl);
  CHECK(r1.histogram.counts == r2.histogram.counts);

  auto r3 = estimate(circuit, 300, 75, 100, 1);
  CHECK(r1.kl != r3.kl); // different seed, different draw
}

TEST_CASE("KL is non-negative") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    auto result = estimate(build_qcnn(4), 500, 75, seed);
    CHECK(result.kl >= 0.0);
    CHECK(result.histogram.n_samples == 500);
    std::int64_t total = 0;
    for (auto c : result.histogram.counts) total += c;
    CHECK(total == 500);
  }
}

TEST_SUITE_END();
