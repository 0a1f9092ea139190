#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bqcnn/ansatz.hpp"

namespace bqcnn {

/// Histogram of state fidelities over a uniform partition of [0, 1].
/// Bin i covers [i/n_bins, (i+1)/n_bins); the last bin also includes F = 1.
struct FidelityHistogram {
  int n_bins = 0;
  std::vector<std::int64_t> counts;
  std::int64_t n_samples = 0;

  double edge(int i) const { return static_cast<double>(i) / n_bins; }
  int bin_of(double fidelity) const;
};

/// F = |<0| U(theta)^dagger U(phi) |0>|^2 where U is the circuit unitarized
/// via defer_measurements.
double fidelity(const BranchingCircuit& circuit, std::span<const double> theta,
                std::span<const double> phi);

/// Probability mass the Haar fidelity distribution assigns to [lo, hi):
/// CDF(F) = 1 - (1-F)^(2^N - 1).
double haar_bin_mass(double lo, double hi, int n_qubits);

struct ExpressibilityResult {
  double kl = 0.0;
  FidelityHistogram histogram;
};

/// Samples n_pairs random (theta, phi) pairs with every angle uniform on
/// [0, 2pi), bins the fidelities, and returns the KL divergence from the
/// Haar fidelity distribution. Lower is more expressive. Deterministic
/// given (seed, n_pairs, n_bins) for any thread count.
ExpressibilityResult estimate(const BranchingCircuit& circuit, std::int64_t n_pairs,
                              int n_bins, std::uint64_t seed, int n_threads = 0);

} // namespace bqcnn
