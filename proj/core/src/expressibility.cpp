#include "bqcnn/expressibility.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bqcnn/parallel.hpp"

namespace bqcnn {

int FidelityHistogram::bin_of(double fidelity) const {
  int b = static_cast<int>(fidelity * n_bins);
  if (b < 0) b = 0;
  if (b >= n_bins) b = n_bins - 1;
  return b;
}

namespace {

Statevector prepared_state(const BranchingCircuit& circuit,
                           std::span<const double> params) {
  Statevector s(circuit.n_qubits());
  apply_sequence(s, defer_measurements(circuit, params));
  return s;
}

std::vector<double> random_angles(Rng& rng, int count) {
  std::vector<double> angles(count);
  for (auto& a : angles) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return angles;
}

} // namespace

double fidelity(const BranchingCircuit& circuit, std::span<const double> theta,
                std::span<const double> phi) {
  Statevector a = prepared_state(circuit, theta);
  Statevector b = prepared_state(circuit, phi);
  return std::norm(a.inner(b));
}

double haar_bin_mass(double lo, double hi, int n_qubits) {
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0))
    throw std::invalid_argument("haar_bin_mass requires 0 <= lo < hi <= 1");
  const double expo = std::pow(2.0, n_qubits) - 1.0;
  const auto cdf = [&](double f) { return 1.0 - std::pow(1.0 - f, expo); };
  return cdf(hi) - cdf(lo);
}

namespace {

/// ln of haar_bin_mass, stable where (1-lo)^expo underflows:
/// ln q = expo*ln(1-lo) + ln(1 - ((1-hi)/(1-lo))^expo).
double haar_log_bin_mass(double lo, double hi, int n_qubits) {
  const double expo = std::pow(2.0, n_qubits) - 1.0;
  if (lo == 0.0 && hi == 1.0) return 0.0;
  if (hi >= 1.0) return expo * std::log1p(-lo);
  const double ratio = (1.0 - hi) / (1.0 - lo);
  return expo * std::log1p(-lo) + std::log1p(-std::pow(ratio, expo));
}

} // namespace

ExpressibilityResult estimate(const BranchingCircuit& circuit, std::int64_t n_pairs,
                              int n_bins, std::uint64_t seed, int n_threads) {
  if (n_pairs < 1) throw std::invalid_argument("n_pairs must be >= 1");
  if (n_bins < 2) throw std::invalid_argument("n_bins must be >= 2");

  const int n_params = circuit.parameter_count();
  std::vector<double> fidelities(static_cast<std::size_t>(n_pairs));
  parallel_for(
      static_cast<std::size_t>(n_pairs),
      [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        std::vector<double> theta = random_angles(rng, n_params);
        std::vector<double> phi = random_angles(rng, n_params);
        fidelities[i] = fidelity(circuit, theta, phi);
      },
      n_threads);

  ExpressibilityResult out;
  out.histogram.n_bins = n_bins;
  out.histogram.n_samples = n_pairs;
  out.histogram.counts.assign(n_bins, 0);
  for (double f : fidelities) ++out.histogram.counts[out.histogram.bin_of(f)];

  double kl = 0.0;
  for (int b = 0; b < n_bins; ++b) {
    const std::int64_t c = out.histogram.counts[b];
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(n_pairs);
    const double log_q = haar_log_bin_mass(out.histogram.edge(b),
                                           out.histogram.edge(b + 1),
                                           circuit.n_qubits());
    kl += p * (std::log(p) - log_q);
  }
  out.kl = kl;
  return out;
}

} // namespace bqcnn
