#pragma once

#include <cstdint>
#include <random>

namespace bqcnn {

/// Derives an independent stream seed from a master seed and a stream index.
/// Used wherever work items are fanned out (dataset items, GA individuals,
/// fidelity pairs) so that results do not depend on evaluation order or
/// worker count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 over the combined value
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic random stream. Thin wrapper over mt19937_64 with
/// hand-rolled uniform conversions so that sequences depend only on the
/// seed, not on standard-library distribution internals.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_int(std::uint64_t n) { return engine_() % n; }

  bool bernoulli(double p) { return uniform() < p; }

private:
  std::mt19937_64 engine_;
};

} // namespace bqcnn
