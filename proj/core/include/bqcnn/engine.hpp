#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "bqcnn/ansatz.hpp"
#include "bqcnn/rng.hpp"
#include "bqcnn/statevector.hpp"

namespace bqcnn {

/// Branches with path probability below this are pruned from enumeration.
inline constexpr double kBranchCutoff = 1e-14;

/// One root-to-leaf outcome of exact enumeration.
struct BranchOutcome {
  std::vector<int> path;    // pooling outcome integer per level
  double probability;       // joint probability of this path
  double p1_given_path;     // P(classification qubit = 1 | path)
};

struct ClassificationResult {
  double p1 = 0.0;
  std::vector<BranchOutcome> per_branch; // depth-first order
};

struct TrajectoryRecord {
  std::vector<int> branch_path;
  int classification_bit = 0;
  std::vector<double> level_probabilities; // joint outcome probability per level
};

/// A circuit bound to one parameter vector, with every gate matrix built
/// once. Cheap to reuse across many input states (the cost-function hot
/// path); the circuit must outlive it.
class CompiledCircuit {
public:
  CompiledCircuit(const BranchingCircuit& circuit, std::span<const double> params);

  const BranchingCircuit& circuit() const { return *circuit_; }

  ClassificationResult run_exact(const Statevector& input) const;
  TrajectoryRecord run_trajectory(const Statevector& input, Rng& rng) const;
  double classify(const Statevector& input) const;

  const Matrix& gate_at(int slot) const { return gates_.at(slot); }

private:
  const BranchingCircuit* circuit_;
  std::unordered_map<int, Matrix> gates_; // parameter slot -> built matrix
};

/// Depth-first enumeration over all pooling outcomes: projects (without
/// sampling) onto each outcome, recurses into the mapped child, and
/// accumulates the classification-qubit distribution. Deterministic.
ClassificationResult run_exact(const BranchingCircuit& circuit,
                               std::span<const double> params,
                               const Statevector& input);

/// Samples one stochastic trajectory: pooling outcomes via projective
/// measurement, classically conditioned rotations, final readout.
TrajectoryRecord run_trajectory(const BranchingCircuit& circuit,
                                std::span<const double> params,
                                const Statevector& input, Rng& rng);

/// run_exact(...).p1.
double classify(const BranchingCircuit& circuit, std::span<const double> params,
                const Statevector& input);

/// Conventional shot count for realism runs; exact probabilities are the
/// default everywhere else.
inline constexpr int kDefaultShots = 512;

/// Shot-based estimate of p1 from `shots` independent trajectories with
/// per-shot seeds derived from `seed`.
double classify_shots(const BranchingCircuit& circuit, std::span<const double> params,
                      const Statevector& input, int shots = kDefaultShots,
                      std::uint64_t seed = 0);

} // namespace bqcnn
