#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bqcnn/ansatz.hpp"
#include "bqcnn/dataset.hpp"
#include "bqcnn/engine.hpp"

namespace bqcnn {

/// Fixed-point bitstring encoding of a full angle vector. Each angle is
/// `bits_per_angle` bits over [0, 2pi), stored least significant bit first.
struct Chromosome {
  std::vector<std::uint8_t> bits; // values 0/1
  int bits_per_angle = 8;

  int n_angles() const { return static_cast<int>(bits.size()) / bits_per_angle; }
};

struct GAConfig {
  int population_size = 128;
  double elite_fraction = 0.1;
  double mutation_rate = -1.0; // < 0: defaults to 1 / chromosome length
  int bits_per_angle = 8;
  int generations = 500;
  std::uint64_t seed = 0;
  int shots = 0; // 0 = exact cost evaluation
  int n_threads = 0;
};

struct GenerationStats {
  double best_cost;
  double mean_cost;
  std::uint64_t best_digest;
};

struct TrainingHistory {
  std::vector<GenerationStats> generations;
};

struct TrainingResult {
  std::vector<double> best_params;
  double best_cost = 1.0;
  Chromosome best_chromosome;
  TrainingHistory history;
};

/// Mean absolute error between labels and exact classification
/// probabilities; correctness = 1 - cost.
double mae_cost(const BranchingCircuit& circuit, std::span<const double> params,
                const LabeledDataset& dataset);

/// Shot-based variant; per-item streams derive from (seed, item index).
double mae_cost_shots(const BranchingCircuit& circuit, std::span<const double> params,
                      const LabeledDataset& dataset, int shots, std::uint64_t seed);

Chromosome encode(std::span<const double> angles, int bits_per_angle);
std::vector<double> decode(const Chromosome& chromosome);

/// Single-point crossover with the cut chosen uniformly at random among
/// angle boundaries (never inside an angle's bit field). Parents with a
/// single angle are returned unchanged.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            Rng& rng);

/// Flips each bit independently with probability `rate`.
Chromosome mutate(const Chromosome& chromosome, double rate, Rng& rng);

/// Next generation: the ceil(elite_fraction * N) lowest-cost chromosomes
/// are carried unchanged (returned first, ascending cost), the remainder
/// filled by crossover of parents drawn proportionally to (1 - cost) and
/// then mutated.
std::vector<Chromosome> evolve(const std::vector<Chromosome>& population,
                               std::span<const double> costs, const GAConfig& config,
                               Rng& rng);

/// Cost callback for train_generic: angle vector and a derived evaluation
/// seed (only meaningful for stochastic costs).
using CostFunction = std::function<double(std::span<const double>, std::uint64_t)>;

/// Runs the GA against an arbitrary cost over `n_angles` angles.
TrainingResult train_generic(int n_angles, const CostFunction& cost,
                             const GAConfig& config);

/// Runs the GA against mae_cost on the given circuit and dataset.
TrainingResult train(const BranchingCircuit& circuit, const LabeledDataset& dataset,
                     const GAConfig& config);

std::uint64_t chromosome_digest(const Chromosome& chromosome);

} // namespace bqcnn
