#include "bqcnn/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "bqcnn/parallel.hpp"

namespace bqcnn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSelectionFloor = 1e-6;

void check_config(const GAConfig& c) {
  if (c.population_size < 2) throw std::invalid_argument("population must be >= 2");
  if (c.elite_fraction < 0.0 || c.elite_fraction >= 1.0)
    throw std::invalid_argument("elite fraction must be in [0, 1)");
  if (c.mutation_rate > 1.0)
    throw std::invalid_argument("mutation rate must be <= 1");
  if (c.bits_per_angle < 1 || c.bits_per_angle > 24)
    throw std::invalid_argument("bits per angle must be in [1, 24]");
  if (c.generations < 1) throw std::invalid_argument("need at least 1 generation");
  if (c.shots < 0) throw std::invalid_argument("shot count must be >= 0");
}

std::vector<std::size_t> sorted_indices_by_cost(std::span<const double> costs) {
  std::vector<std::size_t> order(costs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return costs[i] < costs[j]; });
  return order;
}

} // namespace

double mae_cost(const BranchingCircuit& circuit, std::span<const double> params,
                const LabeledDataset& dataset) {
  if (dataset.items.empty()) throw std::invalid_argument("dataset is empty");
  CompiledCircuit compiled(circuit, params);
  double total = 0.0;
  for (const auto& item : dataset.items)
    total += std::abs(item.label - compiled.classify(item.state));
  return total / static_cast<double>(dataset.size());
}

double mae_cost_shots(const BranchingCircuit& circuit, std::span<const double> params,
                      const LabeledDataset& dataset, int shots, std::uint64_t seed) {
  if (dataset.items.empty()) throw std::invalid_argument("dataset is empty");
  CompiledCircuit compiled(circuit, params);
  double total = 0.0;
  for (std::size_t i = 0; i < dataset.items.size(); ++i) {
    const auto& item = dataset.items[i];
    const std::uint64_t item_seed = derive_seed(seed, i);
    long ones = 0;
    for (int s = 0; s < shots; ++s) {
      Rng rng(derive_seed(item_seed, static_cast<std::uint64_t>(s)));
      ones += compiled.run_trajectory(item.state, rng).classification_bit;
    }
    total += std::abs(item.label - static_cast<double>(ones) / shots);
  }
  return total / static_cast<double>(dataset.size());
}

Chromosome encode(std::span<const double> angles, int bits_per_angle) {
  if (bits_per_angle < 1 || bits_per_angle > 24)
    throw std::invalid_argument("bits per angle must be in [1, 24]");
  Chromosome c;
  c.bits_per_angle = bits_per_angle;
  c.bits.resize(angles.size() * static_cast<std::size_t>(bits_per_angle));
  const double levels = static_cast<double>(std::uint64_t{1} << bits_per_angle);
  for (std::size_t a = 0; a < angles.size(); ++a) {
    double wrapped = std::fmod(angles[a], kTwoPi);
    if (wrapped < 0) wrapped += kTwoPi;
    auto value = static_cast<std::uint64_t>(std::llround(wrapped / kTwoPi * levels));
    value &= (std::uint64_t{1} << bits_per_angle) - 1; // 2pi wraps to 0
    for (int b = 0; b < bits_per_angle; ++b)
      c.bits[a * bits_per_angle + b] = static_cast<std::uint8_t>((value >> b) & 1);
  }
  return c;
}

std::vector<double> decode(const Chromosome& c) {
  if (c.bits_per_angle < 1 || c.bits.size() % c.bits_per_angle != 0)
    throw std::invalid_argument("chromosome length is not a multiple of bits_per_angle");
  const std::size_t n = c.bits.size() / c.bits_per_angle;
  const double levels = static_cast<double>(std::uint64_t{1} << c.bits_per_angle);
  std::vector<double> angles(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint64_t value = 0;
    for (int b = 0; b < c.bits_per_angle; ++b)
      value |= static_cast<std::uint64_t>(c.bits[a * c.bits_per_angle + b] & 1) << b;
    angles[a] = kTwoPi * static_cast<double>(value) / levels;
  }
  return angles;
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            Rng& rng) {
  if (a.bits.size() != b.bits.size() || a.bits_per_angle != b.bits_per_angle)
    throw std::invalid_argument("crossover parents have mismatched encodings");
  const int n_angles = a.n_angles();
  if (n_angles < 2) return {a, b};
  const std::size_t k =
      (rng.uniform_int(static_cast<std::uint64_t>(n_angles - 1)) + 1) *
      static_cast<std::size_t>(a.bits_per_angle);
  Chromosome c1 = a, c2 = b;
  for (std::size_t i = k; i < a.bits.size(); ++i) {
    c1.bits[i] = b.bits[i];
    c2.bits[i] = a.bits[i];
  }
  return {std::move(c1), std::move(c2)};
}

Chromosome mutate(const Chromosome& chromosome, double rate, Rng& rng) {
  if (rate < 0.0 || rate > 1.0)
    throw std::invalid_argument("mutation rate must be in [0, 1]");
  Chromosome out = chromosome;
  for (auto& bit : out.bits)
    if (rng.bernoulli(rate)) bit ^= 1;
  return out;
}

std::vector<Chromosome> evolve(const std::vector<Chromosome>& population,
                               std::span<const double> costs, const GAConfig& config,
                               Rng& rng) {
  check_config(config);
  const std::size_t n = population.size();
  if (n != static_cast<std::size_t>(config.population_size))
    throw std::invalid_argument("population size does not match config");
  if (costs.size() != n)
    throw std::invalid_argument("one cost per individual required");

  const auto order = sorted_indices_by_cost(costs);
  const auto n_elite = static_cast<std::size_t>(
      std::ceil(config.elite_fraction * static_cast<double>(n)));

  std::vector<Chromosome> next;
  next.reserve(n);
  for (std::size_t e = 0; e < n_elite; ++e) next.push_back(population[order[e]]);

  std::vector<double> weights(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = std::max(1.0 - costs[i], kSelectionFloor);
    total += weights[i];
  }
  auto draw_parent = [&]() -> const Chromosome& {
    double r = rng.uniform() * total;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      r -= weights[i];
      if (r < 0) return population[i];
    }
    return population[n - 1];
  };

  const double rate = config.mutation_rate >= 0.0
                          ? config.mutation_rate
                          : 1.0 / static_cast<double>(population[0].bits.size());
  while (next.size() < n) {
    auto [c1, c2] = crossover(draw_parent(), draw_parent(), rng);
    next.push_back(mutate(c1, rate, rng));
    if (next.size() < n) next.push_back(mutate(c2, rate, rng));
  }
  return next;
}

TrainingResult train_generic(int n_angles, const CostFunction& cost,
                             const GAConfig& config) {
  check_config(config);
  if (n_angles < 1) throw std::invalid_argument("need at least one angle");

  const std::size_t pop_size = static_cast<std::size_t>(config.population_size);
  const std::size_t length =
      static_cast<std::size_t>(n_angles) * config.bits_per_angle;

  Rng init_rng(derive_seed(config.seed, 0x1417));
  std::vector<Chromosome> population(pop_size);
  for (auto& c : population) {
    c.bits_per_angle = config.bits_per_angle;
    c.bits.resize(length);
    for (auto& b : c.bits) b = static_cast<std::uint8_t>(init_rng.uniform_int(2));
  }

  Rng evolve_rng(derive_seed(config.seed, 0xe701));
  const std::uint64_t eval_master = derive_seed(config.seed, 0xc057);

  const auto n_elite = static_cast<std::size_t>(
      std::ceil(config.elite_fraction * static_cast<double>(pop_size)));

  TrainingResult result;
  std::vector<double> costs(pop_size, 0.0);
  std::vector<char> cached(pop_size, 0);

  for (int gen = 0; gen < config.generations; ++gen) {
    parallel_for(
        pop_size,
        [&](std::size_t i) {
          if (cached[i]) return;
          const std::vector<double> angles = decode(population[i]);
          costs[i] = cost(angles, derive_seed(eval_master,
                                              static_cast<std::uint64_t>(gen) *
                                                      pop_size +
                                                  i));
        },
        config.n_threads);

    const auto order = sorted_indices_by_cost(costs);
    const std::size_t best = order[0];
    const double mean =
        std::accumulate(costs.begin(), costs.end(), 0.0) / static_cast<double>(pop_size);
    result.history.generations.push_back(
        {costs[best], mean, chromosome_digest(population[best])});

    if (costs[best] < result.best_cost ||
        result.best_chromosome.bits.empty()) {
      result.best_cost = costs[best];
      result.best_chromosome = population[best];
    }

    if (gen + 1 == config.generations) break;

    std::vector<double> sorted_costs(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) sorted_costs[i] = costs[order[i]];
    population = evolve(population, costs, config, evolve_rng);
    // Elites come back first in ascending cost order; keep their costs.
    std::fill(cached.begin(), cached.end(), 0);
    for (std::size_t e = 0; e < n_elite; ++e) {
      costs[e] = sorted_costs[e];
      cached[e] = 1;
    }
  }

  result.best_params = decode(result.best_chromosome);
  return result;
}

TrainingResult train(const BranchingCircuit& circuit, const LabeledDataset& dataset,
                     const GAConfig& config) {
  if (dataset.n_qubits != circuit.n_qubits())
    throw std::invalid_argument("dataset width does not match circuit width");
  if (dataset.items.empty()) throw std::invalid_argument("dataset is empty");
  CostFunction cost;
  if (config.shots > 0) {
    cost = [&](std::span<const double> params, std::uint64_t eval_seed) {
      return mae_cost_shots(circuit, params, dataset, config.shots, eval_seed);
    };
  } else {
    cost = [&](std::span<const double> params, std::uint64_t) {
      return mae_cost(circuit, params, dataset);
    };
  }
  return train_generic(circuit.parameter_count(), cost, config);
}

std::uint64_t chromosome_digest(const Chromosome& chromosome) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : chromosome.bits) {
    hash ^= b;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

} // namespace bqcnn
