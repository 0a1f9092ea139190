#include "bqcnn/engine.hpp"

#include <stdexcept>
#include <string>

namespace bqcnn {

namespace {

void check_input(const BranchingCircuit& circuit, const Statevector& input) {
  if (input.n_qubits() != circuit.n_qubits())
    throw std::invalid_argument("input width " + std::to_string(input.n_qubits()) +
                                " does not match circuit width " +
                                std::to_string(circuit.n_qubits()));
}

void build_gates(const CircuitNode& node, std::span<const double> params,
                 std::unordered_map<int, Matrix>& gates) {
  for (const auto& g : node.stage.conv)
    gates.emplace(g.slot, su4(params.subspan(g.slot, kSu4AngleCount)));
  for (const auto& p : node.stage.pool)
    gates.emplace(p.slot, su2(params.subspan(p.slot, kSu2AngleCount)));
  for (const auto& child : node.children) build_gates(child, params, gates);
}

} // namespace

CompiledCircuit::CompiledCircuit(const BranchingCircuit& circuit,
                                 std::span<const double> params)
    : circuit_(&circuit) {
  if (static_cast<int>(params.size()) != circuit.parameter_count())
    throw std::invalid_argument("parameter vector has length " +
                                std::to_string(params.size()) + ", circuit needs " +
                                std::to_string(circuit.parameter_count()));
  build_gates(circuit.root(), params, gates_);
}

namespace {

void apply_conv(Statevector& state, const Stage& stage, const CompiledCircuit& gates) {
  for (const auto& g : stage.conv) {
    const int targets[2] = {g.qubit_a, g.qubit_b};
    state.apply_gate(gates.gate_at(g.slot), targets);
  }
}

void enumerate(const CompiledCircuit& gates, const CircuitNode& node,
               Statevector state, double path_prob, std::vector<int>& path,
               ClassificationResult& out) {
  apply_conv(state, node.stage, gates);
  if (node.is_leaf()) {
    const double p1 = state.probability_one(gates.circuit().classification_qubit());
    out.p1 += path_prob * p1;
    out.per_branch.push_back({path, path_prob, p1});
    return;
  }

  const auto& pool = node.stage.pool;
  const int n_outcomes = static_cast<int>(node.child_for_outcome.size());
  for (int o = 0; o < n_outcomes; ++o) {
    Statevector branch = state;
    double prob = 1.0;
    for (std::size_t j = 0; j < pool.size() && prob > 0.0; ++j)
      prob *= branch.project_qubit(pool[j].measured, (o >> j) & 1);
    if (prob <= kBranchCutoff) continue;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (((o >> j) & 1) == 0) continue;
      const int target[1] = {pool[j].kept};
      branch.apply_gate(gates.gate_at(pool[j].slot), target);
    }
    path.push_back(o);
    enumerate(gates, node.children[node.child_for_outcome[o]], std::move(branch),
              path_prob * prob, path, out);
    path.pop_back();
  }
}

} // namespace

ClassificationResult CompiledCircuit::run_exact(const Statevector& input) const {
  check_input(*circuit_, input);
  ClassificationResult out;
  std::vector<int> path;
  enumerate(*this, circuit_->root(), input, 1.0, path, out);
  return out;
}

TrajectoryRecord CompiledCircuit::run_trajectory(const Statevector& input,
                                                 Rng& rng) const {
  check_input(*circuit_, input);
  TrajectoryRecord rec;
  Statevector state = input;
  const CircuitNode* node = &circuit_->root();
  while (true) {
    apply_conv(state, node->stage, *this);
    if (node->is_leaf()) break;
    int outcome = 0;
    double prob = 1.0;
    for (std::size_t j = 0; j < node->stage.pool.size(); ++j) {
      const auto& p = node->stage.pool[j];
      const double p1 = state.probability_one(p.measured);
      const int bit = state.measure_qubit(p.measured, rng);
      prob *= bit ? p1 : 1.0 - p1;
      outcome |= bit << j;
      if (bit) {
        const int target[1] = {p.kept};
        state.apply_gate(gate_at(p.slot), target);
      }
    }
    rec.branch_path.push_back(outcome);
    rec.level_probabilities.push_back(prob);
    node = &node->children[node->child_for_outcome[outcome]];
  }
  rec.classification_bit =
      state.measure_qubit(circuit_->classification_qubit(), rng);
  return rec;
}

double CompiledCircuit::classify(const Statevector& input) const {
  return run_exact(input).p1;
}

ClassificationResult run_exact(const BranchingCircuit& circuit,
                               std::span<const double> params,
                               const Statevector& input) {
  return CompiledCircuit(circuit, params).run_exact(input);
}

TrajectoryRecord run_trajectory(const BranchingCircuit& circuit,
                                std::span<const double> params,
                                const Statevector& input, Rng& rng) {
  return CompiledCircuit(circuit, params).run_trajectory(input, rng);
}

double classify(const BranchingCircuit& circuit, std::span<const double> params,
                const Statevector& input) {
  return CompiledCircuit(circuit, params).classify(input);
}

double classify_shots(const BranchingCircuit& circuit, std::span<const double> params,
                      const Statevector& input, int shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shot count must be >= 1");
  CompiledCircuit compiled(circuit, params);
  long ones = 0;
  for (int s = 0; s < shots; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    ones += compiled.run_trajectory(input, rng).classification_bit;
  }
  return static_cast<double>(ones) / shots;
}

} // namespace bqcnn
