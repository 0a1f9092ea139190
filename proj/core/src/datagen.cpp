#include "bqcnn/datagen.hpp"

#include <cstring>
#include <numbers>

namespace bqcnn {

std::vector<double> random_parameters(const BranchingCircuit& circuit,
                                      std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> params(circuit.parameter_count());
  for (auto& p : params) p = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return params;
}

std::uint64_t parameter_digest(std::span<const double> params) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (double v : params) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    for (int b = 0; b < 8; ++b) {
      hash ^= (bits >> (8 * b)) & 0xffULL;
      hash *= 0x100000001b3ULL;
    }
  }
  return hash;
}

namespace {

/// Pooling outcomes along the branch selected by basis state x: at every
/// level the outcome bits are x's bits at that node's measured qubits.
std::vector<int> path_for_basis_state(const BranchingCircuit& circuit,
                                      std::uint64_t x) {
  std::vector<int> path;
  const CircuitNode* node = &circuit.root();
  while (!node->is_leaf()) {
    int outcome = 0;
    for (std::size_t j = 0; j < node->stage.pool.size(); ++j)
      outcome |= static_cast<int>((x >> node->stage.pool[j].measured) & 1) << j;
    path.push_back(outcome);
    node = &node->children[node->child_for_outcome[outcome]];
  }
  return path;
}

} // namespace

LabeledDataset artificial_dataset(const BranchingCircuit& circuit,
                                  std::span<const double> params) {
  const int n = circuit.n_qubits();
  LabeledDataset ds;
  ds.n_qubits = n;
  ds.kind = "artificial";
  ds.metadata = {{"params", std::vector<double>(params.begin(), params.end())},
                 {"params_digest", parameter_digest(params)},
                 {"ansatz", circuit.kind()}};

  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < dim; ++x) {
    std::vector<int> path = path_for_basis_state(circuit, x);
    Statevector state = Statevector::basis_state(n, x);
    apply_sequence(state, invert_branch(circuit, params, path));
    ds.items.push_back({std::move(state), static_cast<int>(x & 1),
                        {{"basis_state", x}, {"branch_path", path}}});
  }
  return ds;
}

} // namespace bqcnn
