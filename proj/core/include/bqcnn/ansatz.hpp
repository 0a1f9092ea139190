#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "bqcnn/gates.hpp"

namespace bqcnn {

/// Two-qubit convolution gate inside a stage. Consumes 15 parameter slots
/// starting at `slot`.
struct ConvGate {
  int qubit_a;
  int qubit_b;
  int slot;
};

/// Pooling rotation: `measured` controls an su2 on `kept` (3 slots at
/// `slot`), then `measured` leaves the live set.
struct PoolOp {
  int measured;
  int kept;
  int slot;
};

/// One convolution(+pooling) layer over a node's live qubits. Conv pairs
/// run in brick order (even-offset pairs then odd-offset pairs); pooling
/// measures odd-position live qubits and keeps even positions.
struct Stage {
  std::vector<int> live;
  std::vector<ConvGate> conv;
  std::vector<PoolOp> pool;
  bool classification = false;
};

/// A node of the branching circuit tree. `child_for_outcome[o]` maps the
/// pooling outcome integer o (bit j = outcome of the j-th measured qubit)
/// to an index into `children`.
struct CircuitNode {
  Stage stage;
  std::vector<int> child_for_outcome;
  std::vector<CircuitNode> children;

  bool is_leaf() const { return children.empty(); }
};

/// Branch fan-out policy for build_bqcnn: full() gives one child per
/// pooling outcome; limit(k) gives k children with outcomes mapped onto
/// them as outcome mod k.
struct BranchPolicy {
  int max_branches = 0; // 0 = full

  static BranchPolicy full() { return {0}; }
  static BranchPolicy limit(int k);
};

/// Tree of convolution/pooling stages whose children are keyed by
/// pooling-measurement outcomes. A QCNN is the degenerate case where every
/// node has exactly one child shared by all outcomes.
class BranchingCircuit {
public:
  int n_qubits() const { return n_qubits_; }
  int parameter_count() const { return n_params_; }
  const CircuitNode& root() const { return root_; }
  const std::string& kind() const { return kind_; }
  int classification_qubit() const { return 0; }

  nlohmann::json to_json() const;

  friend BranchingCircuit build_qcnn(int n_qubits);
  friend BranchingCircuit build_bqcnn(int n_qubits, BranchPolicy policy);
  friend BranchingCircuit build_empty(int n_qubits);

private:
  int n_qubits_ = 0;
  int n_params_ = 0;
  std::string kind_;
  CircuitNode root_;
};

/// Single-branch tree: repeated conv+pool halving until 2 live qubits, then
/// a final conv stage. n must be 2, 4, 8 or 16.
BranchingCircuit build_qcnn(int n_qubits);

/// Same stage geometry with one independently parameterized child per
/// pooling outcome (or `policy.max_branches` children, outcomes assigned
/// cyclically).
BranchingCircuit build_bqcnn(int n_qubits, BranchPolicy policy = BranchPolicy::full());

/// A circuit with no gates; the identity ansatz.
BranchingCircuit build_empty(int n_qubits);

int parameter_count(const BranchingCircuit& circuit);

/// The fully unitary gate list of one root-to-leaf branch (pooling realized
/// as controlled su2), conjugate-transposed and reversed. `path` gives the
/// pooling outcome integer at every branching level.
GateSequence invert_branch(const BranchingCircuit& circuit,
                           std::span<const double> params, std::span<const int> path);

/// Single unitary sequence replacing mid-circuit measurement by
/// computational-basis controls: each branch's gates are conditioned on the
/// pooled qubits matching that branch's outcome pattern. Pooled qubits are
/// never discarded.
GateSequence defer_measurements(const BranchingCircuit& circuit,
                                std::span<const double> params);

/// Expands a parameter vector for `qcnn` onto the matching bQCNN by giving
/// every branch the same stage parameters. Both circuits must share width
/// and stage geometry.
std::vector<double> replicate_parameters(const BranchingCircuit& qcnn,
                                         std::span<const double> qcnn_params,
                                         const BranchingCircuit& bqcnn);

} // namespace bqcnn
