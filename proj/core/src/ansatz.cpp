#include "bqcnn/ansatz.hpp"

#include <stdexcept>
#include <string>

namespace bqcnn {

namespace {

Stage make_stage(const std::vector<int>& live, int& slot) {
  Stage st;
  st.live = live;
  const int m = static_cast<int>(live.size());
  for (int i = 0; i + 1 < m; i += 2) {
    st.conv.push_back({live[i], live[i + 1], slot});
    slot += kSu4AngleCount;
  }
  for (int i = 1; i + 1 < m; i += 2) {
    st.conv.push_back({live[i], live[i + 1], slot});
    slot += kSu4AngleCount;
  }
  if (m == 2) {
    st.classification = true;
    return st;
  }
  for (int i = 0; i + 1 < m; i += 2) {
    st.pool.push_back({live[i + 1], live[i], slot});
    slot += kSu2AngleCount;
  }
  return st;
}

std::vector<int> kept_qubits(const Stage& st) {
  std::vector<int> kept;
  kept.reserve(st.pool.size());
  for (const auto& p : st.pool) kept.push_back(p.kept);
  return kept;
}

CircuitNode build_node(const std::vector<int>& live, int branch_limit, bool branching,
                       int& slot) {
  CircuitNode node;
  node.stage = make_stage(live, slot);
  if (node.stage.classification) return node;

  const int m = static_cast<int>(node.stage.pool.size());
  const int n_outcomes = 1 << m;
  int n_children = 1;
  if (branching) n_children = branch_limit > 0 ? std::min(branch_limit, n_outcomes)
                                               : n_outcomes;

  node.child_for_outcome.resize(n_outcomes);
  for (int o = 0; o < n_outcomes; ++o) node.child_for_outcome[o] = o % n_children;

  std::vector<int> next = kept_qubits(node.stage);
  node.children.reserve(n_children);
  for (int c = 0; c < n_children; ++c)
    node.children.push_back(build_node(next, branch_limit, branching, slot));
  return node;
}

void check_width(int n) {
  if (n != 2 && n != 4 && n != 8 && n != 16)
    throw std::invalid_argument("unsupported circuit width " + std::to_string(n) +
                                " (expected 2, 4, 8 or 16)");
}

} // namespace

BranchPolicy BranchPolicy::limit(int k) {
  if (k < 1) throw std::invalid_argument("branch limit must be >= 1");
  return {k};
}

BranchingCircuit build_qcnn(int n_qubits) {
  check_width(n_qubits);
  BranchingCircuit c;
  c.n_qubits_ = n_qubits;
  c.kind_ = "qcnn";
  std::vector<int> live(n_qubits);
  for (int i = 0; i < n_qubits; ++i) live[i] = i;
  int slot = 0;
  c.root_ = build_node(live, 0, /*branching=*/false, slot);
  c.n_params_ = slot;
  return c;
}

BranchingCircuit build_bqcnn(int n_qubits, BranchPolicy policy) {
  check_width(n_qubits);
  if (policy.max_branches < 0)
    throw std::invalid_argument("branch limit must be >= 1");
  BranchingCircuit c;
  c.n_qubits_ = n_qubits;
  c.kind_ = "bqcnn";
  std::vector<int> live(n_qubits);
  for (int i = 0; i < n_qubits; ++i) live[i] = i;
  int slot = 0;
  c.root_ = build_node(live, policy.max_branches, /*branching=*/true, slot);
  c.n_params_ = slot;
  return c;
}

BranchingCircuit build_empty(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("width must be >= 1");
  BranchingCircuit c;
  c.n_qubits_ = n_qubits;
  c.kind_ = "empty";
  c.root_.stage.classification = true;
  for (int i = 0; i < n_qubits; ++i) c.root_.stage.live.push_back(i);
  return c;
}

int parameter_count(const BranchingCircuit& circuit) {
  return circuit.parameter_count();
}

namespace {

nlohmann::json node_to_json(const CircuitNode& node, std::vector<nlohmann::json>& nodes) {
  nlohmann::json j;
  j["live"] = node.stage.live;
  auto& conv = j["conv_pairs"] = nlohmann::json::array();
  for (const auto& g : node.stage.conv) conv.push_back({g.qubit_a, g.qubit_b});
  auto& pooled = j["pooled"] = nlohmann::json::array();
  auto& kept = j["kept"] = nlohmann::json::array();
  for (const auto& p : node.stage.pool) {
    pooled.push_back(p.measured);
    kept.push_back(p.kept);
  }
  std::vector<int> child_ids;
  child_ids.reserve(node.children.size());
  for (const auto& ch : node.children) {
    nlohmann::json cj = node_to_json(ch, nodes);
    child_ids.push_back(static_cast<int>(nodes.size()));
    nodes.push_back(std::move(cj));
  }
  auto& children = j["children"] = nlohmann::json::array();
  for (int o : node.child_for_outcome) children.push_back(child_ids[o]);
  return j;
}

} // namespace

nlohmann::json BranchingCircuit::to_json() const {
  std::vector<nlohmann::json> nodes;
  nlohmann::json root = node_to_json(root_, nodes);
  nodes.push_back(std::move(root)); // root is the last entry
  nlohmann::json j;
  j["n_qubits"] = n_qubits_;
  j["policy"] = kind_;
  j["parameter_count"] = n_params_;
  j["root"] = static_cast<int>(nodes.size()) - 1;
  j["nodes"] = nodes;
  return j;
}

namespace {

void check_params(const BranchingCircuit& c, std::span<const double> params) {
  if (static_cast<int>(params.size()) != c.parameter_count())
    throw std::invalid_argument("parameter vector has length " +
                                std::to_string(params.size()) + ", circuit needs " +
                                std::to_string(c.parameter_count()));
}

/// Forward unitary gate list of one branch, pooling as controlled su2.
void collect_branch(const CircuitNode& node, std::span<const double> params,
                    std::span<const int> path, std::size_t level, GateSequence& seq) {
  for (const auto& g : node.stage.conv)
    seq.ops.push_back(
        {su4(params.subspan(g.slot, kSu4AngleCount)), {g.qubit_a, g.qubit_b}, {}});
  for (const auto& p : node.stage.pool)
    seq.ops.push_back({controlled_su2(params.subspan(p.slot, kSu2AngleCount)),
                       {p.measured, p.kept},
                       {}});
  if (node.is_leaf()) {
    if (level != path.size())
      throw std::invalid_argument("branch path is longer than the circuit depth");
    return;
  }
  if (level >= path.size())
    throw std::invalid_argument("branch path is shorter than the circuit depth");
  const int outcome = path[level];
  if (outcome < 0 || outcome >= static_cast<int>(node.child_for_outcome.size()))
    throw std::invalid_argument("branch path outcome " + std::to_string(outcome) +
                                " out of range");
  collect_branch(node.children[node.child_for_outcome[outcome]], params, path,
                 level + 1, seq);
}

} // namespace

GateSequence invert_branch(const BranchingCircuit& circuit,
                           std::span<const double> params, std::span<const int> path) {
  check_params(circuit, params);
  GateSequence forward;
  collect_branch(circuit.root(), params, path, 0, forward);
  return inverted(forward);
}

namespace {

void defer_node(const CircuitNode& node, std::span<const double> params,
                std::vector<ControlBit> conditions, GateSequence& seq) {
  for (const auto& g : node.stage.conv)
    seq.ops.push_back({su4(params.subspan(g.slot, kSu4AngleCount)),
                       {g.qubit_a, g.qubit_b},
                       conditions});
  for (const auto& p : node.stage.pool) {
    auto ctrl = conditions;
    ctrl.push_back({p.measured, 1});
    seq.ops.push_back(
        {su2(params.subspan(p.slot, kSu2AngleCount)), {p.kept}, std::move(ctrl)});
  }
  if (node.is_leaf()) return;

  const int n_outcomes = static_cast<int>(node.child_for_outcome.size());
  for (std::size_t c = 0; c < node.children.size(); ++c) {
    std::vector<int> outcomes;
    for (int o = 0; o < n_outcomes; ++o)
      if (node.child_for_outcome[o] == static_cast<int>(c)) outcomes.push_back(o);
    if (static_cast<int>(outcomes.size()) == n_outcomes) {
      // Child runs for every outcome: no extra conditions needed.
      defer_node(node.children[c], params, conditions, seq);
      continue;
    }
    for (int o : outcomes) {
      auto ctrl = conditions;
      for (std::size_t j = 0; j < node.stage.pool.size(); ++j)
        ctrl.push_back({node.stage.pool[j].measured, (o >> j) & 1});
      defer_node(node.children[c], params, ctrl, seq);
    }
  }
}

} // namespace

GateSequence defer_measurements(const BranchingCircuit& circuit,
                                std::span<const double> params) {
  check_params(circuit, params);
  GateSequence seq;
  defer_node(circuit.root(), params, {}, seq);
  return seq;
}

namespace {

void replicate_node(const CircuitNode& qn, const CircuitNode& bn,
                    std::span<const double> qcnn_params, std::vector<double>& out) {
  if (qn.stage.conv.size() != bn.stage.conv.size() ||
      qn.stage.pool.size() != bn.stage.pool.size())
    throw std::invalid_argument("circuits do not share stage geometry");
  for (std::size_t i = 0; i < qn.stage.conv.size(); ++i)
    for (int k = 0; k < kSu4AngleCount; ++k)
      out[bn.stage.conv[i].slot + k] = qcnn_params[qn.stage.conv[i].slot + k];
  for (std::size_t i = 0; i < qn.stage.pool.size(); ++i)
    for (int k = 0; k < kSu2AngleCount; ++k)
      out[bn.stage.pool[i].slot + k] = qcnn_params[qn.stage.pool[i].slot + k];
  if (qn.is_leaf() != bn.is_leaf())
    throw std::invalid_argument("circuits do not share depth");
  if (qn.is_leaf()) return;
  for (const auto& child : bn.children)
    replicate_node(qn.children[0], child, qcnn_params, out);
}

} // namespace

std::vector<double> replicate_parameters(const BranchingCircuit& qcnn,
                                         std::span<const double> qcnn_params,
                                         const BranchingCircuit& bqcnn) {
  if (qcnn.n_qubits() != bqcnn.n_qubits())
    throw std::invalid_argument("circuit widths differ");
  check_params(qcnn, qcnn_params);
  std::vector<double> out(bqcnn.parameter_count(), 0.0);
  replicate_node(qcnn.root(), bqcnn.root(), qcnn_params, out);
  return out;
}

} // namespace bqcnn
