#include "bqcnn/physics.hpp"

#include <numbers>
#include <stdexcept>

#include "bqcnn/eigensolver.hpp"

namespace bqcnn {

Eigen::MatrixXcd build_hamiltonian(int n_sites, const CouplingPoint& point) {
  if (n_sites > 6) throw std::invalid_argument("build_hamiltonian supports at most 6 sites");
  if (n_sites < 3)
    throw std::invalid_argument("cluster Hamiltonian needs at least 3 sites (no ZXZ window)");

  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  for (int i = 0; i + 2 < n_sites; ++i)
    add_pauli_term(h,
                   PauliString{{i, Pauli::Z}, {i + 1, Pauli::X}, {i + 2, Pauli::Z}},
                   -1.0, n_sites);
  for (int i = 0; i < n_sites; ++i)
    add_pauli_term(h, PauliString{{i, Pauli::X}}, -point.h, n_sites);
  for (int i = 0; i + 2 < n_sites; ++i)
    add_pauli_term(h,
                   PauliString{{i, Pauli::X}, {i + 1, Pauli::X}, {i + 2, Pauli::X}},
                   -point.g, n_sites);
  if (point.h2 != 0.0)
    for (int i = 0; i + 1 < n_sites; ++i)
      add_pauli_term(h, PauliString{{i, Pauli::X}, {i + 1, Pauli::X}}, -point.h2,
                     n_sites);
  return h;
}

PauliString string_order_operator(int n_qubits) {
  if (n_qubits < 4)
    throw std::invalid_argument("string order parameter needs at least 4 qubits");
  PauliString op;
  op.add(0, Pauli::Z);
  op.add(1, Pauli::Y);
  for (int i = 2; i <= n_qubits - 3; ++i) op.add(i, Pauli::X);
  op.add(n_qubits - 2, Pauli::Y);
  op.add(n_qubits - 1, Pauli::Z);
  return op;
}

double string_order(const Statevector& state) {
  return expectation(state, string_order_operator(state.n_qubits()));
}

LabeledDataset spt_dataset(int points_per_branch) {
  if (points_per_branch < 2)
    throw std::invalid_argument("need at least 2 grid points per branch");

  constexpr int n_sites = 4;
  const PauliString resolver = string_order_operator(n_sites);

  LabeledDataset ds;
  ds.n_qubits = n_sites;
  ds.kind = "spt";
  ds.metadata = {{"points_per_branch", points_per_branch},
                 {"h_max", std::numbers::pi / 2},
                 {"g_max", std::numbers::pi}};

  auto add_point = [&](const CouplingPoint& pt) {
    auto [energy, state] = ground_state(build_hamiltonian(n_sites, pt), resolver);
    const double order = string_order(state);
    const int label = order >= 0.5 ? 0 : 1;
    ds.items.push_back({std::move(state),
                        label,
                        {{"h", pt.h}, {"g", pt.g}, {"order_param", order},
                         {"energy", energy}}});
  };

  for (int k = 0; k < points_per_branch; ++k)
    add_point({k * (std::numbers::pi / 2) / points_per_branch, 0.0});
  for (int k = 0; k < points_per_branch; ++k)
    add_point({0.0, k * std::numbers::pi / points_per_branch});
  return ds;
}

} // namespace bqcnn
