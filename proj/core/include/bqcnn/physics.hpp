#pragma once

#include <Eigen/Dense>

#include "bqcnn/dataset.hpp"
#include "bqcnn/statevector.hpp"

namespace bqcnn {

/// Perturbation strengths of the cluster Hamiltonian (dimensionless).
/// h2 is an XX-Ising extension kept at 0 by the shipped dataset generators.
struct CouplingPoint {
  double h = 0.0;  // transverse field
  double g = 0.0;  // three-site XXX term
  double h2 = 0.0; // two-site XX term
};

/// Open-boundary cluster Hamiltonian on n_sites <= 6 qubits:
///   H = -sum ZXZ windows - h sum X_i - g sum XXX windows - h2 sum XX pairs,
/// with all multi-site sums over fully in-range windows.
Eigen::MatrixXcd build_hamiltonian(int n_sites, const CouplingPoint& point);

/// String order operator Z_0 Y_1 (X_2 ... X_{n-3}) Y_{n-2} Z_{n-1}; the X
/// run is empty at n = 4. Requires n >= 4.
PauliString string_order_operator(int n_qubits);

/// Expectation of the string order operator on `state`.
double string_order(const Statevector& state);

/// Ground-state training set for SPT-phase recognition on 4 sites: one half
/// sweeps h over [0, pi/2) at g = 0, the other sweeps g over [0, pi) at
/// h = 0, each on a uniform half-open grid of `points_per_branch` values.
/// Labels: 0 (topological) where the string order parameter is >= 0.5,
/// else 1 (trivial).
LabeledDataset spt_dataset(int points_per_branch = 16);

} // namespace bqcnn
