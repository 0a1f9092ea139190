#pragma once

#include <utility>

#include <Eigen/Dense>

#include "bqcnn/statevector.hpp"

namespace bqcnn {

/// A = vectors * diag(values) * vectors^dagger, eigenvalues ascending.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

/// Full dense eigendecomposition of a Hermitian matrix by cyclic Jacobi
/// sweeps. Intended for the small dimensions this project needs (<= 64);
/// robustness over asymptotics. Throws numerical_error if the input is not
/// Hermitian within 1e-10.
EigenDecomposition jacobi_eigh(const Eigen::MatrixXcd& matrix);

/// Lowest eigenpair of a Hermitian matrix whose dimension is a power of two
/// (at most 64). Among eigenvectors within 1e-9 * (spectral range) of the
/// minimum eigenvalue, returns the one maximizing <degeneracy_resolver>,
/// found by diagonalizing the resolver restricted to the near-degenerate
/// subspace. The global phase is fixed so the first amplitude with modulus
/// above 1e-8 is real positive.
std::pair<double, Statevector> ground_state(const Eigen::MatrixXcd& hamiltonian,
                                            const PauliString& degeneracy_resolver);

} // namespace bqcnn
