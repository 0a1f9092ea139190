#include "bqcnn/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bqcnn/errors.hpp"

namespace bqcnn {

namespace {

double off_diagonal_norm(const Eigen::MatrixXcd& a) {
  double s = 0.0;
  for (Eigen::Index p = 0; p < a.rows(); ++p)
    for (Eigen::Index q = 0; q < a.cols(); ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

void check_hermitian(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix must be square");
  for (Eigen::Index p = 0; p < m.rows(); ++p)
    for (Eigen::Index q = p; q < m.cols(); ++q)
      if (std::abs(m(p, q) - std::conj(m(q, p))) > tol)
        throw numerical_error("matrix is not Hermitian");
}

} // namespace

EigenDecomposition jacobi_eigh(const Eigen::MatrixXcd& matrix) {
  check_hermitian(matrix, 1e-10);
  const Eigen::Index n = matrix.rows();

  Eigen::MatrixXcd a = matrix;
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);

  const double scale = std::max(1.0, a.norm());
  const double tol = 1e-14 * scale;
  const int max_sweeps = 100;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tol) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const std::complex<double> apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= tol / static_cast<double>(n)) continue;

        // Unitary 2x2 rotation J = [[c, -s*conj(phase)], [s*phase, c]]
        // with phase = apq/|apq|, chosen to zero the (p,q) element.
        const std::complex<double> phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns transform: col_p' = c*col_p - s*conj(phase)*col_q,
        //                    col_q' = s*phase*col_p + c*col_q.
        for (Eigen::Index r = 0; r < n; ++r) {
          const std::complex<double> arp = a(r, p);
          const std::complex<double> arq = a(r, q);
          a(r, p) = c * arp - s * std::conj(phase) * arq;
          a(r, q) = s * phase * arp + c * arq;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          const std::complex<double> apr = a(p, r);
          const std::complex<double> aqr = a(q, r);
          a(p, r) = c * apr - s * phase * aqr;
          a(q, r) = s * std::conj(phase) * apr + c * aqr;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          const std::complex<double> vrp = v(r, p);
          const std::complex<double> vrq = v(r, q);
          v(r, p) = c * vrp - s * std::conj(phase) * vrq;
          v(r, q) = s * phase * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

std::pair<double, Statevector> ground_state(const Eigen::MatrixXcd& hamiltonian,
                                            const PauliString& resolver) {
  const Eigen::Index dim = hamiltonian.rows();
  if (dim > 64) throw std::invalid_argument("ground_state supports dimension <= 64");
  int n_qubits = 0;
  while ((Eigen::Index{1} << n_qubits) < dim) ++n_qubits;
  if ((Eigen::Index{1} << n_qubits) != dim)
    throw std::invalid_argument("Hamiltonian dimension must be a power of two");

  EigenDecomposition eig = jacobi_eigh(hamiltonian);

  const double e0 = eig.values(0);
  const double range = eig.values(dim - 1) - e0;
  const double window = 1e-9 * std::max(range, 1.0e-300);
  Eigen::Index deg = 1;
  while (deg < dim && eig.values(deg) <= e0 + window) ++deg;

  Eigen::VectorXcd ground;
  if (deg == 1) {
    ground = eig.vectors.col(0);
  } else {
    // Resolver restricted to the near-degenerate subspace.
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    add_pauli_term(op, resolver, 1.0, n_qubits);
    Eigen::MatrixXcd basis = eig.vectors.leftCols(deg);
    Eigen::MatrixXcd restricted = basis.adjoint() * op * basis;
    // Symmetrize away rounding before the Hermitian solve.
    restricted = 0.5 * (restricted + restricted.adjoint()).eval();
    EigenDecomposition sub = jacobi_eigh(restricted);
    ground = basis * sub.vectors.col(deg - 1); // max <resolver>
  }

  ground.normalize();
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (std::abs(ground(i)) > 1e-8) {
      ground *= std::conj(ground(i)) / std::abs(ground(i));
      break;
    }
  }

  std::vector<Complex> amps(ground.data(), ground.data() + dim);
  return {e0, Statevector::from_amplitudes(n_qubits, std::move(amps))};
}

} // namespace bqcnn
