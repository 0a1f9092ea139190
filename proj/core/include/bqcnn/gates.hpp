#pragma once

#include <array>
#include <span>
#include <vector>

#include "bqcnn/statevector.hpp"

namespace bqcnn {

inline constexpr int kSu2AngleCount = 3;
inline constexpr int kSu4AngleCount = 15;

// Elementary rotations and fixed gates.
Matrix rx(double theta);
Matrix ry(double theta);
Matrix rz(double theta);
Matrix hadamard();
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
/// CNOT with targets[0] as control: blkdiag(I, X).
Matrix cnot();
/// Molmer-Sorensen entangling gate exp(-i * sign * pi/4 * XX).
Matrix ms_gate(int sign = 1);

/// General single-qubit rotation Rz(a) * Ry(b) * Rz(c).
Matrix su2(std::span<const double> angles);

/// General two-qubit rotation from 15 angles:
/// (A1 (x) A2) * exp(-i(t13 XX + t14 YY + t15 ZZ)/2) * (A3 (x) A4),
/// each A_k = su2(3 angles). kron convention: the left factor acts on
/// targets[0].
Matrix su4(std::span<const double> angles);

/// exp(-i(a XX + b YY + c ZZ)/2), the commuting two-qubit core of su4.
Matrix canonical_gate(double a, double b, double c);

/// Controlled single-qubit rotation: identity on control=0, su2 on
/// control=1. The control is targets[0] when applied.
Matrix controlled_su2(std::span<const double> angles);

enum class BasisTag { abstract, cnot, ms };

/// One gate in a sequence. targets[0] addresses the most significant bit of
/// the matrix's index space. Controls restrict the gate to amplitudes whose
/// listed qubits carry the listed computational-basis values.
struct GateOp {
  Matrix matrix;
  std::vector<int> targets;
  std::vector<ControlBit> controls;
};

/// Ordered gate list; ops[0] is applied first.
struct GateSequence {
  BasisTag basis = BasisTag::abstract;
  std::vector<GateOp> ops;

  std::size_t size() const { return ops.size(); }
};

/// Applies every op of the sequence to the state, in order.
void apply_sequence(Statevector& state, const GateSequence& seq);

/// Product of the sequence as a dense matrix on `n_qubits` wires
/// (ops[0] rightmost). Intended for small verification circuits.
Matrix sequence_matrix(const GateSequence& seq, int n_qubits);

/// Conjugate-transposes every gate and reverses the order.
GateSequence inverted(const GateSequence& seq);

/// Decomposition of su4(angles) on wires {0, 1} into single-qubit rotations
/// and exactly 3 CNOTs; equal to su4(angles) up to global phase.
GateSequence compile_cnot(std::span<const double> angles);

/// Same contract over {single-qubit rotations, MS} obtained by rewriting
/// each CNOT of compile_cnot through its local equivalence to the MS gate.
/// `ms_sign` selects the laser-tuning sign convention of the device.
GateSequence compile_ms(std::span<const double> angles, int ms_sign = 1);

/// Max entry deviation between two matrices after global-phase alignment
/// (divide by the entry pair with the largest reference modulus).
double phase_aligned_distance(const Matrix& a, const Matrix& b);

} // namespace bqcnn
