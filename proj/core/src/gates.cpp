#include "bqcnn/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bqcnn {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

} // namespace

Matrix rx(double t) {
  Matrix m(2, 2);
  m << std::cos(t / 2), -kI * std::sin(t / 2), -kI * std::sin(t / 2), std::cos(t / 2);
  return m;
}

Matrix ry(double t) {
  Matrix m(2, 2);
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

Matrix rz(double t) {
  Matrix m(2, 2);
  m << std::exp(-kI * (t / 2)), 0.0, 0.0, std::exp(kI * (t / 2));
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix cnot() {
  Matrix m = Matrix::Identity(4, 4);
  m(2, 2) = m(3, 3) = 0;
  m(2, 3) = m(3, 2) = 1;
  return m;
}

Matrix ms_gate(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("MS sign must be +-1");
  const double t = sign * kPi / 4;
  Matrix xx = kron(pauli_x(), pauli_x());
  return std::cos(t) * Matrix::Identity(4, 4) - kI * std::sin(t) * xx;
}

Matrix su2(std::span<const double> angles) {
  if (angles.size() != kSu2AngleCount)
    throw std::invalid_argument("su2 takes exactly 3 angles");
  return rz(angles[0]) * ry(angles[1]) * rz(angles[2]);
}

Matrix canonical_gate(double a, double b, double c) {
  // XX, YY and ZZ commute; each factor is cos(t/2) I - i sin(t/2) PP.
  Matrix out = Matrix::Identity(4, 4);
  const Matrix paulis[3] = {kron(pauli_x(), pauli_x()), kron(pauli_y(), pauli_y()),
                            kron(pauli_z(), pauli_z())};
  const double ts[3] = {a, b, c};
  for (int k = 0; k < 3; ++k)
    out = (std::cos(ts[k] / 2) * Matrix::Identity(4, 4) -
           kI * std::sin(ts[k] / 2) * paulis[k]) *
          out;
  return out;
}

Matrix su4(std::span<const double> angles) {
  if (angles.size() != kSu4AngleCount)
    throw std::invalid_argument("su4 takes exactly 15 angles");
  Matrix a1 = su2(angles.subspan(0, 3));
  Matrix a2 = su2(angles.subspan(3, 3));
  Matrix a3 = su2(angles.subspan(6, 3));
  Matrix a4 = su2(angles.subspan(9, 3));
  return kron(a1, a2) * canonical_gate(angles[12], angles[13], angles[14]) *
         kron(a3, a4);
}

Matrix controlled_su2(std::span<const double> angles) {
  Matrix m = Matrix::Identity(4, 4);
  m.block(2, 2, 2, 2) = su2(angles);
  return m;
}

void apply_sequence(Statevector& state, const GateSequence& seq) {
  for (const auto& op : seq.ops)
    state.apply_controlled(op.matrix, op.targets, op.controls);
}

Matrix sequence_matrix(const GateSequence& seq, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix out = Matrix::Identity(dim, dim);
  // Column-by-column through the statevector path keeps a single embedding
  // convention across the project.
  for (Eigen::Index col = 0; col < dim; ++col) {
    Statevector s = Statevector::basis_state(n_qubits, static_cast<std::uint64_t>(col));
    apply_sequence(s, seq);
    for (Eigen::Index row = 0; row < dim; ++row)
      out(row, col) = s.amplitude(static_cast<std::uint64_t>(row));
  }
  return out;
}

GateSequence inverted(const GateSequence& seq) {
  GateSequence out;
  out.basis = seq.basis;
  out.ops.reserve(seq.ops.size());
  for (auto it = seq.ops.rbegin(); it != seq.ops.rend(); ++it)
    out.ops.push_back({it->matrix.adjoint(), it->targets, it->controls});
  return out;
}

namespace {

void push1(GateSequence& seq, const Matrix& m, int wire) {
  seq.ops.push_back({m, {wire}, {}});
}

/// canonical_gate(a, b, c) on wires {0, 1} up to global phase, with exactly
/// 3 CNOTs (Vatan-Williams core: local layer, CNOT-sandwiched Rz/Ry, local
/// layer).
void push_canonical_cnot(GateSequence& seq, double a, double b, double c) {
  push1(seq, rz(kPi / 2), 1);
  seq.ops.push_back({cnot(), {1, 0}, {}});
  push1(seq, rz(c - kPi / 2), 0);
  push1(seq, ry(a - kPi / 2), 1);
  seq.ops.push_back({cnot(), {0, 1}, {}});
  push1(seq, ry(kPi / 2 - b), 1);
  seq.ops.push_back({cnot(), {1, 0}, {}});
  push1(seq, rz(-kPi / 2), 0);
}

} // namespace

GateSequence compile_cnot(std::span<const double> angles) {
  if (angles.size() != kSu4AngleCount)
    throw std::invalid_argument("compile_cnot takes exactly 15 angles");
  GateSequence seq;
  seq.basis = BasisTag::cnot;
  // Applied first: the right-hand local layer A3 (x) A4.
  push1(seq, su2(angles.subspan(6, 3)), 0);
  push1(seq, su2(angles.subspan(9, 3)), 1);
  push_canonical_cnot(seq, angles[12], angles[13], angles[14]);
  push1(seq, su2(angles.subspan(0, 3)), 0);
  push1(seq, su2(angles.subspan(3, 3)), 1);
  return seq;
}

GateSequence compile_ms(std::span<const double> angles, int ms_sign) {
  GateSequence cnot_seq = compile_cnot(angles);
  GateSequence seq;
  seq.basis = BasisTag::ms;
  const Matrix ms = ms_gate(ms_sign);
  // CNOT (control first target second) == Ry(pi/2) on control; MS;
  // Rx(-s*pi/2) on both wires; Ry(-pi/2) on control -- up to global phase.
  const double xs = -ms_sign * kPi / 2;
  for (const auto& op : cnot_seq.ops) {
    if (op.targets.size() == 1) {
      seq.ops.push_back(op);
      continue;
    }
    const int control = op.targets[0];
    const int target = op.targets[1];
    push1(seq, ry(kPi / 2), control);
    seq.ops.push_back({ms, op.targets, {}});
    push1(seq, rx(xs), control);
    push1(seq, rx(xs), target);
    push1(seq, ry(-kPi / 2), control);
  }
  return seq;
}

double phase_aligned_distance(const Matrix& a, const Matrix& b) {
  Eigen::Index mi = 0, mj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (std::abs(b(i, j)) > best) {
        best = std::abs(b(i, j));
        mi = i;
        mj = j;
      }
  if (best <= 0.0) return (a - b).cwiseAbs().maxCoeff();
  Complex phase = a(mi, mj) / b(mi, mj);
  const double mag = std::abs(phase);
  if (mag < 1e-12) return (a - b).cwiseAbs().maxCoeff();
  phase /= mag;
  return (a - phase * b).cwiseAbs().maxCoeff();
}

} // namespace bqcnn
