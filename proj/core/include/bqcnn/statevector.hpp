#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bqcnn/rng.hpp"

namespace bqcnn {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// A control condition on a gate: the gate acts only on amplitudes whose
/// computational-basis bit at `qubit` equals `value`.
struct ControlBit {
  int qubit;
  int value;
};

enum class Pauli : char { X = 'X', Y = 'Y', Z = 'Z' };

/// A product of single-site Pauli operators with implicit identity elsewhere.
/// Sites are kept strictly increasing.
class PauliString {
public:
  PauliString() = default;
  PauliString(std::initializer_list<std::pair<int, Pauli>> terms);

  /// Appends a factor. Sites must be added in strictly increasing order.
  void add(int site, Pauli op);

  const std::vector<std::pair<int, Pauli>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int max_site() const { return terms_.empty() ? -1 : terms_.back().first; }

  std::string to_string() const;

private:
  std::vector<std::pair<int, Pauli>> terms_;
};

/// Normalized complex amplitude vector over the 2^n computational basis
/// states. Qubit 0 is the least significant bit of the basis-state index;
/// every module in this project inherits that convention.
class Statevector {
public:
  /// |0...0> on n qubits.
  explicit Statevector(int n_qubits);

  /// Computational basis state |bits>.
  static Statevector basis_state(int n_qubits, std::uint64_t bits);

  /// Wraps explicit amplitudes. The vector must have length 2^n_qubits and
  /// be normalized within 1e-6; it is renormalized exactly on construction.
  static Statevector from_amplitudes(int n_qubits, std::vector<Complex> amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_[index]; }

  double norm_sq() const;

  /// <this|other>.
  Complex inner(const Statevector& other) const;

  /// Probability that `qubit` reads 1 in the computational basis.
  double probability_one(int qubit) const;

  /// Applies a (2^k x 2^k) unitary to `targets`, in place. targets[0]
  /// addresses the most significant bit of the gate's own index space, so a
  /// 4x4 matrix written as blkdiag(I, U) is "controlled-U with targets[0]
  /// as control".
  void apply_gate(const Matrix& gate, std::span<const int> targets);

  /// Same, but the gate acts only where every control bit matches.
  void apply_controlled(const Matrix& gate, std::span<const int> targets,
                        std::span<const ControlBit> controls);

  /// Projective Z-basis measurement with collapse. Returns the sampled bit
  /// and renormalizes. Throws numerical_error if both outcome probabilities
  /// are below 1e-12.
  int measure_qubit(int qubit, Rng& rng);

  /// Projects onto `qubit` = `bit` and renormalizes. Returns the probability
  /// of that outcome before projection (0 if the outcome has no support; the
  /// state is left untouched in that case).
  double project_qubit(int qubit, int bit);

private:
  int n_qubits_;
  std::vector<Complex> amps_;
};

// Value-style operation surface: immutable-in, new-value-out.
Statevector apply(const Statevector& state, const Matrix& gate,
                  std::span<const int> targets);
std::pair<int, Statevector> measure(const Statevector& state, int qubit, Rng& rng);

/// <state|op|state>. The imaginary part is checked to be below 1e-10 and
/// dropped. All sites of `op` must be < state.n_qubits().
double expectation(const Statevector& state, const PauliString& op);

/// Adds coeff * P to a dense operator matrix (dimension 2^n). Used to
/// assemble Hamiltonians from Pauli terms.
void add_pauli_term(Matrix& matrix, const PauliString& op, double coeff, int n_qubits);

} // namespace bqcnn
