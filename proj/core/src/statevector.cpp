#include "bqcnn/statevector.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "bqcnn/errors.hpp"

namespace bqcnn {

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

void check_targets(int n_qubits, std::span<const int> targets, std::size_t gate_dim) {
  std::size_t expect = std::size_t{1} << targets.size();
  if (expect != gate_dim)
    throw std::invalid_argument("gate dimension does not match target count");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n_qubits)
      throw std::invalid_argument("target qubit " + std::to_string(targets[i]) +
                                  " out of range");
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j])
        throw std::invalid_argument("duplicate target qubit " +
                                    std::to_string(targets[i]));
  }
}

} // namespace

PauliString::PauliString(std::initializer_list<std::pair<int, Pauli>> terms) {
  for (const auto& [site, op] : terms) add(site, op);
}

void PauliString::add(int site, Pauli op) {
  if (site < 0) throw std::invalid_argument("Pauli site must be non-negative");
  if (!terms_.empty() && site <= terms_.back().first)
    throw std::invalid_argument("Pauli sites must be strictly increasing");
  terms_.emplace_back(site, op);
}

std::string PauliString::to_string() const {
  if (terms_.empty()) return "I";
  std::string out;
  for (const auto& [site, op] : terms_) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>(op);
    out += std::to_string(site);
  }
  return out;
}

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30)
    throw std::invalid_argument("n_qubits out of supported range");
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = Complex{1.0, 0.0};
}

Statevector Statevector::basis_state(int n_qubits, std::uint64_t bits) {
  Statevector s(n_qubits);
  if (bits >= s.dim()) throw std::invalid_argument("basis state label out of range");
  s.amps_[0] = Complex{0.0, 0.0};
  s.amps_[bits] = Complex{1.0, 0.0};
  return s;
}

Statevector Statevector::from_amplitudes(int n_qubits, std::vector<Complex> amps) {
  Statevector s(n_qubits);
  if (amps.size() != s.dim() || !is_power_of_two(amps.size()))
    throw std::invalid_argument("amplitude vector has wrong length");
  double n2 = 0.0;
  for (const auto& a : amps) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > 1e-6)
    throw numerical_error("amplitude vector is not normalized");
  double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amps) a *= inv;
  s.amps_ = std::move(amps);
  return s;
}

double Statevector::norm_sq() const {
  double n2 = 0.0;
  for (const auto& a : amps_) n2 += std::norm(a);
  return n2;
}

Complex Statevector::inner(const Statevector& other) const {
  if (other.n_qubits_ != n_qubits_)
    throw std::invalid_argument("statevector width mismatch");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i)
    acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

double Statevector::probability_one(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_)
    throw std::invalid_argument("qubit index out of range");
  std::uint64_t mask = std::uint64_t{1} << qubit;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (i & mask) p += std::norm(amps_[i]);
  return p;
}

void Statevector::apply_gate(const Matrix& gate, std::span<const int> targets) {
  apply_controlled(gate, targets, {});
}

void Statevector::apply_controlled(const Matrix& gate, std::span<const int> targets,
                                   std::span<const ControlBit> controls) {
  check_targets(n_qubits_, targets, static_cast<std::size_t>(gate.rows()));
  if (gate.cols() != gate.rows())
    throw std::invalid_argument("gate matrix must be square");

  std::uint64_t ctrl_mask = 0, ctrl_value = 0;
  for (const auto& c : controls) {
    if (c.qubit < 0 || c.qubit >= n_qubits_)
      throw std::invalid_argument("control qubit out of range");
    std::uint64_t m = std::uint64_t{1} << c.qubit;
    if (ctrl_mask & m) throw std::invalid_argument("duplicate control qubit");
    ctrl_mask |= m;
    if (c.value) ctrl_value |= m;
  }

  const int k = static_cast<int>(targets.size());
  const std::size_t span = std::size_t{1} << k;

  // Bit position of each gate-local index bit: local bit (k-1-j) <-> targets[j].
  std::vector<std::uint64_t> tmask(k);
  std::uint64_t targets_mask = 0;
  for (int j = 0; j < k; ++j) {
    tmask[k - 1 - j] = std::uint64_t{1} << targets[j];
    targets_mask |= tmask[k - 1 - j];
  }
  if (targets_mask & ctrl_mask)
    throw std::invalid_argument("control qubit overlaps a target qubit");

  std::vector<Complex> in(span), out(span);
  const std::uint64_t dim = amps_.size();
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & targets_mask) continue; // enumerate each target-cleared group once
    if ((base & ctrl_mask) != ctrl_value) continue;
    for (std::size_t p = 0; p < span; ++p) {
      std::uint64_t idx = base;
      for (int b = 0; b < k; ++b)
        if (p & (std::size_t{1} << b)) idx |= tmask[b];
      in[p] = amps_[idx];
    }
    for (std::size_t r = 0; r < span; ++r) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < span; ++c) acc += gate(r, c) * in[c];
      out[r] = acc;
    }
    for (std::size_t p = 0; p < span; ++p) {
      std::uint64_t idx = base;
      for (int b = 0; b < k; ++b)
        if (p & (std::size_t{1} << b)) idx |= tmask[b];
      amps_[idx] = out[p];
    }
  }
}

int Statevector::measure_qubit(int qubit, Rng& rng) {
  double p1 = probability_one(qubit);
  double p0 = 1.0 - p1;
  if (p0 < 1e-12 && p1 < 1e-12)
    throw numerical_error("state has no support on either measurement outcome");
  int bit = rng.uniform() < p1 ? 1 : 0;
  project_qubit(qubit, bit);
  return bit;
}

double Statevector::project_qubit(int qubit, int bit) {
  if (qubit < 0 || qubit >= n_qubits_)
    throw std::invalid_argument("qubit index out of range");
  std::uint64_t mask = std::uint64_t{1} << qubit;
  std::uint64_t want = bit ? mask : 0;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & mask) == want) p += std::norm(amps_[i]);
  if (p <= 0.0) return 0.0;
  double inv = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    amps_[i] = (i & mask) == want ? amps_[i] * inv : Complex{0.0, 0.0};
  return p;
}

Statevector apply(const Statevector& state, const Matrix& gate,
                  std::span<const int> targets) {
  Statevector out = state;
  out.apply_gate(gate, targets);
  return out;
}

std::pair<int, Statevector> measure(const Statevector& state, int qubit, Rng& rng) {
  Statevector out = state;
  int bit = out.measure_qubit(qubit, rng);
  return {bit, std::move(out)};
}

namespace {

// P|i> = phase(i) |i ^ flip_mask>
struct PauliAction {
  std::uint64_t flip_mask = 0;
  std::vector<std::pair<std::uint64_t, Pauli>> phase_terms; // (bit mask, op) for Y and Z
};

PauliAction pauli_action(const PauliString& op, int n_qubits) {
  PauliAction act;
  for (const auto& [site, p] : op.terms()) {
    if (site >= n_qubits)
      throw std::invalid_argument("Pauli site " + std::to_string(site) +
                                  " out of range for " + std::to_string(n_qubits) +
                                  " qubits");
    std::uint64_t m = std::uint64_t{1} << site;
    if (p == Pauli::X || p == Pauli::Y) act.flip_mask |= m;
    if (p == Pauli::Y || p == Pauli::Z) act.phase_terms.emplace_back(m, p);
  }
  return act;
}

Complex pauli_phase(const PauliAction& act, std::uint64_t i) {
  // X|b> = |1-b>;  Y|0> = i|1>, Y|1> = -i|0>;  Z|b> = (-1)^b |b>
  Complex phase{1.0, 0.0};
  for (const auto& [m, p] : act.phase_terms) {
    bool set = (i & m) != 0;
    if (p == Pauli::Z)
      phase *= set ? -1.0 : 1.0;
    else
      phase *= set ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
  }
  return phase;
}

} // namespace

double expectation(const Statevector& state, const PauliString& op) {
  PauliAction act = pauli_action(op, state.n_qubits());
  auto amps = state.amplitudes();
  Complex acc{0.0, 0.0};
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    Complex a = amps[i];
    if (a == Complex{0.0, 0.0}) continue;
    acc += std::conj(amps[i ^ act.flip_mask]) * pauli_phase(act, i) * a;
  }
  if (std::abs(acc.imag()) > 1e-10)
    throw numerical_error("Pauli expectation has non-real value");
  return acc.real();
}

void add_pauli_term(Matrix& matrix, const PauliString& op, double coeff, int n_qubits) {
  std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (matrix.rows() != static_cast<Eigen::Index>(dim) ||
      matrix.cols() != static_cast<Eigen::Index>(dim))
    throw std::invalid_argument("operator matrix has wrong dimension");
  PauliAction act = pauli_action(op, n_qubits);
  for (std::uint64_t i = 0; i < dim; ++i)
    matrix(i ^ act.flip_mask, i) += coeff * pauli_phase(act, i);
}

} // namespace bqcnn
