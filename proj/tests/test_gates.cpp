#include "doctest.h"

#include <cmath>
#include <numbers>

#include "bqcnn/gates.hpp"

#include "test_support.hpp"

using namespace bqcnn;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_angles(Rng& rng, int count) {
  std::vector<double> v(count);
  for (auto& a : v) a = rng.uniform(0.0, 2.0 * kPi);
  return v;
}

bool is_unitary(const Matrix& u, double tol) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
             .cwiseAbs()
             .maxCoeff() < tol;
}

} // namespace

TEST_SUITE_BEGIN("gates");

TEST_CASE("su2 fixtures") {
  const double zeros[3] = {0, 0, 0};
  CHECK((su2(zeros) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);

  const double ry_pi[3] = {0, kPi, 0};
  Matrix expected(2, 2);
  expected << 0, -1, 1, 0;
  CHECK((su2(ry_pi) - expected).cwiseAbs().maxCoeff() < 1e-12);

  const double rz_pi[3] = {kPi, 0, 0};
  Matrix m = su2(rz_pi);
  CHECK(std::abs(m(0, 0) - std::exp(Complex{0, -kPi / 2})) < 1e-12);
  CHECK(std::abs(m(1, 1) - std::exp(Complex{0, kPi / 2})) < 1e-12);
  CHECK(std::abs(m(0, 1)) < 1e-15);
}

TEST_CASE("su4 fixtures") {
  std::vector<double> angles(15, 0.0);
  CHECK((su4(angles) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);

  angles[12] = kPi; // only the XX angle
  Matrix xx = testsupport::kron(pauli_x(), pauli_x());
  CHECK((su4(angles) - Complex{0, -1} * xx).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(su4(std::vector<double>(14, 0.0)), std::invalid_argument);
}

TEST_CASE("su4 is unitary for random angles") {
  Rng rng(8);
  for (int i = 0; i < 100; ++i)
    CHECK(is_unitary(su4(random_angles(rng, 15)), 1e-10));
}

TEST_CASE("composed random su4 gates stay unitary") {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    Matrix u = su4(random_angles(rng, 15)) * su4(random_angles(rng, 15));
    CHECK(is_unitary(u, 1e-9));
  }
}

TEST_CASE("controlled_su2 fixtures") {
  const double zeros[3] = {0, 0, 0};
  CHECK((controlled_su2(zeros) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-15);

  // control = 0 leaves the target untouched
  Rng rng(10);
  auto angles = random_angles(rng, 3);
  Statevector s = testsupport::random_state(1, rng);
  std::vector<Complex> amps = {s.amplitude(0), s.amplitude(1), 0, 0};
  auto joint = Statevector::from_amplitudes(2, amps); // qubit 1 (control) = 0
  const int targets[2] = {1, 0};
  joint.apply_gate(controlled_su2(angles), targets);
  CHECK(std::abs(joint.amplitude(0) - amps[0]) < 1e-12);
  CHECK(std::abs(joint.amplitude(1) - amps[1]) < 1e-12);

  // control = 1 applies Ry(pi): |1>|0> -> |1>|1> up to sign
  const double ry_pi[3] = {0, kPi, 0};
  auto flip = Statevector::basis_state(2, 2); // control qubit 1 set
  flip.apply_gate(controlled_su2(ry_pi), targets);
  CHECK(std::abs(std::abs(flip.amplitude(3)) - 1.0) < 1e-12);
}

TEST_CASE("canonical gate only theta_xx = pi is -i XX") {
  Matrix xx = testsupport::kron(pauli_x(), pauli_x());
  CHECK((canonical_gate(kPi, 0, 0) - Complex{0, -1} * xx).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("compile_cnot: identity at zero angles, 3 CNOTs, matrix equality") {
  std::vector<double> zeros(15, 0.0);
  auto seq = compile_cnot(zeros);
  CHECK(phase_aligned_distance(sequence_matrix(seq, 2), Matrix::Identity(4, 4)) <
        1e-12);

  int two_qubit_ops = 0;
  for (const auto& op : seq.ops)
    if (op.targets.size() == 2) ++two_qubit_ops;
  CHECK(two_qubit_ops == 3);
  CHECK(seq.basis == BasisTag::cnot);

  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    auto angles = random_angles(rng, 15);
    GateSequence direct;
    direct.ops.push_back({su4(angles), {0, 1}, {}});
    const double dist = phase_aligned_distance(sequence_matrix(compile_cnot(angles), 2),
                                               sequence_matrix(direct, 2));
    CHECK(dist < 1e-9);
  }
}

TEST_CASE("compile_ms matches su4 and compile_cnot up to global phase") {
  Rng rng(13);
  std::vector<double> zeros(15, 0.0);
  CHECK(phase_aligned_distance(sequence_matrix(compile_ms(zeros), 2),
                               Matrix::Identity(4, 4)) < 1e-12);

  for (int sign : {1, -1}) {
    for (int i = 0; i < 25; ++i) {
      auto angles = random_angles(rng, 15);
      GateSequence direct;
      direct.ops.push_back({su4(angles), {0, 1}, {}});
      Matrix want = sequence_matrix(direct, 2);
      Matrix got_ms = sequence_matrix(compile_ms(angles, sign), 2);
      Matrix got_cnot = sequence_matrix(compile_cnot(angles), 2);
      CHECK(phase_aligned_distance(got_ms, want) < 1e-9);
      CHECK(phase_aligned_distance(got_ms, got_cnot) < 1e-9);
    }
  }
}

TEST_CASE("inverted sequence composes to identity") {
  Rng rng(14);
  auto angles = random_angles(rng, 15);
  GateSequence seq = compile_cnot(angles);
  GateSequence inv = inverted(seq);
  GateSequence both;
  both.ops = seq.ops;
  both.ops.insert(both.ops.end(), inv.ops.begin(), inv.ops.end());
  CHECK(phase_aligned_distance(sequence_matrix(both, 2), Matrix::Identity(4, 4)) <
        1e-10);
}

TEST_SUITE_END();
