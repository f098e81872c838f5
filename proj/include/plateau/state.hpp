// Copyright 2026 The plateau authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "plateau/hermitian_op.hpp"
#include "plateau/pauli.hpp"

namespace plateau {

/// e^{i angle P} for a Hermitian Pauli word P.
struct PauliRotationGate {
  PauliString generator;
  double angle;
};

/// Dense one-qubit unitary.
struct SingleQubitGate {
  uint32_t qubit;
  Eigen::Matrix2cd u;
};

/// Dense two-qubit unitary on qubits (low, high); the gate's local index is
/// bit(low) + 2 * bit(high).
struct TwoQubitGate {
  uint32_t low, high;
  Eigen::Matrix4cd u;
};

using Gate = std::variant<PauliRotationGate, SingleQubitGate, TwoQubitGate>;

/// Validating constructors for dense gate payloads (unitarity to 1e-10).
Gate make_single_qubit_gate(uint32_t qubit, const Eigen::Matrix2cd& u);
Gate make_two_qubit_gate(uint32_t a, uint32_t b, const Eigen::Matrix4cd& u);

// In-place statevector kernels.  Amplitude index bit k addresses qubit k.
void apply_pauli(const PauliString& word, Eigen::VectorXcd& psi);
void apply_pauli_rotation(const PauliString& word, double angle, Eigen::VectorXcd& psi);
void apply_single_qubit(const Eigen::Matrix2cd& u, uint32_t qubit, Eigen::VectorXcd& psi);
void apply_two_qubit(const Eigen::Matrix4cd& u, uint32_t low, uint32_t high,
                     Eigen::VectorXcd& psi);
void apply_gate(const Gate& gate, Eigen::VectorXcd& psi);

/// An n-qubit state: a pure statevector or a dense density operator, in
/// either case mixed with the maximally mixed state by a depolarizing weight
/// p, i.e. rho = (1-p) * base + p * I / 2^n.  Keeping the depolarizing
/// weight symbolic avoids 4^n density matrices for the common
/// pure-state-plus-SPAM configurations.
class QuantumState {
 public:
  static QuantumState basis_state(uint32_t n, uint64_t bits);
  /// Bit string "010...", character k = qubit k.
  static QuantumState from_bits(const std::string& bits);
  /// Validates unit norm to 1e-10.
  static QuantumState pure(uint32_t n, Eigen::VectorXcd amplitudes);
  /// Validates trace 1 to 1e-10 and positive semidefiniteness
  /// (min eigenvalue > -1e-9).
  static QuantumState mixed(uint32_t n, Eigen::MatrixXcd rho);

  uint32_t num_qubits() const { return n_; }
  bool has_statevector() const { return std::holds_alternative<Eigen::VectorXcd>(base_); }
  const Eigen::VectorXcd& statevector() const;
  double depolarizing_weight() const { return depol_; }

  /// Tr[w rho], exact in the depolarizing weight.
  double expectation(const PauliString& word) const;
  double expectation(const HermitianOp& op) const;
  /// Standard purity Tr[rho^2].
  double purity() const;

  /// Extra depolarizing noise: channels compose multiplicatively in (1-p).
  QuantumState with_depolarizing(double p) const;
  /// V rho V^dagger for a gate list V (depolarizing weight commutes through).
  QuantumState transformed(const std::vector<Gate>& gates) const;

  Eigen::MatrixXcd to_density_matrix() const;

 private:
  QuantumState() = default;
  uint32_t n_ = 0;
  std::variant<Eigen::VectorXcd, Eigen::MatrixXcd> base_;
  double depol_ = 0.0;
};

}  // namespace plateau
