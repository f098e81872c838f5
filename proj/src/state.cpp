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

#include "plateau/state.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "plateau/errors.hpp"

namespace plateau {

namespace {
using Cx = std::complex<double>;

void check_unitary(const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXcd gram = u.adjoint() * u;
  if ((gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() >
      1e-10) {
    throw ConfigError("gate payload is not unitary to 1e-10");
  }
}
}  // namespace

Gate make_single_qubit_gate(uint32_t qubit, const Eigen::Matrix2cd& u) {
  check_unitary(u);
  return SingleQubitGate{qubit, u};
}

Gate make_two_qubit_gate(uint32_t a, uint32_t b, const Eigen::Matrix4cd& u) {
  if (a == b) throw ConfigError("two-qubit gate needs distinct qubits");
  check_unitary(u);
  return TwoQubitGate{a, b, u};
}

void apply_pauli(const PauliString& word, Eigen::VectorXcd& psi) {
  const uint64_t d = static_cast<uint64_t>(psi.size());
  const uint64_t x = word.x_bits();
  if (x == 0) {
    for (uint64_t b = 0; b < d; ++b) psi(b) *= word.amplitude_on_basis(b);
    return;
  }
  for (uint64_t b = 0; b < d; ++b) {
    const uint64_t partner = b ^ x;
    if (partner < b) continue;
    const Cx amp_b = psi(b), amp_p = psi(partner);
    psi(partner) = word.amplitude_on_basis(b) * amp_b;
    psi(b) = word.amplitude_on_basis(partner) * amp_p;
  }
}

void apply_pauli_rotation(const PauliString& word, double angle,
                          Eigen::VectorXcd& psi) {
  // e^{i t P} = cos t + i sin t P for involutive P
  if (!word.is_hermitian()) {
    throw ConfigError("rotation generator must be a Hermitian Pauli word");
  }
  const Cx c(std::cos(angle), 0), is(0, std::sin(angle));
  const uint64_t d = static_cast<uint64_t>(psi.size());
  const uint64_t x = word.x_bits();
  if (x == 0) {
    for (uint64_t b = 0; b < d; ++b) {
      psi(b) *= c + is * word.amplitude_on_basis(b);
    }
    return;
  }
  for (uint64_t b = 0; b < d; ++b) {
    const uint64_t partner = b ^ x;
    if (partner < b) continue;
    const Cx amp_b = psi(b), amp_p = psi(partner);
    psi(b) = c * amp_b + is * word.amplitude_on_basis(partner) * amp_p;
    psi(partner) = c * amp_p + is * word.amplitude_on_basis(b) * amp_b;
  }
}

void apply_single_qubit(const Eigen::Matrix2cd& u, uint32_t qubit,
                        Eigen::VectorXcd& psi) {
  const uint64_t d = static_cast<uint64_t>(psi.size());
  const uint64_t bit = 1ull << qubit;
  for (uint64_t b = 0; b < d; ++b) {
    if (b & bit) continue;
    const Cx a0 = psi(b), a1 = psi(b | bit);
    psi(b) = u(0, 0) * a0 + u(0, 1) * a1;
    psi(b | bit) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void apply_two_qubit(const Eigen::Matrix4cd& u, uint32_t low, uint32_t high,
                     Eigen::VectorXcd& psi) {
  const uint64_t d = static_cast<uint64_t>(psi.size());
  const uint64_t bl = 1ull << low, bh = 1ull << high;
  for (uint64_t b = 0; b < d; ++b) {
    if (b & (bl | bh)) continue;
    const uint64_t i0 = b, i1 = b | bl, i2 = b | bh, i3 = b | bl | bh;
    const Cx a0 = psi(i0), a1 = psi(i1), a2 = psi(i2), a3 = psi(i3);
    psi(i0) = u(0, 0) * a0 + u(0, 1) * a1 + u(0, 2) * a2 + u(0, 3) * a3;
    psi(i1) = u(1, 0) * a0 + u(1, 1) * a1 + u(1, 2) * a2 + u(1, 3) * a3;
    psi(i2) = u(2, 0) * a0 + u(2, 1) * a1 + u(2, 2) * a2 + u(2, 3) * a3;
    psi(i3) = u(3, 0) * a0 + u(3, 1) * a1 + u(3, 2) * a2 + u(3, 3) * a3;
  }
}

void apply_gate(const Gate& gate, Eigen::VectorXcd& psi) {
  std::visit(
      [&psi](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PauliRotationGate>) {
          apply_pauli_rotation(g.generator, g.angle, psi);
        } else if constexpr (std::is_same_v<T, SingleQubitGate>) {
          apply_single_qubit(g.u, g.qubit, psi);
        } else {
          apply_two_qubit(g.u, g.low, g.high, psi);
        }
      },
      gate);
}

QuantumState QuantumState::basis_state(uint32_t n, uint64_t bits) {
  if (n == 0 || n > 30) throw ConfigError("statevector states support 1 <= n <= 30");
  QuantumState s;
  s.n_ = n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
  psi(bits) = 1.0;
  s.base_ = std::move(psi);
  return s;
}

QuantumState QuantumState::from_bits(const std::string& bits) {
  uint64_t value = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      value |= 1ull << k;
    } else if (bits[k] != '0') {
      throw ConfigError("basis state bits must be 0/1, got '" + bits + "'");
    }
  }
  return basis_state(static_cast<uint32_t>(bits.size()), value);
}

QuantumState QuantumState::pure(uint32_t n, Eigen::VectorXcd amplitudes) {
  if (amplitudes.size() != (Eigen::Index(1) << n)) {
    throw ConfigError("statevector length must be 2^n");
  }
  if (std::abs(amplitudes.norm() - 1.0) > 1e-10) {
    throw ConfigError("statevector norm must be 1 to 1e-10");
  }
  QuantumState s;
  s.n_ = n;
  s.base_ = std::move(amplitudes);
  return s;
}

QuantumState QuantumState::mixed(uint32_t n, Eigen::MatrixXcd rho) {
  if (rho.rows() != rho.cols() || rho.rows() != (Eigen::Index(1) << n)) {
    throw ConfigError("density matrix must be 2^n x 2^n");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 ||
      std::abs(rho.trace().imag()) > 1e-10) {
    throw ConfigError("density matrix trace must be 1 to 1e-10");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ConfigError("density matrix must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw ConfigError("density matrix must be positive semidefinite");
  }
  QuantumState s;
  s.n_ = n;
  s.base_ = std::move(rho);
  return s;
}

const Eigen::VectorXcd& QuantumState::statevector() const {
  if (!has_statevector()) throw ConfigError("state has no statevector form");
  return std::get<Eigen::VectorXcd>(base_);
}

double QuantumState::expectation(const PauliString& word) const {
  if (word.num_qubits() != n_) throw ConfigError("expectation dimension mismatch");
  double base_val = 0.0;
  if (has_statevector()) {
    const auto& psi = std::get<Eigen::VectorXcd>(base_);
    Cx acc = 0;
    const uint64_t x = word.x_bits();
    for (Eigen::Index b = 0; b < psi.size(); ++b) {
      acc += std::conj(psi(b ^ x)) * word.amplitude_on_basis(b) * psi(b);
    }
    base_val = acc.real();
  } else {
    const auto& rho = std::get<Eigen::MatrixXcd>(base_);
    Cx acc = 0;
    const uint64_t x = word.x_bits();
    for (Eigen::Index b = 0; b < rho.rows(); ++b) {
      acc += word.amplitude_on_basis(b) * rho(b, b ^ x);
    }
    base_val = acc.real();
  }
  const double id_part = word.is_identity_word() ? word.phase().real() : 0.0;
  return (1.0 - depol_) * base_val + depol_ * id_part;
}

double QuantumState::expectation(const HermitianOp& op) const {
  if (op.is_pauli_form()) {
    double acc = 0.0;
    for (const auto& [c, w] : op.terms()) acc += c * expectation(w);
    return acc;
  }
  if (op.dense().rows() != (Eigen::Index(1) << n_)) {
    throw ConfigError("expectation dimension mismatch");
  }
  if (has_statevector() && depol_ == 0.0) {
    const auto& psi = std::get<Eigen::VectorXcd>(base_);
    return (psi.adjoint() * op.dense() * psi)(0).real();
  }
  return (to_density_matrix() * op.dense()).trace().real();
}

double QuantumState::purity() const {
  const double dim = std::pow(2.0, n_);
  double base_purity = 1.0;
  if (!has_statevector()) {
    const auto& rho = std::get<Eigen::MatrixXcd>(base_);
    base_purity = (rho * rho).trace().real();
  }
  // Tr[((1-p) rho + p I/d)^2]; Tr[rho] = 1
  return (1 - depol_) * (1 - depol_) * base_purity +
         2 * depol_ * (1 - depol_) / dim + depol_ * depol_ / dim;
}

QuantumState QuantumState::with_depolarizing(double p) const {
  if (p < 0.0 || p > 1.0) throw ConfigError("depolarizing p must be in [0, 1]");
  QuantumState s = *this;
  s.depol_ = 1.0 - (1.0 - depol_) * (1.0 - p);
  return s;
}

QuantumState QuantumState::transformed(const std::vector<Gate>& gates) const {
  QuantumState s = *this;
  if (has_statevector()) {
    auto& psi = std::get<Eigen::VectorXcd>(s.base_);
    for (const auto& g : gates) apply_gate(g, psi);
    return s;
  }
  auto& rho = std::get<Eigen::MatrixXcd>(s.base_);
  for (const auto& g : gates) {
    for (Eigen::Index col = 0; col < rho.cols(); ++col) {
      Eigen::VectorXcd v = rho.col(col);
      apply_gate(g, v);
      rho.col(col) = v;
    }
    rho = rho.adjoint().eval();
    for (Eigen::Index col = 0; col < rho.cols(); ++col) {
      Eigen::VectorXcd v = rho.col(col);
      apply_gate(g, v);
      rho.col(col) = v;
    }
    rho = rho.adjoint().eval();
  }
  return s;
}

Eigen::MatrixXcd QuantumState::to_density_matrix() const {
  if (n_ > 13) throw ConfigError("dense density matrix limited to n <= 13");
  const Eigen::Index d = Eigen::Index(1) << n_;
  Eigen::MatrixXcd rho;
  if (has_statevector()) {
    const auto& psi = std::get<Eigen::VectorXcd>(base_);
    rho = psi * psi.adjoint();
  } else {
    rho = std::get<Eigen::MatrixXcd>(base_);
  }
  return (1 - depol_) * rho +
         depol_ / static_cast<double>(d) * Eigen::MatrixXcd::Identity(d, d);
}

}  // namespace plateau
