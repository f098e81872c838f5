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

#include "plateau/purity.hpp"

#include <cmath>
#include <unordered_map>

#include "plateau/errors.hpp"

namespace plateau {

namespace {
using WordKey = std::pair<uint64_t, uint64_t>;
using WordMap = std::unordered_map<WordKey, std::size_t, PauliWordHash>;
}  // namespace

std::vector<double> component_coefficients(const HermitianOp& h,
                                           const std::vector<HermitianOp>& component) {
  std::vector<double> out;
  out.reserve(component.size());
  for (const auto& b : component) out.push_back(hs_inner(b, h));
  return out;
}

std::vector<double> component_coefficients(const QuantumState& rho,
                                           const std::vector<HermitianOp>& component) {
  // <B, rho> = Tr[B rho], evaluated termwise against the state without
  // materializing rho
  std::vector<double> out;
  out.reserve(component.size());
  for (const auto& b : component) out.push_back(rho.expectation(b));
  return out;
}

HermitianOp project(const HermitianOp& h, const std::vector<HermitianOp>& component) {
  if (component.empty()) {
    return h.is_pauli_form() ? HermitianOp::zero(h.num_qubits())
                             : HermitianOp::from_dense(Eigen::MatrixXcd::Zero(
                                   h.dense().rows(), h.dense().cols()));
  }
  const auto coeffs = component_coefficients(h, component);
  bool pauli = h.is_pauli_form() && component.front().is_pauli_form();
  if (pauli) {
    HermitianOp acc = HermitianOp::zero(h.num_qubits());
    for (std::size_t j = 0; j < component.size(); ++j) {
      if (coeffs[j] != 0.0) acc += component[j] * coeffs[j];
    }
    return acc;
  }
  Eigen::MatrixXcd acc =
      Eigen::MatrixXcd::Zero(component.front().dim(), component.front().dim());
  for (std::size_t j = 0; j < component.size(); ++j) {
    acc += coeffs[j] * component[j].to_dense();
  }
  return HermitianOp::from_dense(std::move(acc));
}

double g_purity(const HermitianOp& h, const std::vector<HermitianOp>& component) {
  double acc = 0.0;
  for (const auto& b : component) {
    const double c = hs_inner(b, h);
    acc += c * c;
  }
  return acc;
}

double g_purity(const QuantumState& rho, const std::vector<HermitianOp>& component) {
  double acc = 0.0;
  for (const auto& b : component) {
    const double c = rho.expectation(b);
    acc += c * c;
  }
  return acc;
}

bool membership(const HermitianOp& h, const DlaBasis& basis) {
  const double norm_sq = h.hs_norm_sq();
  if (norm_sq == 0.0) return true;
  if (h.is_pauli_form()) {
    // exact residual in word-coefficient space
    WordMap support;
    for (const auto& e : basis.elements) {
      for (const auto& [c, w] : e.terms()) {
        support.emplace(WordKey{w.x_bits(), w.z_bits()}, support.size());
      }
    }
    const double scale = std::sqrt(std::pow(2.0, h.num_qubits()));
    double outside_sq = 0.0;
    Eigen::VectorXd vec = Eigen::VectorXd::Zero(support.size());
    for (const auto& [c, w] : h.terms()) {
      const auto it = support.find({w.x_bits(), w.z_bits()});
      if (it == support.end()) {
        outside_sq += c * c * scale * scale;
      } else {
        vec(it->second) = c * scale;
      }
    }
    Eigen::MatrixXd cols(support.size(), basis.dim());
    for (std::size_t j = 0; j < basis.dim(); ++j) {
      Eigen::VectorXd col = Eigen::VectorXd::Zero(support.size());
      for (const auto& [c, w] : basis.elements[j].terms()) {
        col(support.at({w.x_bits(), w.z_bits()})) = c * scale;
      }
      cols.col(j) = col;
    }
    const Eigen::VectorXd residual = vec - cols * (cols.transpose() * vec);
    const double res_sq = residual.squaredNorm() + outside_sq;
    return res_sq < 1e-18 * norm_sq;
  }
  const HermitianOp proj = project(h, basis.elements);
  Eigen::MatrixXcd diff = h.to_dense() - proj.to_dense();
  return diff.squaredNorm() < 1e-18 * norm_sq;
}

bool membership_state(const QuantumState& rho, const DlaBasis& basis) {
  const double tr_sq = rho.purity();
  const double proj_sq = g_purity(rho, basis.elements);
  return (tr_sq - proj_sq) < 1e-14 * std::max(1.0, tr_sq);
}

QuantumState apply_global_depolarizing(const QuantumState& rho, double p) {
  return rho.with_depolarizing(p);
}

QuantumState apply_state_prep_unitary(const QuantumState& rho,
                                      const std::vector<Gate>& gates) {
  return rho.transformed(gates);
}

namespace {
template <typename Operand>
PurityReport report_impl(const Operand& h, const DlaDecomposition& dec) {
  PurityReport report;
  for (std::size_t k = 0; k < dec.ideals.size(); ++k) {
    report.per_component.push_back({"ideal " + std::to_string(k),
                                    dec.ideals[k].dim(),
                                    g_purity(h, dec.ideals[k].elements)});
  }
  report.per_component.push_back(
      {"center", dec.center.dim(), g_purity(h, dec.center.elements)});
  report.total = g_purity(h, dec.full.elements);
  return report;
}
}  // namespace

PurityReport purity_report(const HermitianOp& h, const DlaDecomposition& dec) {
  return report_impl(h, dec);
}

PurityReport purity_report(const QuantumState& rho, const DlaDecomposition& dec) {
  return report_impl(rho, dec);
}

}  // namespace plateau
