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

#include <string>
#include <vector>

#include "plateau/dla.hpp"
#include "plateau/hermitian_op.hpp"
#include "plateau/state.hpp"

namespace plateau {

/// <B_j, H> coefficients of H against an orthonormal component basis.
std::vector<double> component_coefficients(const HermitianOp& h,
                                           const std::vector<HermitianOp>& component);
std::vector<double> component_coefficients(const QuantumState& rho,
                                           const std::vector<HermitianOp>& component);

/// Orthogonal projection H_g = sum_j <B_j, H> B_j onto the component span.
HermitianOp project(const HermitianOp& h, const std::vector<HermitianOp>& component);

/// Purity of the projection: sum_j <B_j, H>^2 = Tr[H_g^2].
double g_purity(const HermitianOp& h, const std::vector<HermitianOp>& component);
double g_purity(const QuantumState& rho, const std::vector<HermitianOp>& component);

/// True when || H - H_g ||_2 < 1e-9 || H ||_2.  The Pauli-form path computes
/// the residual exactly in coefficient space (no cancellation).
bool membership(const HermitianOp& h, const DlaBasis& basis);

/// State-side membership without materializing rho: residual^2 =
/// Tr[rho^2] - purity, compared against a floor of 1e-14 * Tr[rho^2] that
/// absorbs the cancellation noise of the subtraction.  States are members
/// essentially only when the identity direction lies inside the algebra.
bool membership_state(const QuantumState& rho, const DlaBasis& basis);

/// Global depolarizing channel rho -> (1-p) rho + p I / 2^n.
QuantumState apply_global_depolarizing(const QuantumState& rho, double p);

/// V rho V^dagger for a state-preparation gate list.
QuantumState apply_state_prep_unitary(const QuantumState& rho,
                                      const std::vector<Gate>& gates);

/// Per-component purities across a reductive decomposition.
struct PurityReport {
  struct Entry {
    std::string component;  // "center" or "ideal <k>"
    std::size_t dim;
    double purity;
  };
  std::vector<Entry> per_component;
  double total;  // purity against the full basis
};

PurityReport purity_report(const HermitianOp& h, const DlaDecomposition& dec);
PurityReport purity_report(const QuantumState& rho, const DlaDecomposition& dec);

}  // namespace plateau
