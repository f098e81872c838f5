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

// Test-only reference implementations.  Everything here is built from dense
// matrices and generic linear algebra, independent of the symplectic Pauli
// arithmetic and the closure/decomposition code paths it checks.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "plateau/rng.hpp"

namespace plateau::oracle {

using Cx = std::complex<double>;

/// Dense matrix of a Pauli text token, built by Kronecker products of 2x2
/// letter matrices (no symplectic bit tricks).
Eigen::MatrixXcd dense_pauli(const std::string& text);

/// Nested-commutator closure over dense matrices: returns the dimension of
/// the real span of {i*G} closed under commutation.  Rank decisions via SVD
/// of the vectorized matrices.
int dense_closure_dim(const std::vector<Eigen::MatrixXcd>& generators,
                      int max_dim = 400);

/// Brute-force splitting of a real Lie algebra given by an orthonormal basis
/// of Hermitian matrices: solves the Sylvester system T ad_i = ad_i T by a
/// dense SVD nullspace, draws a random symmetric commutant element and
/// clusters its eigenvalues.  Returns the list of ideal dimensions (sorted).
std::vector<int> dense_ideal_dims(const std::vector<Eigen::MatrixXcd>& basis,
                                  uint64_t seed = 11);

/// Randomized search for a maximal abelian subalgebra dimension: greedy runs
/// over randomly rotated bases, keeping the best.  Small algebras only.
int brute_max_abelian_dim(const std::vector<Eigen::MatrixXcd>& basis,
                          int trials = 64, uint64_t seed = 5);

/// Haar-distributed SU(2) element in the spin-S representation
/// (dim = 2S + 1), sampled via a uniform quaternion and the exponential map.
/// two_s is 2S.
Eigen::MatrixXcd haar_su2_spin(int two_s, SplitMix64& rng);

/// e^{iA} for Hermitian A via eigendecomposition.
Eigen::MatrixXcd expi(const Eigen::MatrixXcd& hermitian);

}  // namespace plateau::oracle
