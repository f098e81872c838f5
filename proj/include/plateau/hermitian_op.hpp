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

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "plateau/pauli.hpp"

namespace plateau {

/// A Hermitian operator, either as a real combination of Hermitian Pauli
/// words or as a dense d x d Hermitian matrix (the dense form also serves
/// non-qubit dimensions, e.g. spin-S systems).
///
/// Pauli-term lists are canonical: every stored word has phase exponent 0,
/// coefficients are real, terms are deduplicated and sorted by (z, x) masks.
class HermitianOp {
 public:
  using Term = std::pair<double, PauliString>;

  /// Zero operator on n qubits in Pauli form.
  static HermitianOp zero(uint32_t n);

  /// Builds from (coefficient, word) terms.  A term's word may carry a +-1
  /// phase (folded into the coefficient); a +-i phase makes the term
  /// non-Hermitian and throws.
  static HermitianOp from_terms(uint32_t n, std::vector<Term> terms);

  /// Single-word convenience.
  static HermitianOp from_word(const PauliString& word, double coeff = 1.0);

  /// Dense form; validates A = A^dagger to 1e-12 (relative to max entry).
  static HermitianOp from_dense(Eigen::MatrixXcd dense);

  bool is_pauli_form() const { return !dense_.size(); }
  /// Qubit count for Pauli form, 0 for dense-only operators.
  uint32_t num_qubits() const { return n_; }
  /// Hilbert-space dimension (2^n or the dense size).
  Eigen::Index dim() const;

  const std::vector<Term>& terms() const { return terms_; }
  const Eigen::MatrixXcd& dense() const { return dense_; }

  /// Converts Pauli form to a dense matrix (guarded to n <= 13).
  Eigen::MatrixXcd to_dense() const;

  double trace() const;
  /// Tr[H^2] = squared Hilbert-Schmidt norm.
  double hs_norm_sq() const;
  /// Trace norm ||H||_1 (sum of |eigenvalues|).  Single Pauli terms are
  /// exact; other Pauli forms densify, guarded to n <= 13.
  double trace_norm() const;

  /// Coefficient of a phaseless word (0 when absent).
  double coefficient_of(const PauliString& word) const;

  HermitianOp& operator+=(const HermitianOp& o);
  HermitianOp operator+(const HermitianOp& o) const;
  HermitianOp operator*(double s) const;
  HermitianOp& scale(double s);

  std::string str() const;

 private:
  HermitianOp() = default;
  void canonicalize();
  uint32_t n_ = 0;
  std::vector<Term> terms_;
  Eigen::MatrixXcd dense_;
};

/// Hilbert-Schmidt inner product Tr[A^dagger B] = Tr[A B] for Hermitian A, B.
/// Pauli forms use Tr[w w'] = 2^n delta(w, w') termwise; mixed forms densify.
double hs_inner(const HermitianOp& a, const HermitianOp& b);

}  // namespace plateau
