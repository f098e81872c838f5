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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "plateau/hermitian_op.hpp"

namespace plateau {

/// Second-moment (transfer) operator of Haar-SU(4) brickwork, reduced to the
/// 2^n-dimensional coefficient space over the product basis {identity,
/// swap} per qubit.  The basis is not orthogonal; eigenvalues are read off
/// the representation matrix directly, which similarity invariance permits.
///
/// A two-qubit Haar gate sends the mixed basis coefficients (c01, c10) to
/// zero while adding 2/5 of their sum to each of c00 and c11; composing the
/// even and odd brick sublayers gives the single-layer operator.  The
/// group-Haar reference operator is rank two with coefficients determined
/// by the swap weight of each basis element.
class ReducedMomentOperator {
 public:
  enum class Mode { kSingleLayer, kGroupHaar };

  ReducedMomentOperator(uint32_t n, Mode mode);

  uint32_t num_qubits() const { return n_; }
  Mode mode() const { return mode_; }

  /// In-place action on a coefficient vector of length 2^n.
  void apply(Eigen::VectorXd& coeffs) const;

  /// Dense representation matrix (guarded to n <= 14).
  Eigen::MatrixXd dense() const;

 private:
  uint32_t n_;
  Mode mode_;
  std::vector<double> alpha_, beta_;  // group-Haar coefficients by swap weight
};

struct LambdaResult {
  double value = 0.0;
  bool converged = false;
  double residual = 0.0;
  int iterations = 0;
};

/// Largest-magnitude eigenvalue of the single-layer-minus-group operator,
/// by power iteration on the reduced space with the two exact invariant
/// directions removed from the start vector; several random restarts guard
/// against an unlucky start.  Matrix-free, n <= 26.
LambdaResult lambda_max(uint32_t n, double tol = 1e-8, int max_iterations = 100000,
                        int restarts = 3, uint64_t seed = 2026);

/// Layers needed to reach an epsilon-approximate design at contraction rate
/// lambda: ceil(log(1/eps) / log(1/lambda)), with lambda = 0 or eps = 1
/// collapsing to the minimum depth 1.  lambda >= 1 carries no guarantee and
/// throws.
int depth_for_epsilon(double lambda, double epsilon);

/// Bound on |Var_L - Var_group|: 3 lambda^L ||O||_1^2.
double variance_gap_bound(double lambda, std::size_t layers, const HermitianOp& obs);

/// Summary for the CLI: lambda plus the depth targets for requested epsilons.
struct ExpressivenessReport {
  uint32_t n = 0;
  LambdaResult lambda;
  std::vector<std::pair<double, int>> depth_targets;  // (epsilon, L)
};

ExpressivenessReport expressiveness_report(uint32_t n,
                                           const std::vector<double>& epsilons,
                                           double tol = 1e-8);

}  // namespace plateau
