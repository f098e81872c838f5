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
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plateau/dla.hpp"
#include "plateau/purity.hpp"
#include "plateau/state.hpp"

namespace plateau {

/// Which side of the exact-statistics hypothesis holds.  At least one flag
/// must be set for loss_mean / loss_variance to return a value.
struct HypothesisFlags {
  bool rho_in_alg = false;
  bool obs_in_alg = false;
};

/// Exact landscape statistics for a deep circuit over a reductive algebra:
/// the mean lives on the center, the variance is a sum of per-simple-ideal
/// contributions purity(rho) * purity(O) / dim.
struct VariancePrediction {
  struct IdealTerm {
    std::size_t index;
    std::size_t dim;
    double purity_rho;
    double purity_obs;
    double contribution;
  };
  double mean = 0.0;
  double variance = 0.0;
  std::vector<IdealTerm> per_ideal;
  HypothesisFlags hypothesis;
};

nlohmann::json to_json(const VariancePrediction& p);

/// E[loss] = Tr[rho_center O_center].  Throws OutsideTheoryError when
/// neither rho nor O lies in i*g, TruncationError on capped bases.
double loss_mean(const QuantumState& rho, const HermitianOp& obs,
                 const DlaDecomposition& dec);

VariancePrediction loss_variance(const QuantumState& rho, const HermitianOp& obs,
                                 const DlaDecomposition& dec);

/// One problem instance of a size family, used for scaling diagnosis.
struct FamilyPoint {
  uint32_t n;
  std::size_t dim_alg;
  double purity_rho;
  double purity_obs;
  double variance;
};

enum class BpVerdict { kBarrenPlateau, kNoBarrenPlateau, kInconclusive };
enum class BpCause { kNone, kExpressiveness, kState, kObservable, kMixed };

/// Scaling diagnosis over a family of >= 4 sizes.  The verdict rule is a
/// declared finite-range heuristic: least-squares fit of log2(variance)
/// against n; slope <= -0.5 with R^2 >= 0.98 reads as exponential decay
/// (barren plateau); an essentially flat trend or a clean fit of
/// log2(variance) against log2(n) reads as polynomial (no plateau).
struct BpDiagnosis {
  std::vector<FamilyPoint> family;
  double slope_log2_var_vs_n = 0.0;
  double r_squared = 0.0;
  BpVerdict verdict = BpVerdict::kInconclusive;
  BpCause dominant_cause = BpCause::kNone;
};

BpDiagnosis bp_diagnose(const std::vector<FamilyPoint>& family);

const char* to_string(BpVerdict v);
const char* to_string(BpCause c);

/// Weight components lambda_rho(H_j) = Tr[H_j rho] of a state commuting with
/// every Cartan element.
struct WeightVector {
  std::vector<double> components;
  double norm_sq = 0.0;
};

/// Throws OutsideTheoryError when rho fails to commute with the Cartan
/// subalgebra (commutation residual 1e-8).
WeightVector weight_vector(const QuantumState& rho, const CartanBasis& cartan);

/// Closed form for a simple algebra, an observable inside it, and a weight
/// state: variance = Tr[O^2] * ||lambda_rho||^2 / dim(g).
double weight_state_variance(const QuantumState& rho, const HermitianOp& obs,
                             const DlaDecomposition& dec, const CartanBasis& cartan);

/// Hermitian spin operators {S_x, S_y, S_z} for spin S = two_s / 2, acting
/// on C^(2S+1).
struct SpinOperators {
  HermitianOp sx, sy, sz;
};
SpinOperators make_spin_operators(int two_s);

/// Closed-form landscape variance for the irreducible spin-S circuit with a
/// weight state |m><m| and an observable inside the spin algebra:
/// variance = m^2 Tr[O^2] / (S (S+1) (2S+1)).
double spin_variance(double spin, double m, const HermitianOp& obs);

}  // namespace plateau
