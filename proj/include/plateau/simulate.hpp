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
#include <span>
#include <vector>

#include "plateau/rng.hpp"
#include "plateau/state.hpp"

namespace plateau {

/// Fixed (untrainable) unitary e^{-i alpha K} applied right after its
/// paired parameterized gate.
struct CoherentError {
  PauliString generator;
  double alpha;
};

/// Depolarizing state-preparation and measurement channels.
struct SpamNoise {
  double depolarizing_p_before = 0.0;
  double depolarizing_p_after = 0.0;
};

/// Per-gate sampling law for the trainable angles.  Generators square to the
/// identity, so the loss is 2*pi-periodic per angle and uniform over a full
/// period is the distribution whose deep limit is group-Haar; it is the
/// default but stays configurable.
struct ParameterDistribution {
  enum class Kind { kUniformPi, kUniform, kNormal };
  Kind kind = Kind::kUniformPi;
  double lo = 0.0, hi = 0.0;  // kUniform
  double sigma = 1.0;         // kNormal

  double sample(SplitMix64& rng) const;
};

/// One layer of Pauli-rotation gates, repeated num_layers times.
struct CircuitSpec {
  uint32_t n = 0;
  std::vector<PauliString> layer_generators;
  std::size_t num_layers = 1;
  ParameterDistribution distribution;
  /// Either empty or one entry per layer generator.
  std::vector<CoherentError> coherent_errors;
  SpamNoise spam;

  std::size_t gates_per_layer() const { return layer_generators.size(); }
  std::size_t total_parameters() const { return num_layers * layer_generators.size(); }
  void validate() const;
};

/// Monte Carlo landscape estimate.  stderr_of_variance comes from 20-way
/// batch means.  Identical (seed, config) pairs give bit-identical results:
/// every sample draws from its own counter-based stream, and the reduction
/// is an order-independent pairwise sum.
struct McEstimate {
  std::size_t num_samples = 0;
  double mean_hat = 0.0;
  double variance_hat = 0.0;
  double stderr_of_variance = 0.0;
  uint64_t seed = 0;
  std::size_t layers_used = 0;
  bool converged = true;
};

/// Layer-doubling protocol: double num_layers until two successive variance
/// estimates agree to rel_tol, or the cap is reached (reported through
/// McEstimate::converged, not fatal).
struct ConvergenceSpec {
  bool layer_doubling = true;
  double rel_tol = 0.05;
  std::size_t max_layers = 512;
};

/// Applies the parameterized circuit (with any coherent errors) to a state.
/// theta must hold num_layers * gates_per_layer angles, layer-major.
QuantumState apply_circuit(const QuantumState& state, const CircuitSpec& spec,
                           std::span<const double> theta);

/// Tr[U rho U^dagger O] including SPAM channels, which depolarize the
/// expectation analytically: the loss becomes f * <O>_evolved +
/// (1 - f) Tr[O] / 2^n with f the product of the (1-p) factors.
double loss(const QuantumState& state, const HermitianOp& obs,
            const CircuitSpec& spec, std::span<const double> theta);

McEstimate estimate_variance_mc(const QuantumState& state, const HermitianOp& obs,
                                const CircuitSpec& spec, std::size_t num_samples,
                                uint64_t seed,
                                const ConvergenceSpec& convergence = {});

/// Haar-distributed SU(4) element: complex Ginibre, QR with the R-diagonal
/// phase fix, then determinant normalization.
Eigen::Matrix4cd sample_haar_su4(SplitMix64& rng);

/// Brickwork circuit of independent Haar-SU(4) gates: alternating sublayers
/// on pairs (0,1),(2,3),... then (1,2),(3,4),...; odd n leaves the edge
/// qubit idle per sublayer.
McEstimate brickwork_variance_mc(uint32_t n, std::size_t layers,
                                 const QuantumState& state, const HermitianOp& obs,
                                 std::size_t num_samples, uint64_t seed);

/// Order-independent pairwise sum (deterministic reduction for samples).
double pairwise_sum(std::span<const double> values);

}  // namespace plateau
