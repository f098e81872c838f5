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
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plateau/simulate.hpp"
#include "plateau/state.hpp"

namespace plateau {

/// Parsed and validated experiment configuration.  Validation is strict:
/// unknown keys anywhere in the config are rejected, so a typo fails loudly
/// instead of silently running defaults.
struct ExperimentConfig {
  uint32_t n = 0;
  std::optional<std::pair<uint32_t, uint32_t>> n_range;
  std::vector<PauliString> generators;
  std::vector<CoherentError> coherent_errors;
  nlohmann::json state_spec;       // resolved later (needs n and seed)
  nlohmann::json observable_spec;  // resolved later (needs n)
  SpamNoise spam;

  std::size_t samples = 5000;
  uint64_t seed = 0;
  std::size_t initial_layers = 0;  // 0 = auto (5n)
  ConvergenceSpec convergence;
  ParameterDistribution distribution;

  std::size_t dim_cap = 0;  // 0 = auto (4^n)
  std::vector<int> setups = {0, 1, 2, 3};
  std::vector<double> epsilons;
  std::vector<uint32_t> depth_sizes;

  nlohmann::json echo;  // the resolved config embedded in every report
};

/// Parses a config object for the given command, applying strict key
/// checking.  `overrides` hold CLI-level --n/--samples/--seed values.
ExperimentConfig parse_config(nlohmann::json config, const std::string& command);

/// Builds the initial state from a state spec: {"type":"basis"...},
/// {"type":"statevector"...} or {"type":"prep_circuit"...}.
QuantumState build_state(const nlohmann::json& spec, uint32_t n, uint64_t seed);

/// Builds the observable from {"terms":[{"coeff":..., "pauli":...}]}.
HermitianOp build_observable(const nlohmann::json& spec, uint32_t n);

/// Strict key checking helper (exposed for tests).
void require_keys(const nlohmann::json& object,
                  const std::vector<std::string>& allowed,
                  const std::string& context);

}  // namespace plateau
