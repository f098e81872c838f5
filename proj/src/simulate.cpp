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

#include "plateau/simulate.hpp"

#include <cmath>
#include <numbers>

#include "plateau/errors.hpp"

namespace plateau {

namespace {
using Cx = std::complex<double>;

double unbiased_variance(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const double mean = pairwise_sum(values) / static_cast<double>(n);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = (values[i] - mean) * (values[i] - mean);
  return std::max(0.0, pairwise_sum(sq) / static_cast<double>(n - 1));
}

McEstimate estimate_from_losses(const std::vector<double>& losses, uint64_t seed,
                                std::size_t layers) {
  McEstimate est;
  est.num_samples = losses.size();
  est.seed = seed;
  est.layers_used = layers;
  est.mean_hat = pairwise_sum(losses) / static_cast<double>(losses.size());
  est.variance_hat = unbiased_variance(losses);
  // batch means over 20 contiguous blocks
  const std::size_t batches = std::min<std::size_t>(20, losses.size() / 2);
  std::vector<double> batch_vars;
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t lo = b * losses.size() / batches;
    const std::size_t hi = (b + 1) * losses.size() / batches;
    batch_vars.push_back(unbiased_variance(
        std::span<const double>(losses.data() + lo, hi - lo)));
  }
  double acc = 0.0;
  const double mean_bv =
      pairwise_sum(batch_vars) / static_cast<double>(batch_vars.size());
  for (double v : batch_vars) acc += (v - mean_bv) * (v - mean_bv);
  est.stderr_of_variance =
      batches > 1 ? std::sqrt(acc / (batches - 1) / batches) : 0.0;
  return est;
}
}  // namespace

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double ParameterDistribution::sample(SplitMix64& rng) const {
  switch (kind) {
    case Kind::kUniformPi:
      return rng.uniform(-std::numbers::pi, std::numbers::pi);
    case Kind::kUniform:
      return rng.uniform(lo, hi);
    case Kind::kNormal:
      return sigma * rng.normal();
  }
  return 0.0;
}

void CircuitSpec::validate() const {
  if (n == 0 || n > 20) {
    throw ConfigError("statevector simulation supports 1 <= n <= 20 qubits");
  }
  if (layer_generators.empty()) throw ConfigError("circuit layer has no generators");
  if (num_layers < 1) throw ConfigError("circuit needs at least one layer");
  for (const auto& g : layer_generators) {
    if (g.num_qubits() != n) throw ConfigError("generator qubit count mismatch");
    if (!g.is_hermitian()) {
      throw ConfigError("generators must be Hermitian Pauli words: " + g.str());
    }
  }
  if (!coherent_errors.empty() && coherent_errors.size() != layer_generators.size()) {
    throw ConfigError(
        "coherent error list must be empty or match the layer generator count");
  }
  for (const auto& e : coherent_errors) {
    if (e.generator.num_qubits() != n || !e.generator.is_hermitian()) {
      throw ConfigError("coherent error generators must be Hermitian Pauli words");
    }
  }
  if (spam.depolarizing_p_before < 0 || spam.depolarizing_p_before > 1 ||
      spam.depolarizing_p_after < 0 || spam.depolarizing_p_after > 1) {
    throw ConfigError("depolarizing probabilities must lie in [0, 1]");
  }
}

QuantumState apply_circuit(const QuantumState& state, const CircuitSpec& spec,
                           std::span<const double> theta) {
  spec.validate();
  if (state.num_qubits() != spec.n) throw ConfigError("state qubit count mismatch");
  if (theta.size() != spec.total_parameters()) {
    throw ConfigError("expected " + std::to_string(spec.total_parameters()) +
                      " parameters, got " + std::to_string(theta.size()));
  }
  std::vector<Gate> gates;
  gates.reserve(theta.size() * (spec.coherent_errors.empty() ? 1 : 2));
  std::size_t t = 0;
  for (std::size_t l = 0; l < spec.num_layers; ++l) {
    for (std::size_t k = 0; k < spec.layer_generators.size(); ++k) {
      gates.push_back(PauliRotationGate{spec.layer_generators[k], theta[t++]});
      if (!spec.coherent_errors.empty()) {
        gates.push_back(PauliRotationGate{spec.coherent_errors[k].generator,
                                          -spec.coherent_errors[k].alpha});
      }
    }
  }
  return state.transformed(gates);
}

double loss(const QuantumState& state, const HermitianOp& obs,
            const CircuitSpec& spec, std::span<const double> theta) {
  const QuantumState out = apply_circuit(state, spec, theta);
  const double fidelity_factor =
      (1.0 - spec.spam.depolarizing_p_before) * (1.0 - spec.spam.depolarizing_p_after);
  // QuantumState::expectation already folds the state's own depolarizing
  // weight; SPAM channels contribute one more (1-p) contraction each.
  const double raw = out.expectation(obs);
  const double id_part = obs.trace() / std::pow(2.0, spec.n);
  return fidelity_factor * raw + (1.0 - fidelity_factor) * id_part;
}

McEstimate estimate_variance_mc(const QuantumState& state, const HermitianOp& obs,
                                const CircuitSpec& spec, std::size_t num_samples,
                                uint64_t seed, const ConvergenceSpec& convergence) {
  spec.validate();
  if (num_samples < 100) {
    throw ConfigError("variance estimation needs at least 100 samples");
  }
  CircuitSpec stage_spec = spec;
  McEstimate prev;
  bool have_prev = false;
  std::size_t stage = 0;
  while (true) {
    std::vector<double> losses(num_samples);
    for (std::size_t i = 0; i < num_samples; ++i) {
      SplitMix64 stream = SplitMix64::stream(seed, stage * num_samples + i);
      std::vector<double> theta(stage_spec.total_parameters());
      for (auto& v : theta) v = spec.distribution.sample(stream);
      losses[i] = loss(state, obs, stage_spec, theta);
    }
    McEstimate est = estimate_from_losses(losses, seed, stage_spec.num_layers);
    if (!convergence.layer_doubling) return est;
    if (have_prev) {
      const double scale = std::max(std::abs(est.variance_hat), 1e-15);
      if (std::abs(est.variance_hat - prev.variance_hat) <=
          convergence.rel_tol * scale) {
        est.converged = true;
        return est;
      }
    }
    if (stage_spec.num_layers * 2 > convergence.max_layers) {
      est.converged = false;
      return est;
    }
    prev = est;
    have_prev = true;
    stage_spec.num_layers *= 2;
    ++stage;
  }
}

Eigen::Matrix4cd sample_haar_su4(SplitMix64& rng) {
  Eigen::Matrix4cd g;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) g(r, c) = Cx(rng.normal(), rng.normal());
  }
  const Eigen::HouseholderQR<Eigen::Matrix4cd> qr(g);
  Eigen::Matrix4cd q = qr.householderQ();
  const Eigen::Matrix4cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 4; ++k) {
    const Cx d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  // rotate det to 1 (an overall phase, irrelevant under conjugation)
  const Cx det = q.determinant();
  q *= std::pow(det, -0.25);
  return q;
}

McEstimate brickwork_variance_mc(uint32_t n, std::size_t layers,
                                 const QuantumState& state, const HermitianOp& obs,
                                 std::size_t num_samples, uint64_t seed) {
  if (n < 2 || n > 20) throw ConfigError("brickwork supports 2 <= n <= 20");
  if (num_samples < 100) {
    throw ConfigError("variance estimation needs at least 100 samples");
  }
  if (!state.has_statevector()) {
    throw ConfigError("brickwork sampling needs a statevector state");
  }
  const double depol = state.depolarizing_weight();
  std::vector<double> losses(num_samples);
  for (std::size_t i = 0; i < num_samples; ++i) {
    SplitMix64 stream = SplitMix64::stream(seed, i);
    Eigen::VectorXcd psi = state.statevector();
    for (std::size_t l = 0; l < layers; ++l) {
      for (uint32_t q = 0; q + 1 < n; q += 2) {
        apply_two_qubit(sample_haar_su4(stream), q, q + 1, psi);
      }
      for (uint32_t q = 1; q + 1 < n; q += 2) {
        apply_two_qubit(sample_haar_su4(stream), q, q + 1, psi);
      }
    }
    const QuantumState out =
        QuantumState::pure(n, std::move(psi)).with_depolarizing(depol);
    losses[i] = out.expectation(obs);
  }
  return estimate_from_losses(losses, seed, layers);
}

}  // namespace plateau
