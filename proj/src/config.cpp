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

#include "plateau/config.hpp"

#include <algorithm>
#include <cmath>

#include "plateau/errors.hpp"
#include "plateau/rng.hpp"
#include "plateau/simulate.hpp"

namespace plateau {

namespace {

double get_number(const nlohmann::json& j, const std::string& key, double fallback,
                  const std::string& context) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) {
    throw ConfigError(context + "." + key + " must be a number");
  }
  return j.at(key).get<double>();
}

ParameterDistribution parse_distribution(const nlohmann::json& j) {
  ParameterDistribution dist;
  if (j.is_null()) return dist;
  require_keys(j, {"type", "low", "high", "sigma"}, "sampling.distribution");
  const std::string type = j.value("type", "uniform_pi");
  if (type == "uniform_pi") {
    dist.kind = ParameterDistribution::Kind::kUniformPi;
  } else if (type == "uniform") {
    dist.kind = ParameterDistribution::Kind::kUniform;
    dist.lo = get_number(j, "low", 0.0, "distribution");
    dist.hi = get_number(j, "high", 0.0, "distribution");
    if (dist.hi <= dist.lo) throw ConfigError("distribution needs high > low");
  } else if (type == "normal") {
    dist.kind = ParameterDistribution::Kind::kNormal;
    dist.sigma = get_number(j, "sigma", 1.0, "distribution");
    if (dist.sigma <= 0) throw ConfigError("distribution sigma must be positive");
  } else {
    throw ConfigError("unknown distribution type '" + type + "'");
  }
  return dist;
}

}  // namespace

void require_keys(const nlohmann::json& object,
                  const std::vector<std::string>& allowed,
                  const std::string& context) {
  if (!object.is_object()) {
    throw ConfigError(context + " must be a JSON object");
  }
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key '" + key + "' in " + context);
    }
  }
}

ExperimentConfig parse_config(nlohmann::json config, const std::string& command) {
  require_keys(config,
               {"n", "n_range", "generators", "coherent_errors", "state",
                "observable", "noise", "sampling", "dla", "setups", "epsilons",
                "out"},
               "config");
  ExperimentConfig out;

  const bool needs_generators =
      command == "dla" || command == "purity" || command == "variance" ||
      command == "montecarlo";
  const bool needs_state = command == "purity" || command == "variance" ||
                           command == "montecarlo";

  if (command == "reproduce-si") {
    if (!config.contains("n_range")) {
      throw ConfigError("reproduce-si needs n_range: [lo, hi]");
    }
    const auto& r = config.at("n_range");
    if (!r.is_array() || r.size() != 2) {
      throw ConfigError("n_range must be [lo, hi]");
    }
    const uint32_t lo = r[0].get<uint32_t>(), hi = r[1].get<uint32_t>();
    if (lo < 3 || hi > 12 || lo > hi) {
      throw ConfigError("n_range must satisfy 3 <= lo <= hi <= 12");
    }
    out.n_range = {lo, hi};
  }

  if (config.contains("n")) {
    if (!config.at("n").is_number_integer() || config.at("n").get<int64_t>() < 1) {
      throw ConfigError("n must be a positive integer");
    }
    out.n = config.at("n").get<uint32_t>();
  }

  if (command == "depth") {
    if (out.n == 0 && !config.contains("epsilons")) {
      throw ConfigError("depth needs n and an epsilons list");
    }
    if (out.n != 0) out.depth_sizes = {out.n};
    if (config.contains("epsilons")) {
      for (const auto& e : config.at("epsilons")) {
        out.epsilons.push_back(e.get<double>());
      }
    }
    if (out.epsilons.empty()) out.epsilons = {1e-9};
  }

  if (needs_generators) {
    if (!config.contains("generators") || !config.at("generators").is_array() ||
        config.at("generators").empty()) {
      throw ConfigError(command + " needs a nonempty generators array");
    }
    for (const auto& g : config.at("generators")) {
      out.generators.push_back(PauliString::parse(g.get<std::string>()));
    }
    if (out.n == 0) out.n = out.generators.front().num_qubits();
    for (const auto& g : out.generators) {
      if (g.num_qubits() != out.n) {
        throw ConfigError("generator '" + g.str() + "' does not act on n = " +
                          std::to_string(out.n) + " qubits");
      }
      if (!g.is_hermitian()) {
        throw ConfigError("generator '" + g.str() + "' is not Hermitian");
      }
    }
  }

  if (config.contains("coherent_errors")) {
    for (const auto& e : config.at("coherent_errors")) {
      require_keys(e, {"pauli", "alpha"}, "coherent_errors[]");
      out.coherent_errors.push_back(
          {PauliString::parse(e.at("pauli").get<std::string>()),
           e.value("alpha", 0.0)});
    }
  }

  if (needs_state) {
    if (!config.contains("state")) throw ConfigError(command + " needs a state spec");
    out.state_spec = config.at("state");
    if (!config.contains("observable")) {
      throw ConfigError(command + " needs an observable spec");
    }
    out.observable_spec = config.at("observable");
  }
  if (command == "reproduce-si" && config.contains("setups")) {
    out.setups.clear();
    for (const auto& s : config.at("setups")) {
      const int v = s.get<int>();
      if (v < 0 || v > 3) throw ConfigError("setups entries must be 0..3");
      out.setups.push_back(v);
    }
  }

  if (config.contains("noise")) {
    require_keys(config.at("noise"), {"depolarizing_p_before", "depolarizing_p_after"},
                 "noise");
    out.spam.depolarizing_p_before =
        get_number(config.at("noise"), "depolarizing_p_before", 0.0, "noise");
    out.spam.depolarizing_p_after =
        get_number(config.at("noise"), "depolarizing_p_after", 0.0, "noise");
    if (out.spam.depolarizing_p_before < 0 || out.spam.depolarizing_p_before > 1 ||
        out.spam.depolarizing_p_after < 0 || out.spam.depolarizing_p_after > 1) {
      throw ConfigError("noise probabilities must lie in [0, 1]");
    }
  }

  if (config.contains("sampling")) {
    const auto& s = config.at("sampling");
    require_keys(s, {"samples", "seed", "layers", "distribution"}, "sampling");
    if (s.contains("samples")) out.samples = s.at("samples").get<std::size_t>();
    if (s.contains("seed")) out.seed = s.at("seed").get<uint64_t>();
    if (s.contains("layers")) {
      const auto& l = s.at("layers");
      require_keys(l, {"initial", "doubling", "rel_tol", "max_layers"},
                   "sampling.layers");
      out.initial_layers = l.value("initial", 0);
      out.convergence.layer_doubling = l.value("doubling", true);
      out.convergence.rel_tol = get_number(l, "rel_tol", 0.05, "layers");
      out.convergence.max_layers = l.value("max_layers", std::size_t(512));
    }
    if (s.contains("distribution")) {
      out.distribution = parse_distribution(s.at("distribution"));
    }
  }

  if (config.contains("dla")) {
    require_keys(config.at("dla"), {"dim_cap"}, "dla");
    out.dim_cap = config.at("dla").value("dim_cap", std::size_t(0));
  }

  out.echo = std::move(config);
  return out;
}

QuantumState build_state(const nlohmann::json& spec, uint32_t n, uint64_t seed) {
  require_keys(spec, {"type", "bits", "amplitudes", "gates", "seed"}, "state");
  const std::string type = spec.value("type", "basis");
  if (type == "basis") {
    const std::string bits = spec.value("bits", std::string(n, '0'));
    if (bits.size() != n) throw ConfigError("state.bits length must equal n");
    return QuantumState::from_bits(bits);
  }
  if (type == "statevector") {
    if (!spec.contains("amplitudes")) {
      throw ConfigError("statevector state needs amplitudes");
    }
    const auto& amps = spec.at("amplitudes");
    Eigen::VectorXcd psi(amps.size());
    for (std::size_t k = 0; k < amps.size(); ++k) {
      const auto& pair = amps.at(k);
      if (!pair.is_array() || pair.size() != 2) {
        throw ConfigError("amplitudes must be [re, im] pairs");
      }
      psi(k) = std::complex<double>(pair[0].get<double>(), pair[1].get<double>());
    }
    return QuantumState::pure(n, std::move(psi));
  }
  if (type == "prep_circuit") {
    const uint64_t prep_seed = spec.value("seed", seed);
    QuantumState state = QuantumState::basis_state(n, 0);
    SplitMix64 rng = SplitMix64::stream(prep_seed, 0x9e77);
    if (!spec.contains("gates")) throw ConfigError("prep_circuit needs a gates array");
    std::vector<Gate> gates;
    for (const auto& g : spec.at("gates")) {
      require_keys(g, {"type", "pauli", "angle", "layers"}, "state.gates[]");
      const std::string gtype = g.value("type", "");
      if (gtype == "pauli_rotation") {
        gates.push_back(PauliRotationGate{
            PauliString::parse(g.at("pauli").get<std::string>()),
            g.at("angle").get<double>()});
      } else if (gtype == "random_single_qubit_layer") {
        for (uint32_t q = 0; q < n; ++q) {
          // e^{-i (a X + b Y + c Z)} with a, b, c standard normal
          const double a = rng.normal(), b = rng.normal(), c = rng.normal();
          Eigen::Matrix2cd h;
          h << c, std::complex<double>(a, -b), std::complex<double>(a, b), -c;
          const double norm = std::sqrt(a * a + b * b + c * c);
          Eigen::Matrix2cd u;
          if (norm < 1e-15) {
            u = Eigen::Matrix2cd::Identity();
          } else {
            const double angle = norm;
            u = std::cos(angle) * Eigen::Matrix2cd::Identity() -
                std::complex<double>(0, 1) * std::sin(angle) * (h / norm);
          }
          gates.push_back(make_single_qubit_gate(q, u));
        }
      } else if (gtype == "haar_brickwork") {
        const std::size_t layers = g.value("layers", std::size_t(1));
        for (std::size_t l = 0; l < layers; ++l) {
          for (uint32_t q = 0; q + 1 < n; q += 2) {
            gates.push_back(make_two_qubit_gate(q, q + 1, sample_haar_su4(rng)));
          }
          for (uint32_t q = 1; q + 1 < n; q += 2) {
            gates.push_back(make_two_qubit_gate(q, q + 1, sample_haar_su4(rng)));
          }
        }
      } else {
        throw ConfigError("unknown prep gate type '" + gtype + "'");
      }
    }
    return state.transformed(gates);
  }
  throw ConfigError("unknown state type '" + type + "'");
}

HermitianOp build_observable(const nlohmann::json& spec, uint32_t n) {
  require_keys(spec, {"terms"}, "observable");
  if (!spec.contains("terms") || !spec.at("terms").is_array() ||
      spec.at("terms").empty()) {
    throw ConfigError("observable needs a nonempty terms array");
  }
  std::vector<HermitianOp::Term> terms;
  for (const auto& t : spec.at("terms")) {
    require_keys(t, {"coeff", "pauli"}, "observable.terms[]");
    terms.emplace_back(t.at("coeff").get<double>(),
                       PauliString::parse(t.at("pauli").get<std::string>()));
  }
  auto op = HermitianOp::from_terms(n, std::move(terms));
  if (op.num_qubits() != n) throw ConfigError("observable qubit count mismatch");
  return op;
}

}  // namespace plateau
