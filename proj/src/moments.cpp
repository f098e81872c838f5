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

#include "plateau/moments.hpp"

#include <bit>
#include <cmath>

#include "plateau/errors.hpp"
#include "plateau/rng.hpp"

namespace plateau {

namespace {

// Haar-SU(4) gate block on coefficient bits (a, b): kills the mixed
// configurations and feeds 2/5 of their sum into the aligned ones.
void apply_gate_block(Eigen::VectorXd& c, uint64_t bit_a, uint64_t bit_b) {
  const uint64_t size = static_cast<uint64_t>(c.size());
  for (uint64_t idx = 0; idx < size; ++idx) {
    if (idx & (bit_a | bit_b)) continue;
    const uint64_t i01 = idx | bit_a, i10 = idx | bit_b;
    const double feed = 0.4 * (c(i01) + c(i10));
    c(idx) += feed;
    c(idx | bit_a | bit_b) += feed;
    c(i01) = 0.0;
    c(i10) = 0.0;
  }
}

}  // namespace

ReducedMomentOperator::ReducedMomentOperator(uint32_t n, Mode mode)
    : n_(n), mode_(mode) {
  if (n < 2) throw ConfigError("brickwork moment operators need n >= 2");
  if (n > 26) throw ConfigError("reduced moment operators support n <= 26");
  if (mode_ == Mode::kGroupHaar) {
    // alpha_k, beta_k: image coefficients on the all-identity and all-swap
    // directions for an input of swap weight k
    const double denom = std::pow(4.0, n) - 1.0;
    alpha_.resize(n + 1);
    beta_.resize(n + 1);
    for (uint32_t k = 0; k <= n; ++k) {
      alpha_[k] = (std::pow(2.0, 2.0 * n - k) - std::pow(2.0, k)) / denom;
      beta_[k] = (std::pow(2.0, double(n + k)) - std::pow(2.0, double(n - k))) / denom;
    }
  }
}

void ReducedMomentOperator::apply(Eigen::VectorXd& coeffs) const {
  const uint64_t size = uint64_t(1) << n_;
  if (static_cast<uint64_t>(coeffs.size()) != size) {
    throw ConfigError("coefficient vector must have length 2^n");
  }
  if (mode_ == Mode::kSingleLayer) {
    for (uint32_t q = 0; q + 1 < n_; q += 2) {
      apply_gate_block(coeffs, uint64_t(1) << q, uint64_t(1) << (q + 1));
    }
    for (uint32_t q = 1; q + 1 < n_; q += 2) {
      apply_gate_block(coeffs, uint64_t(1) << q, uint64_t(1) << (q + 1));
    }
    return;
  }
  double on_identity = 0.0, on_swap = 0.0;
  for (uint64_t b = 0; b < size; ++b) {
    const int k = std::popcount(b);
    on_identity += coeffs(b) * alpha_[k];
    on_swap += coeffs(b) * beta_[k];
  }
  coeffs.setZero();
  coeffs(0) = on_identity;
  coeffs(size - 1) = on_swap;
}

Eigen::MatrixXd ReducedMomentOperator::dense() const {
  if (n_ > 14) throw ConfigError("dense reduced operators limited to n <= 14");
  const Eigen::Index d = Eigen::Index(1) << n_;
  Eigen::MatrixXd m(d, d);
  Eigen::VectorXd col(d);
  for (Eigen::Index b = 0; b < d; ++b) {
    col.setZero();
    col(b) = 1.0;
    apply(col);
    m.col(b) = col;
  }
  return m;
}

LambdaResult lambda_max(uint32_t n, double tol, int max_iterations, int restarts,
                        uint64_t seed) {
  const ReducedMomentOperator layer(n, ReducedMomentOperator::Mode::kSingleLayer);
  const ReducedMomentOperator group(n, ReducedMomentOperator::Mode::kGroupHaar);
  const uint64_t size = uint64_t(1) << n;

  auto apply_diff = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd lv = v, gv = v;
    layer.apply(lv);
    group.apply(gv);
    lv -= gv;
    return lv;
  };

  auto make_start = [&](uint64_t stream) {
    SplitMix64 rng = SplitMix64::stream(seed, stream);
    Eigen::VectorXd v(size);
    for (uint64_t b = 0; b < size; ++b) v(b) = rng.uniform01();
    // remove the two exact invariant directions
    v(0) = 0.0;
    v(size - 1) = 0.0;
    v.normalize();
    return v;
  };

  // short scouting runs pick the best start, which then iterates to tol
  Eigen::VectorXd best_v;
  double best_lambda = -1.0;
  for (int r = 0; r < restarts; ++r) {
    Eigen::VectorXd v = make_start(r);
    double lambda = 0.0;
    for (int it = 0; it < 40; ++it) {
      Eigen::VectorXd av = apply_diff(v);
      lambda = av.norm();
      if (lambda < 1e-14) break;
      v = av / lambda;
    }
    if (lambda > best_lambda) {
      best_lambda = lambda;
      best_v = v;
    }
  }

  LambdaResult result;
  if (best_lambda < 1e-14) {
    // the difference operator annihilates everything reachable: lambda = 0
    result.value = 0.0;
    result.converged = true;
    result.residual = best_lambda;
    result.iterations = 40 * restarts;
    return result;
  }

  Eigen::VectorXd v = best_v;
  double lambda = best_lambda;
  int it = 0;
  for (; it < max_iterations; ++it) {
    Eigen::VectorXd av = apply_diff(v);
    const double next = av.norm();
    if (next < 1e-14) {
      lambda = 0.0;
      result.converged = true;
      break;
    }
    av /= next;
    if (std::abs(next - lambda) < tol * std::max(1.0, std::abs(next))) {
      lambda = next;
      v = av;
      result.converged = true;
      break;
    }
    lambda = next;
    v = av;
  }
  result.value = lambda;
  result.iterations = it + 40 * restarts;
  const Eigen::VectorXd av = apply_diff(v);
  const double rayleigh = v.dot(av);
  result.residual = (av - rayleigh * v).norm();
  return result;
}

int depth_for_epsilon(double lambda, double epsilon) {
  if (lambda < 0.0 || lambda >= 1.0) {
    throw ConfigError(
        "depth bound needs 0 <= lambda < 1; a layer with lambda >= 1 carries "
        "no convergence guarantee");
  }
  if (epsilon <= 0.0 || epsilon > 1.0) {
    throw ConfigError("epsilon must lie in (0, 1]");
  }
  if (lambda == 0.0 || epsilon == 1.0) return 1;
  const double ratio = std::log(1.0 / epsilon) / std::log(1.0 / lambda);
  return std::max(1, static_cast<int>(std::ceil(ratio - 1e-9)));
}

double variance_gap_bound(double lambda, std::size_t layers, const HermitianOp& obs) {
  const double trace_norm = obs.trace_norm();
  return 3.0 * std::pow(lambda, static_cast<double>(layers)) * trace_norm * trace_norm;
}

ExpressivenessReport expressiveness_report(uint32_t n,
                                           const std::vector<double>& epsilons,
                                           double tol) {
  ExpressivenessReport report;
  report.n = n;
  report.lambda = lambda_max(n, tol);
  for (double eps : epsilons) {
    report.depth_targets.emplace_back(eps,
                                      depth_for_epsilon(report.lambda.value, eps));
  }
  return report;
}

}  // namespace plateau
