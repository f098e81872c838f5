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

#include "plateau/variance.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "plateau/errors.hpp"

namespace plateau {

namespace {

HypothesisFlags check_hypothesis(const QuantumState& rho, const HermitianOp& obs,
                                 const DlaDecomposition& dec) {
  if (dec.full.truncated) {
    throw TruncationError("exact statistics refuse a cap-truncated DLA");
  }
  HypothesisFlags flags;
  flags.rho_in_alg = membership_state(rho, dec.full);
  flags.obs_in_alg = membership(obs, dec.full);
  if (!flags.rho_in_alg && !flags.obs_in_alg) {
    throw OutsideTheoryError(
        "neither the state nor the observable lies in i*g; the exact "
        "mean/variance formulas make no claim here");
  }
  return flags;
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

LinearFit fit(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LinearFit f;
  const double denom = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (std::size_t i = 0; i < n; ++i) {
    const double pred = f.slope * x[i] + f.intercept;
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  f.r_squared = ss_tot < 1e-24 ? 1.0 : 1.0 - ss_res / ss_tot;
  return f;
}

}  // namespace

nlohmann::json to_json(const VariancePrediction& p) {
  nlohmann::json ideals = nlohmann::json::array();
  for (const auto& t : p.per_ideal) {
    ideals.push_back({{"dim", t.dim},
                      {"purity_rho", t.purity_rho},
                      {"purity_O", t.purity_obs},
                      {"contribution", t.contribution}});
  }
  return nlohmann::json{
      {"mean", p.mean},
      {"variance", p.variance},
      {"ideals", ideals},
      {"hypothesis",
       {{"rho_in_g", p.hypothesis.rho_in_alg}, {"O_in_g", p.hypothesis.obs_in_alg}}}};
}

double loss_mean(const QuantumState& rho, const HermitianOp& obs,
                 const DlaDecomposition& dec) {
  check_hypothesis(rho, obs, dec);
  // Tr[rho_c O_c] over the orthonormal center basis
  double mean = 0.0;
  for (const auto& b : dec.center.elements) {
    mean += rho.expectation(b) * hs_inner(b, obs);
  }
  return mean;
}

VariancePrediction loss_variance(const QuantumState& rho, const HermitianOp& obs,
                                 const DlaDecomposition& dec) {
  VariancePrediction out;
  out.hypothesis = check_hypothesis(rho, obs, dec);
  for (const auto& b : dec.center.elements) {
    out.mean += rho.expectation(b) * hs_inner(b, obs);
  }
  for (std::size_t k = 0; k < dec.ideals.size(); ++k) {
    VariancePrediction::IdealTerm term;
    term.index = k;
    term.dim = dec.ideals[k].dim();
    term.purity_rho = g_purity(rho, dec.ideals[k].elements);
    term.purity_obs = g_purity(obs, dec.ideals[k].elements);
    term.contribution =
        term.purity_rho * term.purity_obs / static_cast<double>(term.dim);
    out.variance += term.contribution;
    out.per_ideal.push_back(term);
  }
  return out;
}

BpDiagnosis bp_diagnose(const std::vector<FamilyPoint>& family) {
  if (family.size() < 4) {
    throw ConfigError("scaling diagnosis needs at least 4 system sizes");
  }
  BpDiagnosis diag;
  diag.family = family;
  std::vector<double> ns, log_var, log_n, log_dim, log_inv_prho, log_inv_pobs;
  for (const auto& p : family) {
    if (p.variance <= 0.0) {
      throw ConfigError("scaling diagnosis needs strictly positive variances");
    }
    ns.push_back(p.n);
    log_n.push_back(std::log2(static_cast<double>(p.n)));
    log_var.push_back(std::log2(p.variance));
    log_dim.push_back(std::log2(static_cast<double>(p.dim_alg)));
    log_inv_prho.push_back(-std::log2(p.purity_rho));
    log_inv_pobs.push_back(-std::log2(p.purity_obs));
  }
  const LinearFit var_fit = fit(ns, log_var);
  const LinearFit poly_fit = fit(log_n, log_var);
  diag.slope_log2_var_vs_n = var_fit.slope;
  diag.r_squared = var_fit.r_squared;

  if (var_fit.slope <= -0.5 && var_fit.r_squared >= 0.98) {
    diag.verdict = BpVerdict::kBarrenPlateau;
  } else if (std::abs(var_fit.slope) <= 0.25 ||
             (poly_fit.r_squared >= 0.98 &&
              poly_fit.r_squared >= var_fit.r_squared)) {
    // flat, or log2(var) explained by c*log2(n) better than by a linear-in-n
    // decay
    diag.verdict = BpVerdict::kNoBarrenPlateau;
  } else {
    diag.verdict = BpVerdict::kInconclusive;
  }

  if (diag.verdict == BpVerdict::kBarrenPlateau) {
    // a factor counts as exponentially scaling when its log2 grows at least
    // geometrically (slope >= 0.5 bits per qubit) and a linear-in-n fit
    // explains it at least as well as a polynomial (log-log) fit
    auto grows_exponentially = [&](const std::vector<double>& log_vals) {
      const LinearFit lin = fit(ns, log_vals);
      const LinearFit poly = fit(log_n, log_vals);
      return lin.slope >= 0.5 && lin.r_squared >= poly.r_squared;
    };
    const bool dim_exp = grows_exponentially(log_dim);
    const bool rho_exp = grows_exponentially(log_inv_prho);
    const bool obs_exp = grows_exponentially(log_inv_pobs);
    const int flags = int(dim_exp) + int(rho_exp) + int(obs_exp);
    if (flags > 1) {
      diag.dominant_cause = BpCause::kMixed;
    } else if (dim_exp) {
      diag.dominant_cause = BpCause::kExpressiveness;
    } else if (rho_exp) {
      diag.dominant_cause = BpCause::kState;
    } else if (obs_exp) {
      diag.dominant_cause = BpCause::kObservable;
    } else {
      diag.dominant_cause = BpCause::kMixed;
    }
  }
  return diag;
}

const char* to_string(BpVerdict v) {
  switch (v) {
    case BpVerdict::kBarrenPlateau: return "BP";
    case BpVerdict::kNoBarrenPlateau: return "no-BP";
    default: return "inconclusive";
  }
}

const char* to_string(BpCause c) {
  switch (c) {
    case BpCause::kExpressiveness: return "expressiveness";
    case BpCause::kState: return "state";
    case BpCause::kObservable: return "observable";
    case BpCause::kMixed: return "mixed";
    default: return "none";
  }
}

WeightVector weight_vector(const QuantumState& rho, const CartanBasis& cartan) {
  WeightVector wv;
  for (const auto& h : cartan.elements) {
    // || [H, rho] ||_2^2 = 2 (1-p)^2 (<H^2> - <H>^2) for a depolarized pure
    // state; dense states use the direct commutator
    double residual_sq = 0.0;
    if (rho.has_statevector()) {
      const auto& psi = rho.statevector();
      Eigen::VectorXcd hpsi = Eigen::VectorXcd::Zero(psi.size());
      if (h.is_pauli_form()) {
        for (const auto& [c, w] : h.terms()) {
          Eigen::VectorXcd tmp = psi;
          apply_pauli(w, tmp);
          hpsi += c * tmp;
        }
      } else {
        hpsi = h.dense() * psi;
      }
      const double h2 = hpsi.squaredNorm();
      const double h1 = (psi.adjoint() * hpsi)(0).real();
      const double scale = 1.0 - rho.depolarizing_weight();
      residual_sq = 2.0 * scale * scale * std::max(0.0, h2 - h1 * h1);
    } else {
      const Eigen::MatrixXcd hd = h.is_pauli_form() ? h.to_dense() : h.dense();
      const Eigen::MatrixXcd rd = rho.to_density_matrix();
      residual_sq = (hd * rd - rd * hd).squaredNorm();
    }
    if (residual_sq > 1e-16) {
      throw OutsideTheoryError(
          "state does not commute with the Cartan subalgebra (residual " +
          std::to_string(std::sqrt(residual_sq)) + ")");
    }
    const double component = rho.expectation(h);
    wv.components.push_back(component);
    wv.norm_sq += component * component;
  }
  return wv;
}

double weight_state_variance(const QuantumState& rho, const HermitianOp& obs,
                             const DlaDecomposition& dec, const CartanBasis& cartan) {
  if (dec.ideals.size() != 1 || dec.center.dim() != 0) {
    throw OutsideTheoryError(
        "weight-state closed form needs a simple algebra (one ideal, empty center)");
  }
  if (!membership(obs, dec.full)) {
    throw OutsideTheoryError("weight-state closed form needs O in i*g");
  }
  const WeightVector wv = weight_vector(rho, cartan);
  return obs.hs_norm_sq() * wv.norm_sq / static_cast<double>(dec.full.dim());
}

SpinOperators make_spin_operators(int two_s) {
  if (two_s < 1) throw ConfigError("spin must be at least 1/2");
  const int d = two_s + 1;
  const double spin = two_s / 2.0;
  Eigen::MatrixXcd sx = Eigen::MatrixXcd::Zero(d, d), sy = sx, sz = sx;
  for (int k = 0; k < d; ++k) {
    const double m = spin - k;  // row k holds |m = S - k>
    sz(k, k) = m;
    if (k + 1 < d) {
      const double c = 0.5 * std::sqrt(spin * (spin + 1) - m * (m - 1));
      sx(k, k + 1) = c;
      sx(k + 1, k) = c;
      sy(k, k + 1) = std::complex<double>(0, -c);
      sy(k + 1, k) = std::complex<double>(0, c);
    }
  }
  return {HermitianOp::from_dense(std::move(sx)), HermitianOp::from_dense(std::move(sy)),
          HermitianOp::from_dense(std::move(sz))};
}

double spin_variance(double spin, double m, const HermitianOp& obs) {
  const int two_s = static_cast<int>(std::lround(2 * spin));
  if (two_s < 1 || std::abs(two_s / 2.0 - spin) > 1e-12) {
    throw ConfigError("spin must be a positive half-integer");
  }
  const double two_m = 2 * m;
  if (std::abs(two_m - std::lround(two_m)) > 1e-12 ||
      (std::lround(two_m) & 1) != (two_s & 1) || std::abs(m) > spin + 1e-12) {
    throw ConfigError("m must satisfy |m| <= S and m = S mod 1");
  }
  const auto ops = make_spin_operators(two_s);
  if (!obs.is_pauli_form()) {
    // O must lie in the real span of {S_x, S_y, S_z}
    std::vector<HermitianOp> basis;
    for (const HermitianOp* s : {&ops.sx, &ops.sy, &ops.sz}) {
      const double norm = std::sqrt(s->hs_norm_sq());
      basis.push_back(*s * (1.0 / norm));
    }
    double proj_sq = 0.0;
    for (const auto& b : basis) {
      const double c = hs_inner(b, obs);
      proj_sq += c * c;
    }
    const double total = obs.hs_norm_sq();
    if (total - proj_sq > 1e-9 * std::max(1.0, total)) {
      throw OutsideTheoryError("observable lies outside the spin algebra");
    }
  } else {
    throw ConfigError("spin observables must be dense (2S+1)-dimensional operators");
  }
  return m * m * obs.hs_norm_sq() / (spin * (spin + 1) * (2 * spin + 1));
}

}  // namespace plateau
