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

#include <doctest.h>

#include "plateau/errors.hpp"
#include "plateau/rng.hpp"
#include "plateau/variance.hpp"
#include "support/oracles.hpp"

using namespace plateau;

namespace {

std::vector<PauliString> tfim_generators(uint32_t n) {
  std::vector<PauliString> gens;
  for (uint32_t j = 0; j + 1 < n; ++j) {
    std::string s(n, 'I');
    s[j] = 'X';
    s[j + 1] = 'X';
    gens.push_back(PauliString::parse(s));
  }
  for (uint32_t j = 0; j < n; ++j) {
    std::string s(n, 'I');
    s[j] = 'Z';
    gens.push_back(PauliString::parse(s));
  }
  return gens;
}

std::vector<PauliString> single_qubit_generators(uint32_t n) {
  std::vector<PauliString> gens;
  for (uint32_t j = 0; j < n; ++j) {
    gens.push_back(PauliString::single(n, j, 'X'));
    gens.push_back(PauliString::single(n, j, 'Y'));
  }
  return gens;
}

std::vector<PauliString> universal_generators(uint32_t n) {
  std::vector<PauliString> gens;
  for (uint32_t j = 0; j < n; ++j) {
    gens.push_back(PauliString::single(n, j, 'X'));
    gens.push_back(PauliString::single(n, j, 'Z'));
  }
  for (uint32_t j = 0; j + 1 < n; ++j) {
    std::string s(n, 'I');
    s[j] = 'Z';
    s[j + 1] = 'Z';
    gens.push_back(PauliString::parse(s));
  }
  return gens;
}

HermitianOp setup0_observable(uint32_t n) {
  const uint32_t p = n / 2 - 1;  // middle pair of the chain, 0-based
  std::string xx(n, 'I');
  xx[p] = 'X';
  xx[p + 1] = 'X';
  std::string z(n, 'I');
  z[p] = 'Z';
  return HermitianOp::from_terms(
      n, {{1.0, PauliString::parse(xx)}, {1.0, PauliString::parse(z)}});
}

}  // namespace

TEST_SUITE_BEGIN("variance");

TEST_CASE("mean: centerless algebras give zero") {
  const auto dec = decompose(lie_closure(tfim_generators(3)));
  const auto rho = QuantumState::basis_state(3, 0);
  CHECK(loss_mean(rho, setup0_observable(3), dec) == doctest::Approx(0.0));

  const auto sq = decompose(lie_closure(single_qubit_generators(3)));
  const auto x1 = HermitianOp::from_word(PauliString::single(3, 0, 'X'));
  CHECK(loss_mean(QuantumState::basis_state(3, 0), x1, sq) == doctest::Approx(0.0));
}

TEST_CASE("mean: abelian algebra reproduces the constant loss") {
  const auto dec = decompose(lie_closure({PauliString::parse("Z")}));
  const auto rho = QuantumState::from_bits("0");
  const auto obs = HermitianOp::from_word(PauliString::parse("Z"));
  CHECK(loss_mean(rho, obs, dec) == doctest::Approx(1.0));
  const auto pred = loss_variance(rho, obs, dec);
  CHECK(pred.mean == doctest::Approx(1.0));
  CHECK(pred.variance == doctest::Approx(0.0));
}

TEST_CASE("variance: single qubit su(2) gives 1/3") {
  const auto dec = decompose(
      lie_closure({PauliString::parse("X"), PauliString::parse("Z")}));
  const auto rho = QuantumState::from_bits("0");
  const auto obs = HermitianOp::from_word(PauliString::parse("Z"));
  const auto pred = loss_variance(rho, obs, dec);
  CHECK(pred.mean == doctest::Approx(0.0));
  REQUIRE(pred.per_ideal.size() == 1);
  CHECK(pred.per_ideal[0].purity_rho == doctest::Approx(0.5));
  CHECK(pred.per_ideal[0].purity_obs == doctest::Approx(2.0));
  CHECK(pred.variance == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // numerical Haar integration over SU(2) (spin-1/2 is the n=1 circuit)
  SplitMix64 rng(8);
  const Eigen::MatrixXcd z = oracle::dense_pauli("Z");
  Eigen::Vector2cd e0;
  e0 << 1, 0;
  double sum = 0, sum_sq = 0;
  const int samples = 200000;
  for (int s = 0; s < samples; ++s) {
    const Eigen::MatrixXcd u = oracle::haar_su2_spin(1, rng);
    const Eigen::Vector2cd psi = u * e0;
    const double val = (psi.adjoint() * z * psi)(0).real();
    sum += val;
    sum_sq += val * val;
  }
  const double mc_var = sum_sq / samples - (sum / samples) * (sum / samples);
  CHECK(mc_var == doctest::Approx(1.0 / 3.0).epsilon(0.02));
}

TEST_CASE("variance: full algebra two-design value 1/(2^n + 1)") {
  for (uint32_t n : {2u, 3u}) {
    const auto dec = decompose(lie_closure(universal_generators(n)));
    REQUIRE(dec.ideals.size() == 1);
    CHECK(dec.full.dim() == (1u << (2 * n)) - 1);
    const auto rho = QuantumState::basis_state(n, 0);
    const auto obs = HermitianOp::from_word(PauliString::single(n, 0, 'Z'));
    const auto pred = loss_variance(rho, obs, dec);
    CHECK(pred.variance ==
          doctest::Approx(1.0 / (std::pow(2.0, n) + 1)).epsilon(1e-10));
  }
}

TEST_CASE("variance: closed form matches the machinery on random data") {
  SplitMix64 rng(12);
  for (uint32_t n : {2u, 3u}) {
    const auto dec = decompose(lie_closure(universal_generators(n)));
    const uint64_t d = 1ull << n;
    for (int it = 0; it < 10; ++it) {
      Eigen::VectorXcd amps(d);
      for (uint64_t k = 0; k < d; ++k) {
        amps(k) = std::complex<double>(rng.normal(), rng.normal());
      }
      amps.normalize();
      const auto rho = QuantumState::pure(n, amps);
      // random traceless observable
      std::vector<HermitianOp::Term> terms;
      for (uint64_t x = 0; x < d; ++x) {
        for (uint64_t z = 0; z < d; ++z) {
          if (x == 0 && z == 0) continue;
          terms.emplace_back(rng.normal(), PauliString(n, x, z));
        }
      }
      const auto obs = HermitianOp::from_terms(n, terms);
      const auto pred = loss_variance(rho, obs, dec);
      const double closed = obs.hs_norm_sq() * (1.0 - 1.0 / d) / (d * d - 1.0);
      CHECK(pred.variance == doctest::Approx(closed).epsilon(1e-9));
    }
  }
}

TEST_CASE("variance: chain setup values 2/(2n-1)") {
  for (uint32_t n : {3u, 4u, 5u, 6u}) {
    const auto dec = decompose(lie_closure(tfim_generators(n)));
    const auto rho = QuantumState::basis_state(n, 0);
    const auto pred = loss_variance(rho, setup0_observable(n), dec);
    CHECK(pred.mean == doctest::Approx(0.0));
    CHECK(pred.variance == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-10));
    CHECK(pred.hypothesis.obs_in_alg);
    CHECK_FALSE(pred.hypothesis.rho_in_alg);
  }
}

TEST_CASE("hypothesis violations are refused, truncated bases rejected") {
  const auto sq = decompose(lie_closure(single_qubit_generators(3)));
  const auto rho = QuantumState::basis_state(3, 0);
  const auto global_x = HermitianOp::from_word(PauliString::parse("XXX"));
  CHECK_THROWS_AS(loss_variance(rho, global_x, sq), OutsideTheoryError);
  CHECK_THROWS_AS(loss_mean(rho, global_x, sq), OutsideTheoryError);

  DlaDecomposition capped;
  capped.full = lie_closure(tfim_generators(3), 5);
  CHECK_THROWS_AS(
      loss_variance(rho, HermitianOp::from_word(PauliString::parse("ZII")), capped),
      TruncationError);
}

TEST_CASE("per-ideal splitting adds up") {
  const auto dec = decompose(lie_closure(tfim_generators(2)));
  REQUIRE(dec.ideals.size() == 2);
  SplitMix64 rng(21);
  const auto rho = QuantumState::basis_state(2, 0);
  // observable assembled from both ideals
  HermitianOp o1 = HermitianOp::zero(2), o2 = HermitianOp::zero(2);
  for (const auto& e : dec.ideals[0].elements) o1 += e * rng.normal();
  for (const auto& e : dec.ideals[1].elements) o2 += e * rng.normal();
  const auto total = loss_variance(rho, o1 + o2, dec);
  const auto part1 = loss_variance(rho, o1, dec);
  const auto part2 = loss_variance(rho, o2, dec);
  CHECK(total.variance ==
        doctest::Approx(part1.variance + part2.variance).epsilon(1e-9));
  CHECK(total.mean == doctest::Approx(part1.mean + part2.mean).epsilon(1e-9));
  // parts restricted to foreign ideals contribute nothing
  CHECK(part1.per_ideal[1].contribution == doctest::Approx(0.0));
  CHECK(part2.per_ideal[0].contribution == doctest::Approx(0.0));
}

TEST_CASE("depolarizing covariance of the exact prediction") {
  const auto dec = decompose(lie_closure(tfim_generators(3)));
  const auto rho = QuantumState::basis_state(3, 0);
  const auto obs = setup0_observable(3);
  const double base = loss_variance(rho, obs, dec).variance;
  for (double p : {0.1, 0.5, 0.9}) {
    const auto noisy = loss_variance(apply_global_depolarizing(rho, p), obs, dec);
    CHECK(noisy.variance == doctest::Approx((1 - p) * (1 - p) * base).epsilon(1e-10));
  }
}

TEST_CASE("variance formula is symmetric in the hypothesis side") {
  // algebra containing the identity word: both the state and the observable
  // are members, and the prediction is the same symmetric expression
  const auto dec = decompose(lie_closure(
      {PauliString::parse("I"), PauliString::parse("X"), PauliString::parse("Z")}));
  const auto rho = QuantumState::from_bits("0");
  const auto obs = HermitianOp::from_terms(
      1, {{1.0, PauliString::parse("Z")}, {0.25, PauliString::parse("I")}});
  const auto pred = loss_variance(rho, obs, dec);
  CHECK(pred.hypothesis.rho_in_alg);
  CHECK(pred.hypothesis.obs_in_alg);
  // u(2) has center spanned by the identity; su(2) is the lone ideal
  CHECK(pred.mean == doctest::Approx(0.25));
  CHECK(pred.variance == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("scaling diagnosis: chain family is polynomial") {
  std::vector<FamilyPoint> family;
  for (uint32_t n = 3; n <= 9; ++n) {
    const auto dec = decompose(lie_closure(tfim_generators(n)));
    const auto rho = QuantumState::basis_state(n, 0);
    const auto pred = loss_variance(rho, setup0_observable(n), dec);
    family.push_back({n, dec.full.dim(),
                      g_purity(rho, dec.full.elements),
                      g_purity(setup0_observable(n), dec.full.elements),
                      pred.variance});
  }
  const auto diag = bp_diagnose(family);
  CHECK(diag.verdict == BpVerdict::kNoBarrenPlateau);
}

TEST_CASE("scaling diagnosis: universal family is a plateau by expressiveness") {
  std::vector<FamilyPoint> family;
  for (uint32_t n = 2; n <= 5; ++n) {
    const auto dec = decompose(lie_closure(universal_generators(n)));
    const auto rho = QuantumState::basis_state(n, 0);
    const auto obs = HermitianOp::from_word(PauliString::single(n, 0, 'Z'));
    const auto pred = loss_variance(rho, obs, dec);
    family.push_back({n, dec.full.dim(),
                      g_purity(rho, dec.full.elements),
                      g_purity(obs, dec.full.elements),
                      pred.variance});
  }
  const auto diag = bp_diagnose(family);
  CHECK(diag.verdict == BpVerdict::kBarrenPlateau);
  CHECK(diag.dominant_cause == BpCause::kExpressiveness);
  CHECK_THROWS_AS(bp_diagnose({family[0], family[1], family[2]}), ConfigError);
}

TEST_CASE("weight vectors of computational basis states") {
  const uint32_t n = 3;
  const auto basis = lie_closure(tfim_generators(n));
  const auto cartan = cartan_subalgebra(basis);
  REQUIRE(cartan.dim() == n);

  const auto wv = weight_vector(QuantumState::basis_state(n, 0), cartan);
  for (double c : wv.components) {
    CHECK(std::abs(c) == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-12));
    CHECK(c > 0);
  }
  CHECK(wv.norm_sq == doctest::Approx(3.0 / 8.0).epsilon(1e-12));
  CHECK(wv.norm_sq ==
        doctest::Approx(g_purity(QuantumState::basis_state(n, 0), cartan.elements)));

  // maximally mixed: zero weight vector
  const auto mixed = apply_global_depolarizing(QuantumState::basis_state(n, 0), 1.0);
  CHECK(weight_vector(mixed, cartan).norm_sq == doctest::Approx(0.0));

  // |1> on a single qubit flips the sign
  const auto su2 = lie_closure({PauliString::parse("X"), PauliString::parse("Z")});
  const auto c1 = cartan_subalgebra(su2);
  const auto wv1 = weight_vector(QuantumState::from_bits("1"), c1);
  CHECK(wv1.components[0] == doctest::Approx(-1.0 / std::sqrt(2.0)));

  // a state that fails to commute with the Cartan subalgebra is refused
  Eigen::VectorXcd plus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  CHECK_THROWS_AS(weight_vector(QuantumState::pure(1, plus), c1),
                  OutsideTheoryError);
}

TEST_CASE("weight-state closed form matches the general machinery") {
  for (uint32_t n : {3u, 4u, 5u}) {
    const auto dec = decompose(lie_closure(tfim_generators(n)));
    const auto cartan = cartan_subalgebra(dec.full);
    const auto rho = QuantumState::basis_state(n, 0);
    const auto obs = HermitianOp::from_word(PauliString::single(n, 0, 'Z'));
    const double closed = weight_state_variance(rho, obs, dec, cartan);
    CHECK(closed == doctest::Approx(1.0 / (2 * n - 1)).epsilon(1e-10));
    CHECK(closed ==
          doctest::Approx(loss_variance(rho, obs, dec).variance).epsilon(1e-9));
  }
}

TEST_CASE("highest weight maximizes the variance among weight states") {
  const uint32_t n = 3;
  const auto dec = decompose(lie_closure(tfim_generators(n)));
  const auto cartan = cartan_subalgebra(dec.full);
  const auto obs = HermitianOp::from_word(PauliString::single(n, 0, 'Z'));
  const double hw =
      weight_state_variance(QuantumState::basis_state(n, 0), obs, dec, cartan);
  SplitMix64 rng(5);
  for (uint64_t b = 0; b < 8; ++b) {
    CHECK(weight_state_variance(QuantumState::basis_state(n, b), obs, dec, cartan) <=
          hw + 1e-12);
  }
  // strict mixtures of weight states do strictly worse
  for (int it = 0; it < 10; ++it) {
    auto mixture = apply_global_depolarizing(
        QuantumState::basis_state(n, rng.next_u64() % 8), rng.uniform(0.1, 0.9));
    CHECK(weight_state_variance(mixture, obs, dec, cartan) < hw - 1e-6);
  }
  // the bound Tr[O^2] ||lambda_hw||^2 / dim holds across weight states
  const auto hw_wv = weight_vector(QuantumState::basis_state(n, 0), cartan);
  const double bound = obs.hs_norm_sq() * hw_wv.norm_sq / dec.full.dim();
  CHECK(hw <= bound + 1e-12);
}

TEST_CASE("weight-state closed form refuses broken hypotheses") {
  const auto dec2 = decompose(lie_closure(tfim_generators(2)));  // two ideals
  const auto cartan2 = cartan_subalgebra(dec2.full);
  CHECK_THROWS_AS(weight_state_variance(QuantumState::basis_state(2, 0),
                                        HermitianOp::from_word(PauliString::parse("ZI")),
                                        dec2, cartan2),
                  OutsideTheoryError);
  const auto dec3 = decompose(lie_closure(tfim_generators(3)));
  const auto cartan3 = cartan_subalgebra(dec3.full);
  CHECK_THROWS_AS(weight_state_variance(QuantumState::basis_state(3, 0),
                                        HermitianOp::from_word(PauliString::parse("XXX")),
                                        dec3, cartan3),
                  OutsideTheoryError);
}

TEST_CASE("spin variance closed form") {
  for (int two_s : {1, 2, 3, 4}) {
    const double spin = two_s / 2.0;
    const auto ops = make_spin_operators(two_s);
    const auto obs = ops.sz * (1.0 / spin);
    CHECK(spin_variance(spin, spin, obs) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
  const auto ops1 = make_spin_operators(2);  // S = 1
  CHECK(spin_variance(1.0, 0.0, ops1.sz) == doctest::Approx(0.0));

  // S = 3/2, m = 1/2, O = S_z / S: frozen value 1/27
  const auto ops32 = make_spin_operators(3);
  const auto obs32 = ops32.sz * (1.0 / 1.5);
  CHECK(spin_variance(1.5, 0.5, obs32) == doctest::Approx(1.0 / 27.0).epsilon(1e-12));

  CHECK_THROWS_AS(spin_variance(1.5, 1.0, obs32), ConfigError);   // m != S mod 1
  CHECK_THROWS_AS(spin_variance(1.5, 2.5, obs32), ConfigError);   // |m| > S
  // a projector has an identity component: outside the spin algebra
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(4, 4);
  proj(0, 0) = 1;
  CHECK_THROWS_AS(spin_variance(1.5, 0.5, HermitianOp::from_dense(proj)),
                  OutsideTheoryError);
}

TEST_CASE("spin variance matches Haar integration over SU(2)") {
  // spin 3/2, m = 1/2: Monte Carlo over the group, 2% tolerance
  SplitMix64 rng(77);
  const auto ops = make_spin_operators(3);
  const Eigen::MatrixXcd obs = (ops.sz * (1.0 / 1.5)).dense();
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = 1;  // |m = 1/2> in the S_z ladder ordering
  double sum = 0, sum_sq = 0;
  const int samples = 200000;
  for (int s = 0; s < samples; ++s) {
    const Eigen::MatrixXcd u = oracle::haar_su2_spin(3, rng);
    const Eigen::VectorXcd moved = u * psi;
    const double val = (moved.adjoint() * obs * moved)(0).real();
    sum += val;
    sum_sq += val * val;
  }
  const double mc = sum_sq / samples - (sum / samples) * (sum / samples);
  CHECK(mc == doctest::Approx(1.0 / 27.0).epsilon(0.02));
}

TEST_SUITE_END();
