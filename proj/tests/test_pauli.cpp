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

#include <complex>

#include "plateau/errors.hpp"
#include "plateau/hermitian_op.hpp"
#include "plateau/pauli.hpp"
#include "plateau/rng.hpp"
#include "support/oracles.hpp"

using namespace plateau;
using Cx = std::complex<double>;

namespace {

PauliString random_word(uint32_t n, SplitMix64& rng) {
  const uint64_t mask = n == 64 ? ~0ull : ((1ull << n) - 1);
  return PauliString(n, rng.next_u64() & mask, rng.next_u64() & mask,
                     static_cast<uint8_t>(rng.next_u64() & 3));
}

}  // namespace

TEST_SUITE_BEGIN("pauli");

TEST_CASE("parse encodes the symplectic form") {
  const auto xi = PauliString::parse("XI");
  CHECK(xi.num_qubits() == 2);
  CHECK(xi.x_bits() == 0b01);  // qubit 0 carries the X
  CHECK(xi.z_bits() == 0);
  CHECK(xi.phase() == Cx(1, 0));

  const auto y = PauliString::parse("Y");
  CHECK(y.x_bits() == 1);
  CHECK(y.z_bits() == 1);
  CHECK(y.phase() == Cx(1, 0));
  CHECK(y.is_hermitian());

  const auto xyz = PauliString::parse("XYZ");
  CHECK(xyz.x_bits() == 0b011);
  CHECK(xyz.z_bits() == 0b110);
  CHECK(xyz.is_hermitian());
  // Hermiticity of the canonical word against an 8x8 dense construction.
  const Eigen::MatrixXcd m = oracle::dense_pauli("XYZ");
  CHECK((m - m.adjoint()).norm() == doctest::Approx(0).epsilon(1e-14));
  CHECK((xyz.to_dense() - m).norm() == doctest::Approx(0).epsilon(1e-14));
}

TEST_CASE("parse accepts phase tokens and rejects junk") {
  CHECK(PauliString::parse("-iXY").phase() == Cx(0, -1));
  CHECK(PauliString::parse("iZ").phase() == Cx(0, 1));
  CHECK(PauliString::parse("+xz") == PauliString::parse("XZ"));
  CHECK_THROWS_AS(PauliString::parse(""), ConfigError);
  CHECK_THROWS_AS(PauliString::parse("-"), ConfigError);
  CHECK_THROWS_AS(PauliString::parse("XQZ"), ConfigError);
}

TEST_CASE("render round-trips") {
  SplitMix64 rng(42);
  for (int it = 0; it < 2000; ++it) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng.next_u64() % 16);
    const PauliString p = random_word(n, rng);
    CHECK(PauliString::parse(p.str()) == p);
  }
}

TEST_CASE("phaseless words square to the identity") {
  SplitMix64 rng(7);
  for (int it = 0; it < 2000; ++it) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng.next_u64() % 24);
    const PauliString p = random_word(n, rng).phaseless();
    const PauliString sq = p * p;
    CHECK(sq.is_identity_word());
    CHECK(sq.phase_exponent() == 0);
  }
}

TEST_CASE("single-qubit products match the Pauli table") {
  const auto X = PauliString::parse("X");
  const auto Y = PauliString::parse("Y");
  const auto Z = PauliString::parse("Z");
  CHECK(X * Y == PauliString(1, 0, 1, 1));   // XY = iZ
  CHECK(Y * X == PauliString(1, 0, 1, 3));   // YX = -iZ
  CHECK(Y * Z == PauliString(1, 1, 0, 1));   // YZ = iX
  CHECK(Z * X == PauliString(1, 1, 1, 1));   // ZX = iY
  CHECK((X * X).is_identity_word());
}

TEST_CASE("two-qubit product frozen case: (XX)(ZI) = -i YX") {
  const auto prod = PauliString::parse("XX") * PauliString::parse("ZI");
  CHECK(prod.phase() == Cx(0, -1));
  CHECK(prod.phaseless() == PauliString::parse("YX"));
  CHECK(prod.str() == "-iYX");
}

TEST_CASE("commutator basics") {
  const auto c = commutator(PauliString::parse("X"), PauliString::parse("Y"));
  REQUIRE(c.has_value());
  CHECK(c->first == Cx(0, 2));  // [X, Y] = 2i Z
  CHECK(c->second == PauliString::parse("Z"));

  CHECK_FALSE(commutator(PauliString::parse("XX"), PauliString::parse("YY")));

  const auto c2 = commutator(PauliString::parse("XX"), PauliString::parse("ZI"));
  REQUIRE(c2.has_value());
  CHECK(c2->first == Cx(0, -2));
  CHECK(c2->second == PauliString::parse("YX"));

  CHECK_THROWS_AS(commutator(PauliString::parse("X"), PauliString::parse("XX")),
                  ConfigError);
  CHECK_THROWS_AS(PauliString::parse("X") * PauliString::parse("XX"), ConfigError);
}

TEST_CASE("commutator agrees with the dense oracle on 10^4 random pairs") {
  SplitMix64 rng(2026);
  int nontrivial = 0;
  for (int it = 0; it < 10000; ++it) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng.next_u64() % 8);
    const PauliString p = random_word(n, rng);
    const PauliString q = random_word(n, rng);
    const Eigen::MatrixXcd dp = oracle::dense_pauli(p.str());
    const Eigen::MatrixXcd dq = oracle::dense_pauli(q.str());

    const auto c = commutator(p, q);
    const int symplectic =
        __builtin_popcountll(p.x_bits() & q.z_bits()) +
        __builtin_popcountll(q.x_bits() & p.z_bits());
    CHECK(c.has_value() == (symplectic % 2 == 1));

    // Probe the dense commutator on a few basis columns; Pauli matrices are
    // monomial so each column has a single entry.
    const uint64_t d = 1ull << n;
    for (int probe = 0; probe < 4; ++probe) {
      const uint64_t b = rng.next_u64() % d;
      Eigen::VectorXcd col = dp * (dq * Eigen::VectorXcd::Unit(d, b)) -
                             dq * (dp * Eigen::VectorXcd::Unit(d, b));
      if (c) {
        Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(d);
        const PauliString w = c->second;
        expect(b ^ w.x_bits()) = c->first * w.amplitude_on_basis(b);
        CHECK((col - expect).norm() < 1e-12);
        ++nontrivial;
      } else {
        CHECK(col.norm() < 1e-12);
      }
    }
  }
  CHECK(nontrivial > 1000);
}

TEST_CASE("multiply is associative and phase-exact on random triples") {
  SplitMix64 rng(99);
  for (int it = 0; it < 10000; ++it) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng.next_u64() % 32);
    const PauliString p = random_word(n, rng);
    const PauliString q = random_word(n, rng);
    const PauliString r = random_word(n, rng);
    CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("hs_inner on single qubits") {
  const auto X = HermitianOp::from_word(PauliString::parse("X"));
  const auto Z = HermitianOp::from_word(PauliString::parse("Z"));
  CHECK(hs_inner(X, X) == doctest::Approx(2.0));
  CHECK(hs_inner(X, Z) == doctest::Approx(0.0));
}

TEST_CASE("hs_inner frozen case <XX + ZI, XX> = 4") {
  const auto a = HermitianOp::from_terms(
      2, {{1.0, PauliString::parse("XX")}, {1.0, PauliString::parse("ZI")}});
  const auto b = HermitianOp::from_word(PauliString::parse("XX"));
  CHECK(hs_inner(a, b) == doctest::Approx(4.0));
  // dense trace oracle
  const Eigen::MatrixXcd da =
      oracle::dense_pauli("XX") + oracle::dense_pauli("ZI");
  const Eigen::MatrixXcd db = oracle::dense_pauli("XX");
  CHECK((da.adjoint() * db).trace().real() == doctest::Approx(4.0));
}

TEST_CASE("hs_inner on the normalized word basis is the Kronecker delta") {
  const uint32_t n = 2;
  const double norm = 1.0 / std::sqrt(std::pow(2.0, n));
  std::vector<HermitianOp> basis;
  for (uint64_t x = 0; x < 4; ++x) {
    for (uint64_t z = 0; z < 4; ++z) {
      basis.push_back(HermitianOp::from_word(PauliString(n, x, z), norm));
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      CHECK(hs_inner(basis[i], basis[j]) ==
            doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("HermitianOp canonicalization dedups and folds signs") {
  const auto op = HermitianOp::from_terms(
      2, {{1.0, PauliString::parse("XX")},
          {2.0, PauliString::parse("-XX")},
          {0.5, PauliString::parse("ZI")}});
  REQUIRE(op.terms().size() == 2);
  CHECK(op.coefficient_of(PauliString::parse("XX")) == doctest::Approx(-1.0));
  CHECK(op.coefficient_of(PauliString::parse("ZI")) == doctest::Approx(0.5));
  CHECK_THROWS_AS(
      HermitianOp::from_terms(2, {{1.0, PauliString::parse("iXX")}}), ConfigError);
}

TEST_CASE("HermitianOp dense validation") {
  Eigen::MatrixXcd bad(2, 2);
  bad << 0, Cx(0, 1), Cx(0, 1), 0;  // not Hermitian
  CHECK_THROWS_AS(HermitianOp::from_dense(bad), ConfigError);
  Eigen::MatrixXcd good(2, 2);
  good << 1, Cx(0, -1), Cx(0, 1), -1;
  const auto op = HermitianOp::from_dense(good);
  CHECK(op.trace() == doctest::Approx(0.0));
  CHECK(op.hs_norm_sq() == doctest::Approx(4.0));
}

TEST_CASE("trace and trace norm") {
  const auto z1 = HermitianOp::from_word(PauliString::parse("ZII"));
  CHECK(z1.trace() == doctest::Approx(0.0));
  CHECK(z1.trace_norm() == doctest::Approx(8.0));  // ||Z_1||_1 = 2^n
  const auto idop = HermitianOp::from_word(PauliString(3), 2.0);
  CHECK(idop.trace() == doctest::Approx(16.0));
}

TEST_SUITE_END();
