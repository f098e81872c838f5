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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace plateau {

/// A signed n-qubit Pauli word in symplectic bit form, n <= 64.
///
/// The stored value is P = i^q * W(x, z), where W is the Hermitian word with
/// letters I/X/Y/Z (bit i of x set means an X or Y on qubit i, bit i of z
/// means Z or Y) and q in {0,1,2,3} is a 2-bit power of i.  Keeping the
/// Y-count inside W makes W itself Hermitian, so a word is Hermitian exactly
/// when q is even.  All phase arithmetic is integer, so products and
/// commutators are exact.
class PauliString {
 public:
  /// Identity word on n qubits.
  explicit PauliString(uint32_t n) : n_(check_n(n)), x_(0), z_(0), phase_(0) {}

  PauliString(uint32_t n, uint64_t x, uint64_t z, uint8_t phase_exponent = 0);

  /// Parses `[+-]?[i]?[IXYZ]{n}` (letters case-insensitive).  Character k of
  /// the body addresses qubit k.  Throws ConfigError on malformed input.
  static PauliString parse(std::string_view text);

  /// Single nontrivial letter ('X', 'Y' or 'Z') on one qubit.
  static PauliString single(uint32_t n, uint32_t qubit, char letter);

  uint32_t num_qubits() const { return n_; }
  uint64_t x_bits() const { return x_; }
  uint64_t z_bits() const { return z_; }
  uint8_t phase_exponent() const { return phase_; }
  std::complex<double> phase() const;

  bool is_hermitian() const { return (phase_ & 1) == 0; }
  bool is_identity_word() const { return x_ == 0 && z_ == 0; }
  char letter(uint32_t qubit) const;

  /// Same phaseless word (phase ignored).  This is the equality used for
  /// set membership during closures.
  bool same_word(const PauliString& o) const { return x_ == o.x_ && z_ == o.z_; }
  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_ && phase_ == o.phase_;
  }

  /// Copy with phase exponent forced to 0 (the canonical Hermitian word).
  PauliString phaseless() const { return PauliString(n_, x_, z_, 0); }

  /// True when the symplectic form <x_P, z_Q> + <x_Q, z_P> is even.
  bool commutes_with(const PauliString& o) const;

  /// Exact product PQ.  Throws on mismatched qubit counts.
  PauliString operator*(const PauliString& o) const;

  /// Inverts P: for Pauli words P^-1 = P up to phase conjugation.
  PauliString adjoint() const;

  std::string str() const;

  /// Dense 2^n x 2^n matrix.  Guarded to n <= 13.
  Eigen::MatrixXcd to_dense() const;

  /// P|b> = amp * |b ^ x>; returns the amplitude for source index b.
  std::complex<double> amplitude_on_basis(uint64_t b) const;

 private:
  static uint32_t check_n(uint32_t n);
  uint32_t n_;
  uint64_t x_, z_;
  uint8_t phase_;
};

/// [P, Q] = 2 PQ when P and Q anticommute, nothing when they commute.  The
/// returned string is phaseless; the complex coefficient absorbs the phase
/// (and the factor 2).
std::optional<std::pair<std::complex<double>, PauliString>> commutator(
    const PauliString& p, const PauliString& q);

/// Bracket arithmetic restricted to Hermitian words, as used by Lie closures:
/// with B_a = i*w_a / sqrt(2^n) orthonormal, [B_a, B_b] = (-2 s / sqrt(2^n)) B_c.
/// Returns {s, c-word} or nothing when the words commute.
struct WordBracket {
  int sign;          // s in {-1, +1}
  uint64_t x, z;     // phaseless result word
};
std::optional<WordBracket> word_bracket(const PauliString& a, const PauliString& b);

struct PauliWordHash {
  std::size_t operator()(const std::pair<uint64_t, uint64_t>& key) const {
    // splitmix-style mix of the two masks
    uint64_t h = key.first * 0x9e3779b97f4a7c15ull ^ (key.second + 0xbf58476d1ce4e5b9ull);
    h ^= h >> 29;
    h *= 0x94d049bb133111ebull;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace plateau
