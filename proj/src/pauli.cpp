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

#include "plateau/pauli.hpp"

#include <bit>
#include <cctype>

#include "plateau/errors.hpp"

namespace plateau {

namespace {
constexpr std::complex<double> kIPowers[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

int popcount(uint64_t v) { return std::popcount(v); }

uint64_t mask_for(uint32_t n) {
  return n == 64 ? ~0ull : ((1ull << n) - 1);
}
}  // namespace

uint32_t PauliString::check_n(uint32_t n) {
  if (n == 0 || n > 64) {
    throw ConfigError("Pauli string qubit count must be in [1, 64], got " +
                      std::to_string(n));
  }
  return n;
}

PauliString::PauliString(uint32_t n, uint64_t x, uint64_t z, uint8_t phase_exponent)
    : n_(check_n(n)), x_(x & mask_for(n)), z_(z & mask_for(n)),
      phase_(phase_exponent & 3) {}

PauliString PauliString::parse(std::string_view text) {
  std::size_t pos = 0;
  uint8_t q = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') q = 2;
    ++pos;
  }
  if (pos < text.size() && (text[pos] == 'i')) {
    q = (q + 1) & 3;
    ++pos;
  }
  if (pos >= text.size()) {
    throw ConfigError("empty Pauli string: '" + std::string(text) + "'");
  }
  const std::size_t n = text.size() - pos;
  if (n > 64) {
    throw ConfigError("Pauli string longer than 64 qubits");
  }
  uint64_t x = 0, z = 0;
  for (std::size_t k = 0; k < n; ++k) {
    switch (std::toupper(static_cast<unsigned char>(text[pos + k]))) {
      case 'I': break;
      case 'X': x |= 1ull << k; break;
      case 'Y': x |= 1ull << k; z |= 1ull << k; break;
      case 'Z': z |= 1ull << k; break;
      default:
        throw ConfigError("invalid character '" + std::string(1, text[pos + k]) +
                          "' at position " + std::to_string(pos + k) +
                          " of Pauli string '" + std::string(text) + "'");
    }
  }
  return PauliString(static_cast<uint32_t>(n), x, z, q);
}

PauliString PauliString::single(uint32_t n, uint32_t qubit, char letter) {
  if (qubit >= n) throw ConfigError("qubit index out of range");
  const uint64_t bit = 1ull << qubit;
  switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'X': return PauliString(n, bit, 0);
    case 'Y': return PauliString(n, bit, bit);
    case 'Z': return PauliString(n, 0, bit);
    default: throw ConfigError("letter must be X, Y or Z");
  }
}

std::complex<double> PauliString::phase() const { return kIPowers[phase_]; }

char PauliString::letter(uint32_t qubit) const {
  const bool xb = (x_ >> qubit) & 1, zb = (z_ >> qubit) & 1;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

bool PauliString::commutes_with(const PauliString& o) const {
  return ((popcount(x_ & o.z_) + popcount(o.x_ & z_)) & 1) == 0;
}

PauliString PauliString::operator*(const PauliString& o) const {
  if (n_ != o.n_) {
    throw ConfigError("Pauli product with mismatched qubit counts " +
                      std::to_string(n_) + " vs " + std::to_string(o.n_));
  }
  // In XZ form P = i^(q + yc) X^x Z^z with yc = |x & z|; pushing X^x2 through
  // Z^z1 costs (-1)^|z1 & x2|, and the product is renormalized back to its
  // Hermitian word.
  const uint64_t x3 = x_ ^ o.x_, z3 = z_ ^ o.z_;
  const int e = phase_ + o.phase_ + popcount(x_ & z_) + popcount(o.x_ & o.z_) +
                2 * popcount(z_ & o.x_) + 4 * 16 - popcount(x3 & z3);
  return PauliString(n_, x3, z3, static_cast<uint8_t>(e & 3));
}

PauliString PauliString::adjoint() const {
  // W = W^dagger, (i^q)^* = i^(-q)
  return PauliString(n_, x_, z_, static_cast<uint8_t>((4 - phase_) & 3));
}

std::string PauliString::str() const {
  std::string out;
  switch (phase_) {
    case 0: break;
    case 1: out += "i"; break;
    case 2: out += "-"; break;
    case 3: out += "-i"; break;
  }
  for (uint32_t k = 0; k < n_; ++k) out += letter(k);
  return out;
}

std::complex<double> PauliString::amplitude_on_basis(uint64_t b) const {
  // P|b> = i^(q + yc) (-1)^|z & b| |b ^ x|
  const int e = (phase_ + popcount(x_ & z_)) & 3;
  const double sign = (popcount(z_ & b) & 1) ? -1.0 : 1.0;
  return kIPowers[e] * sign;
}

Eigen::MatrixXcd PauliString::to_dense() const {
  if (n_ > 13) throw ConfigError("dense Pauli matrix limited to n <= 13");
  const uint64_t d = 1ull << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (uint64_t b = 0; b < d; ++b) {
    m(b ^ x_, b) = amplitude_on_basis(b);
  }
  return m;
}

std::optional<std::pair<std::complex<double>, PauliString>> commutator(
    const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw ConfigError("commutator with mismatched qubit counts");
  }
  if (p.commutes_with(q)) return std::nullopt;
  // Anticommuting words: [P, Q] = 2 PQ.
  const PauliString pq = p * q;
  return std::make_pair(2.0 * pq.phase(), pq.phaseless());
}

std::optional<WordBracket> word_bracket(const PauliString& a, const PauliString& b) {
  auto c = commutator(a, b);
  if (!c) return std::nullopt;
  // Hermitian inputs give [w_a, w_b] = 2 i^e w_c with e odd; with the basis
  // B = i w / sqrt(2^n) this is [B_a, B_b] = (-2 s / sqrt(2^n)) B_c, s = Im i^e.
  const int s = c->first.imag() > 0 ? 1 : -1;
  return WordBracket{s, c->second.x_bits(), c->second.z_bits()};
}

}  // namespace plateau
