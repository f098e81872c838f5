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
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "plateau/hermitian_op.hpp"
#include "plateau/pauli.hpp"

namespace plateau {

/// Orthonormal basis of (the Hermitian side of) a dynamical Lie algebra.
/// Elements B satisfy <B_i, B_j> = delta_ij under Hilbert-Schmidt; the
/// algebra itself is { i B }.  Closures produce single normalized Pauli
/// words; ideal sub-bases may hold word combinations.
struct DlaBasis {
  uint32_t n = 0;
  std::vector<HermitianOp> elements;
  /// Positions of the (deduplicated) generators inside `elements`.
  std::vector<std::size_t> generator_indices;
  /// True when the closure stopped at its dimension cap.  A truncated basis
  /// spans only part of the algebra and poisons every exact downstream query.
  bool truncated = false;

  std::size_t dim() const { return elements.size(); }
  bool all_single_words() const;
};

/// Reductive split g = g_1 + ... + g_{k-1} + g_k into simple ideals plus the
/// abelian center.
struct DlaDecomposition {
  DlaBasis full;
  std::vector<DlaBasis> ideals;
  DlaBasis center;

  std::vector<std::size_t> ideal_dims() const;
};

/// Orthonormal, mutually commuting, maximal sub-basis of its parent.
struct CartanBasis {
  uint32_t n = 0;
  std::vector<HermitianOp> elements;
  std::string parent;

  std::size_t dim() const { return elements.size(); }
};

/// Lie closure of the generator words: breadth-first nested commutators
/// until no new linearly independent element appears.  Since a commutator of
/// Pauli words is again a single word, linear independence reduces to exact
/// phaseless-word membership.  dim_cap = 0 means 4^n (uncapped at desk
/// scale); hitting the cap is reported through `truncated`, never silently.
DlaBasis lie_closure(const std::vector<PauliString>& generators,
                     std::size_t dim_cap = 0);

/// Closure of generators united with fixed coherent-error generators.
DlaBasis augment_with_coherent_errors(const std::vector<PauliString>& generators,
                                      const std::vector<PauliString>& error_generators,
                                      std::size_t dim_cap = 0);

/// Center of the algebra: the span of basis words commuting with every
/// basis word (exact integer arithmetic for word bases).
DlaBasis center_of(const DlaBasis& basis);

/// Splits a closed word basis into its center plus simple ideals.
///
/// The semisimple part is the span of non-central words.  Its adjoint
/// matrices are signed sub-permutations, so the commutant equation
/// T ad_i = ad_i T is solved exactly by a signed union-find over matrix
/// entries; a random element of that commutant is symmetrized and
/// eigendecomposed, and eigenvalue clusters (relative gap 1e-6) give the
/// ideals.  Each split cluster is verified by bracket closure and, when
/// small enough, by an independent in-ideal commutant test.
DlaDecomposition decompose(const DlaBasis& basis, uint64_t seed = 2026);

/// Greedy maximal mutually-commuting orthonormal subset, preferring
/// computational-basis-diagonal elements, with maximality verified by a rank
/// test on the stacked adjoint constraints (and enlarged if the test finds a
/// missed direction).
CartanBasis cartan_subalgebra(const DlaBasis& parent,
                              const std::string& parent_name = "full");

/// -i on the commutator scale: herm_bracket(A, B) = i[A, B], a Hermitian
/// operator whenever A and B are.  This is the bracket of the algebra
/// carried over to Hermitian representatives.
HermitianOp herm_bracket(const HermitianOp& a, const HermitianOp& b);

/// DLA manifest JSON (bit-exact round-trip).
nlohmann::json to_manifest(const DlaDecomposition& dec,
                           const std::vector<PauliString>& generators);
DlaDecomposition from_manifest(const nlohmann::json& manifest);

}  // namespace plateau
