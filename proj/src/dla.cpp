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

#include "plateau/dla.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "plateau/errors.hpp"
#include "plateau/rng.hpp"

namespace plateau {

namespace {

using WordKey = std::pair<uint64_t, uint64_t>;
using WordMap = std::unordered_map<WordKey, std::size_t, PauliWordHash>;

WordKey key_of(const PauliString& w) { return {w.x_bits(), w.z_bits()}; }

bool word_key_less(const WordKey& a, const WordKey& b) {
  if (a.second != b.second) return a.second < b.second;
  return a.first < b.first;
}

/// Union-find over matrix-entry indices with a sign parity per link and a
/// zero flag per class.  Solves the commutant system T ad_i = ad_i T exactly
/// when the ad_i are signed sub-permutations.
class SignedUnionFind {
 public:
  explicit SignedUnionFind(std::size_t size)
      : parent_(size), parity_(size, 0), zero_(size, 0) {
    for (std::size_t i = 0; i < size; ++i) parent_[i] = i;
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    int par = 0;
    std::size_t root = x;
    while (parent_[root] != root) {
      par ^= parity_[root];
      root = parent_[root];
    }
    // path compression with parity rewrite
    std::size_t cur = x;
    int cur_par = par;
    while (parent_[cur] != cur) {
      const std::size_t next = parent_[cur];
      const int next_par = cur_par ^ parity_[cur];
      parent_[cur] = root;
      parity_[cur] = static_cast<uint8_t>(cur_par);
      cur = next;
      cur_par = next_par;
    }
    return {root, par};
  }

  /// Enforce T[a] = sign * T[b].
  void unite(std::size_t a, std::size_t b, int sign) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    const int rel = pa ^ pb ^ (sign < 0 ? 1 : 0);
    if (ra == rb) {
      if (rel) zero_[ra] = 1;  // T[a] = -T[a]
      return;
    }
    parent_[ra] = rb;
    parity_[ra] = static_cast<uint8_t>(rel);
    zero_[rb] |= zero_[ra];
  }

  void mark_zero(std::size_t a) { zero_[find(a).first] = 1; }
  bool is_zero(std::size_t a) { return zero_[find(a).first]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<uint8_t> parity_;
  std::vector<uint8_t> zero_;
};

HermitianOp normalized_word_element(uint32_t n, const WordKey& k) {
  const double norm = 1.0 / std::sqrt(std::pow(2.0, n));
  return HermitianOp::from_word(PauliString(n, k.first, k.second), norm);
}

/// Coefficient vector of `op` over the listed words, in units of the
/// normalized basis w/sqrt(2^n).  Entries not covered by `index` are
/// accumulated into *outside (squared norm) when given.
Eigen::VectorXd coefficients_over_words(const HermitianOp& op, const WordMap& index,
                                        std::size_t m, double* outside_sq) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(m);
  const double scale = std::sqrt(std::pow(2.0, op.num_qubits()));
  for (const auto& [coeff, w] : op.terms()) {
    const auto it = index.find(key_of(w));
    if (it == index.end()) {
      if (outside_sq) *outside_sq += coeff * coeff * scale * scale;
      continue;
    }
    c(it->second) += coeff * scale;
  }
  return c;
}

struct AdjointTables {
  // to[i][b] = index of the bracket word of (w_i, w_b), or -1; sgn holds the
  // structure-constant sign s with herm_bracket(e_i, e_b) = (-2 s / sqrt(2^n)) e_c.
  std::vector<std::vector<int32_t>> to;
  std::vector<std::vector<int8_t>> sgn;
  std::vector<std::vector<int32_t>> inv;
};

AdjointTables build_adjoint_tables(const std::vector<PauliString>& words,
                                   const WordMap& index) {
  const std::size_t m = words.size();
  AdjointTables t;
  t.to.assign(m, std::vector<int32_t>(m, -1));
  t.sgn.assign(m, std::vector<int8_t>(m, 0));
  t.inv.assign(m, std::vector<int32_t>(m, -1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto br = word_bracket(words[i], words[b]);
      if (!br) continue;
      const auto it = index.find({br->x, br->z});
      if (it == index.end()) {
        throw ConfigError("basis is not closed under commutation");
      }
      t.to[i][b] = static_cast<int32_t>(it->second);
      t.sgn[i][b] = static_cast<int8_t>(br->sign);
      t.inv[i][it->second] = static_cast<int32_t>(b);
    }
  }
  return t;
}

/// Dense in-ideal commutant dimension via a stacked Sylvester nullspace,
/// used as an independent verification for small split clusters.
int dense_commutant_dim(const std::vector<Eigen::VectorXd>& basis_coeffs,
                        const AdjointTables& tables, double normalizer) {
  const int d = static_cast<int>(basis_coeffs.size());
  const std::size_t m = basis_coeffs[0].size();
  // structure constants of the cluster basis
  std::vector<Eigen::MatrixXd> ad(d, Eigen::MatrixXd::Zero(d, d));
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      Eigen::VectorXd bracket = Eigen::VectorXd::Zero(m);
      for (std::size_t a = 0; a < m; ++a) {
        const double ca = basis_coeffs[p](a);
        if (ca == 0.0) continue;
        for (std::size_t b = 0; b < m; ++b) {
          const double cb = basis_coeffs[q](b);
          if (cb == 0.0 || tables.to[a][b] < 0) continue;
          bracket(tables.to[a][b]) += ca * cb * (-2.0 * tables.sgn[a][b]) * normalizer;
        }
      }
      for (int r = 0; r < d; ++r) ad[p](r, q) = basis_coeffs[r].dot(bracket);
    }
  }
  Eigen::MatrixXd sys(d * d * d, d * d);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  for (int p = 0; p < d; ++p) {
    // vec(T ad_p - ad_p T) rows
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(d * d, d * d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        for (int k = 0; k < d; ++k) {
          block(r + d * c, r + d * k) += ad[p](k, c);
          block(r + d * c, k + d * c) -= ad[p](r, k);
        }
    sys.block(p * d * d, 0, d * d, d * d) = block;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys);
  const auto& sv = svd.singularValues();
  int nullity = 0;
  for (int k = 0; k < sv.size(); ++k) {
    if (sv(k) < 1e-8 * std::max(1.0, sv(0))) ++nullity;
  }
  nullity += static_cast<int>(d * d - sv.size());
  return nullity;
}

}  // namespace

bool DlaBasis::all_single_words() const {
  return std::all_of(elements.begin(), elements.end(), [](const HermitianOp& e) {
    return e.is_pauli_form() && e.terms().size() == 1;
  });
}

std::vector<std::size_t> DlaDecomposition::ideal_dims() const {
  std::vector<std::size_t> dims;
  dims.reserve(ideals.size());
  for (const auto& g : ideals) dims.push_back(g.dim());
  return dims;
}

DlaBasis lie_closure(const std::vector<PauliString>& generators,
                     std::size_t dim_cap) {
  if (generators.empty()) throw ConfigError("lie_closure needs at least one generator");
  const uint32_t n = generators.front().num_qubits();
  for (const auto& g : generators) {
    if (g.num_qubits() != n) throw ConfigError("generators have inconsistent qubit counts");
  }
  if (dim_cap == 0) {
    dim_cap = n >= 31 ? std::numeric_limits<std::size_t>::max() : (std::size_t(1) << (2 * n));
  }
  if (dim_cap < generators.size()) {
    throw ConfigError("dim_cap smaller than the generator count");
  }

  std::vector<WordKey> words;
  WordMap seen;
  bool truncated = false;
  auto add = [&](const WordKey& k) {
    if (seen.emplace(k, words.size()).second) words.push_back(k);
  };
  for (const auto& g : generators) add(key_of(g));  // dedup by phaseless form

  const std::size_t n_gens = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words.size() > dim_cap) {
      truncated = true;
      break;
    }
    const PauliString wi(n, words[i].first, words[i].second);
    for (std::size_t j = 0; j < i; ++j) {
      const PauliString wj(n, words[j].first, words[j].second);
      if (const auto br = word_bracket(wi, wj)) add({br->x, br->z});
    }
  }
  if (words.size() > dim_cap) truncated = true;

  std::vector<WordKey> sorted(words.begin(),
                              words.begin() + std::min(words.size(), dim_cap));
  std::sort(sorted.begin(), sorted.end(), word_key_less);

  DlaBasis basis;
  basis.n = n;
  basis.truncated = truncated;
  basis.elements.reserve(sorted.size());
  for (const auto& k : sorted) basis.elements.push_back(normalized_word_element(n, k));
  for (std::size_t g = 0; g < n_gens; ++g) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), words[g], word_key_less);
    if (it != sorted.end() && *it == words[g]) {
      basis.generator_indices.push_back(
          static_cast<std::size_t>(it - sorted.begin()));
    }
  }
  return basis;
}

DlaBasis augment_with_coherent_errors(const std::vector<PauliString>& generators,
                                      const std::vector<PauliString>& error_generators,
                                      std::size_t dim_cap) {
  std::vector<PauliString> all = generators;
  all.insert(all.end(), error_generators.begin(), error_generators.end());
  return lie_closure(all, dim_cap);
}

DlaBasis center_of(const DlaBasis& basis) {
  if (!basis.all_single_words()) {
    throw ConfigError("center_of requires a Pauli-word basis");
  }
  std::vector<PauliString> words;
  words.reserve(basis.dim());
  for (const auto& e : basis.elements) words.push_back(e.terms()[0].second);

  DlaBasis center;
  center.n = basis.n;
  for (std::size_t i = 0; i < words.size(); ++i) {
    bool central = true;
    for (std::size_t j = 0; j < words.size() && central; ++j) {
      central = words[i].commutes_with(words[j]);
    }
    if (central) center.elements.push_back(basis.elements[i]);
  }
  return center;
}

DlaDecomposition decompose(const DlaBasis& basis, uint64_t seed) {
  if (basis.truncated) {
    throw TruncationError("cannot decompose a cap-truncated DLA basis");
  }
  if (!basis.all_single_words()) {
    throw ConfigError("decompose requires a Pauli-word basis");
  }
  const uint32_t n = basis.n;

  DlaDecomposition dec;
  dec.full = basis;
  dec.center.n = n;

  // center = words commuting with every word; the rest spans [g, g]
  std::vector<PauliString> all_words, ss_words;
  for (const auto& e : basis.elements) all_words.push_back(e.terms()[0].second);
  std::vector<std::size_t> ss_positions;
  for (std::size_t i = 0; i < all_words.size(); ++i) {
    bool central = true;
    for (std::size_t j = 0; j < all_words.size() && central; ++j) {
      central = all_words[i].commutes_with(all_words[j]);
    }
    if (central) {
      dec.center.elements.push_back(basis.elements[i]);
    } else {
      ss_words.push_back(all_words[i]);
      ss_positions.push_back(i);
    }
  }
  const std::size_t m = ss_words.size();
  if (m == 0) return dec;
  if (m > 2048) {
    throw ConfigError("decompose supports semisimple dimension <= 2048, got " +
                      std::to_string(m));
  }

  WordMap ss_index;
  for (std::size_t i = 0; i < m; ++i) ss_index.emplace(key_of(ss_words[i]), i);
  const AdjointTables tables = build_adjoint_tables(ss_words, ss_index);

  // exact commutant of { ad_i } via signed union-find over T entries
  SignedUnionFind uf(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& to = tables.to[i];
    const auto& sgn = tables.sgn[i];
    const auto& inv = tables.inv[i];
    for (std::size_t b = 0; b < m; ++b) {
      if (to[b] >= 0) {
        const std::size_t sb = static_cast<std::size_t>(to[b]);
        for (std::size_t a = 0; a < m; ++a) {
          if (inv[a] >= 0) {
            const std::size_t ia = static_cast<std::size_t>(inv[a]);
            uf.unite(a * m + sb, ia * m + b, sgn[b] * sgn[ia]);
          } else {
            uf.mark_zero(a * m + sb);
          }
        }
      } else {
        for (std::size_t a = 0; a < m; ++a) {
          if (inv[a] >= 0) uf.mark_zero(static_cast<std::size_t>(inv[a]) * m + b);
        }
      }
    }
  }
  std::unordered_map<std::size_t, std::size_t> orbit_ids;
  std::vector<std::size_t> orbit_of(m * m, SIZE_MAX);
  for (std::size_t p = 0; p < m * m; ++p) {
    if (uf.is_zero(p)) continue;
    const auto root = uf.find(p).first;
    const auto it = orbit_ids.emplace(root, orbit_ids.size()).first;
    orbit_of[p] = it->second;
  }
  const std::size_t num_ideals = orbit_ids.size();

  const double normalizer = 1.0 / std::sqrt(std::pow(2.0, n));

  if (num_ideals == 1) {
    // single simple ideal: the word basis itself already spans it
    DlaBasis ideal;
    ideal.n = n;
    for (const auto pos : ss_positions) ideal.elements.push_back(basis.elements[pos]);
    dec.ideals.push_back(std::move(ideal));
    return dec;
  }

  // random commutant element, symmetrized, eigendecomposed
  Eigen::MatrixXd t_sym;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  std::vector<std::pair<std::size_t, std::size_t>> clusters;  // [begin, end)
  std::string gap_report;
  bool clustered = false;
  for (int attempt = 0; attempt < 3 && !clustered; ++attempt) {
    SplitMix64 rng(seed + attempt);
    std::vector<double> gamma(num_ideals);
    for (auto& g : gamma) g = rng.normal();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        const std::size_t p = a * m + b;
        if (orbit_of[p] == SIZE_MAX) continue;
        const int par = uf.find(p).second;
        t(a, b) = (par ? -1.0 : 1.0) * gamma[orbit_of[p]];
      }
    }
    t_sym = 0.5 * (t + t.transpose());
    es.compute(t_sym);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double scale = std::max(1e-12, ev.cwiseAbs().maxCoeff());
    clusters.clear();
    std::size_t begin = 0;
    for (std::size_t k = 1; k < m; ++k) {
      if (std::abs(ev(k) - ev(k - 1)) > 1e-6 * scale) {
        clusters.emplace_back(begin, k);
        begin = k;
      }
    }
    clusters.emplace_back(begin, m);
    if (clusters.size() == num_ideals) {
      clustered = true;
    } else {
      std::ostringstream os;
      os << "expected " << num_ideals << " eigenvalue clusters, found "
         << clusters.size() << "; gaps:";
      for (std::size_t k = 1; k < m; ++k) {
        os << " " << std::abs(ev(k) - ev(k - 1)) / scale;
      }
      gap_report = os.str();
    }
  }
  if (!clustered) {
    throw ConvergenceError("ideal splitting failed to cluster eigenvalues: " +
                           gap_report);
  }

  for (const auto& [begin, end] : clusters) {
    const std::size_t d = end - begin;
    // modified Gram-Schmidt pass over the eigenvector columns, re-orthogonalized
    std::vector<Eigen::VectorXd> cols;
    for (std::size_t k = begin; k < end; ++k) cols.push_back(es.eigenvectors().col(k));
    for (int round = 0; round < 2; ++round) {
      for (std::size_t p = 0; p < cols.size(); ++p) {
        for (std::size_t q = 0; q < p; ++q) cols[p] -= cols[q].dot(cols[p]) * cols[q];
        cols[p].normalize();
      }
    }
    for (auto& c : cols) {
      for (Eigen::Index a = 0; a < c.size(); ++a) {
        if (std::abs(c(a)) < 1e-13) c(a) = 0.0;
      }
      c.normalize();
    }

    // verify bracket closure inside the cluster
    Eigen::MatrixXd v(m, d);
    for (std::size_t p = 0; p < d; ++p) v.col(p) = cols[p];
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p; q < d; ++q) {
        Eigen::VectorXd bracket = Eigen::VectorXd::Zero(m);
        for (std::size_t a = 0; a < m; ++a) {
          if (cols[p](a) == 0.0) continue;
          for (std::size_t b = 0; b < m; ++b) {
            if (cols[q](b) == 0.0 || tables.to[a][b] < 0) continue;
            bracket(tables.to[a][b]) +=
                cols[p](a) * cols[q](b) * (-2.0 * tables.sgn[a][b]) * normalizer;
          }
        }
        const Eigen::VectorXd residual = bracket - v * (v.transpose() * bracket);
        if (residual.norm() > 1e-9 * (1.0 + bracket.norm())) {
          throw ConvergenceError("ideal candidate is not bracket-closed");
        }
      }
    }
    if (d <= 24 && dense_commutant_dim(cols, tables, normalizer) != 1) {
      throw ConvergenceError("ideal candidate is not simple (in-ideal commutant > 1)");
    }

    DlaBasis ideal;
    ideal.n = n;
    for (const auto& c : cols) {
      std::vector<HermitianOp::Term> terms;
      for (Eigen::Index a = 0; a < c.size(); ++a) {
        if (c(a) != 0.0) terms.emplace_back(c(a) * normalizer, ss_words[a]);
      }
      ideal.elements.push_back(HermitianOp::from_terms(n, std::move(terms)));
    }
    dec.ideals.push_back(std::move(ideal));
  }
  return dec;
}

HermitianOp herm_bracket(const HermitianOp& a, const HermitianOp& b) {
  if (a.is_pauli_form() && b.is_pauli_form()) {
    if (a.num_qubits() != b.num_qubits()) throw ConfigError("bracket dimension mismatch");
    std::vector<HermitianOp::Term> terms;
    for (const auto& [ca, wa] : a.terms()) {
      for (const auto& [cb, wb] : b.terms()) {
        if (const auto br = word_bracket(wa, wb)) {
          terms.emplace_back(ca * cb * (-2.0 * br->sign),
                             PauliString(a.num_qubits(), br->x, br->z));
        }
      }
    }
    return HermitianOp::from_terms(a.num_qubits(), std::move(terms));
  }
  const Eigen::MatrixXcd da = a.to_dense();
  const Eigen::MatrixXcd db = b.to_dense();
  return HermitianOp::from_dense(std::complex<double>(0, 1) * (da * db - db * da));
}

CartanBasis cartan_subalgebra(const DlaBasis& parent, const std::string& parent_name) {
  if (parent.dim() == 0) throw ConfigError("cartan_subalgebra of an empty basis");
  const uint32_t n = parent.n;

  auto is_diagonal = [](const HermitianOp& e) {
    if (!e.is_pauli_form()) return false;
    return std::all_of(e.terms().begin(), e.terms().end(),
                       [](const auto& t) { return t.second.x_bits() == 0; });
  };
  auto ops_commute = [](const HermitianOp& a, const HermitianOp& b) {
    if (a.terms().size() == 1 && b.terms().size() == 1) {
      return a.terms()[0].second.commutes_with(b.terms()[0].second);
    }
    return herm_bracket(a, b).hs_norm_sq() < 1e-18;
  };

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < parent.dim(); ++i) {
    if (is_diagonal(parent.elements[i])) order.push_back(i);
  }
  for (std::size_t i = 0; i < parent.dim(); ++i) {
    if (!is_diagonal(parent.elements[i])) order.push_back(i);
  }

  std::vector<HermitianOp> selected;
  for (const auto idx : order) {
    const auto& cand = parent.elements[idx];
    bool ok = true;
    for (const auto& s : selected) ok = ok && ops_commute(cand, s);
    if (ok) selected.push_back(cand);
  }

  // maximality: kernel of the stacked adjoint constraints must equal span(h)
  const std::size_t dim = parent.dim();
  // word support of the parent
  WordMap support;
  for (const auto& e : parent.elements) {
    for (const auto& [c, w] : e.terms()) support.emplace(key_of(w), support.size());
  }
  const std::size_t nw = support.size();
  Eigen::MatrixXd basis_mat(nw, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    basis_mat.col(p) = coefficients_over_words(parent.elements[p], support, nw, nullptr);
  }

  for (int round = 0; round < 8; ++round) {
    Eigen::MatrixXd stacked(selected.size() * nw, dim);
    for (std::size_t q = 0; q < selected.size(); ++q) {
      for (std::size_t p = 0; p < dim; ++p) {
        double outside = 0.0;
        const HermitianOp br = herm_bracket(parent.elements[p], selected[q]);
        stacked.block(q * nw, p, nw, 1) =
            coefficients_over_words(br, support, nw, &outside);
        if (outside > 1e-18) {
          throw ConfigError("cartan_subalgebra parent is not bracket-closed");
        }
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    std::size_t nullity = dim - sv.size();
    for (int k = 0; k < sv.size(); ++k) {
      if (sv(k) < 1e-9 * std::max(1.0, sv(0))) ++nullity;
    }
    if (nullity <= selected.size()) break;
    // a direction commuting with all of h was missed: take the kernel vector
    // furthest from span(h) and add it
    Eigen::MatrixXd h_mat(nw, selected.size());
    for (std::size_t q = 0; q < selected.size(); ++q) {
      h_mat.col(q) = coefficients_over_words(selected[q], support, nw, nullptr);
    }
    Eigen::VectorXd best;
    double best_norm = 0.0;
    for (std::size_t k = 0; k < nullity; ++k) {
      const Eigen::VectorXd cand = svd.matrixV().col(dim - 1 - k);
      Eigen::VectorXd word_vec = basis_mat * cand;
      word_vec -= h_mat * (h_mat.transpose() * word_vec);
      if (word_vec.norm() > best_norm) {
        best_norm = word_vec.norm();
        best = word_vec;
      }
    }
    if (best_norm < 1e-8) break;
    best.normalize();
    std::vector<HermitianOp::Term> terms;
    const double normalizer = 1.0 / std::sqrt(std::pow(2.0, n));
    for (const auto& [k, i] : support) {
      if (std::abs(best(i)) > 1e-13) {
        terms.emplace_back(best(i) * normalizer, PauliString(n, k.first, k.second));
      }
    }
    selected.push_back(HermitianOp::from_terms(n, std::move(terms)));
  }

  CartanBasis cartan;
  cartan.n = n;
  cartan.parent = parent_name;
  cartan.elements = std::move(selected);
  return cartan;
}

nlohmann::json to_manifest(const DlaDecomposition& dec,
                           const std::vector<PauliString>& generators) {
  auto basis_json = [](const DlaBasis& b) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : b.elements) {
      nlohmann::json el = nlohmann::json::array();
      for (const auto& [c, w] : e.terms()) {
        el.push_back({{"coeff", c}, {"string", w.str()}});
      }
      arr.push_back(el);
    }
    return nlohmann::json{{"dim", b.dim()}, {"basis", arr}};
  };
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators) gens.push_back(g.str());
  nlohmann::json ideals = nlohmann::json::array();
  for (const auto& g : dec.ideals) ideals.push_back(basis_json(g));
  nlohmann::json manifest{{"n", dec.full.n},
                          {"generators", gens},
                          {"dim", dec.full.dim()},
                          {"truncated", dec.full.truncated},
                          {"center", basis_json(dec.center)},
                          {"ideals", ideals}};
  if (dec.full.truncated) {
    // a capped closure has no decomposition; keep its raw basis reloadable
    manifest["basis"] = basis_json(dec.full).at("basis");
  }
  return manifest;
}

DlaDecomposition from_manifest(const nlohmann::json& manifest) {
  const uint32_t n = manifest.at("n").get<uint32_t>();
  auto basis_from = [n](const nlohmann::json& b) {
    DlaBasis out;
    out.n = n;
    for (const auto& el : b.at("basis")) {
      std::vector<HermitianOp::Term> terms;
      for (const auto& t : el) {
        terms.emplace_back(t.at("coeff").get<double>(),
                           PauliString::parse(t.at("string").get<std::string>()));
      }
      out.elements.push_back(HermitianOp::from_terms(n, std::move(terms)));
    }
    if (out.dim() != b.at("dim").get<std::size_t>()) {
      throw ConfigError("manifest dim field does not match its basis");
    }
    return out;
  };
  DlaDecomposition dec;
  dec.center = basis_from(manifest.at("center"));
  for (const auto& g : manifest.at("ideals")) dec.ideals.push_back(basis_from(g));
  dec.full.n = n;
  dec.full.truncated = manifest.at("truncated").get<bool>();
  if (dec.full.truncated) {
    dec.full.elements =
        basis_from({{"basis", manifest.at("basis")},
                    {"dim", manifest.at("basis").size()}})
            .elements;
  } else {
    for (const auto& g : dec.ideals) {
      dec.full.elements.insert(dec.full.elements.end(), g.elements.begin(),
                               g.elements.end());
    }
    dec.full.elements.insert(dec.full.elements.end(), dec.center.elements.begin(),
                             dec.center.elements.end());
  }
  if (dec.full.dim() != manifest.at("dim").get<std::size_t>()) {
    throw ConfigError("manifest dim does not match its basis content");
  }
  return dec;
}

}  // namespace plateau
