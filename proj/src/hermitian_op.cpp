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

#include "plateau/hermitian_op.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "plateau/errors.hpp"

namespace plateau {

namespace {
bool word_less(const HermitianOp::Term& a, const HermitianOp::Term& b) {
  if (a.second.z_bits() != b.second.z_bits()) return a.second.z_bits() < b.second.z_bits();
  return a.second.x_bits() < b.second.x_bits();
}
}  // namespace

HermitianOp HermitianOp::zero(uint32_t n) {
  HermitianOp op;
  op.n_ = n;
  return op;
}

HermitianOp HermitianOp::from_terms(uint32_t n, std::vector<Term> terms) {
  HermitianOp op;
  op.n_ = n;
  op.terms_ = std::move(terms);
  for (auto& [c, w] : op.terms_) {
    if (w.num_qubits() != n) throw ConfigError("term qubit count mismatch");
    if (!w.is_hermitian()) {
      throw ConfigError("non-Hermitian Pauli term: " + w.str());
    }
    if (w.phase_exponent() == 2) {  // fold the -1 into the coefficient
      c = -c;
      w = w.phaseless();
    }
  }
  op.canonicalize();
  return op;
}

HermitianOp HermitianOp::from_word(const PauliString& word, double coeff) {
  return from_terms(word.num_qubits(), {{coeff, word}});
}

HermitianOp HermitianOp::from_dense(Eigen::MatrixXcd dense) {
  if (dense.rows() != dense.cols() || dense.rows() == 0) {
    throw ConfigError("dense operator must be square and nonempty");
  }
  const double scale = std::max(1.0, dense.cwiseAbs().maxCoeff());
  if ((dense - dense.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ConfigError("dense operator is not Hermitian to 1e-12");
  }
  HermitianOp op;
  op.dense_ = std::move(dense);
  return op;
}

void HermitianOp::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), word_less);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().second.same_word(t.second)) {
      out.back().first += t.first;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.first == 0.0; });
  terms_ = std::move(out);
}

Eigen::Index HermitianOp::dim() const {
  if (!is_pauli_form()) return dense_.rows();
  return Eigen::Index(1) << n_;
}

Eigen::MatrixXcd HermitianOp::to_dense() const {
  if (!is_pauli_form()) return dense_;
  if (n_ > 13) throw ConfigError("dense conversion limited to n <= 13");
  const Eigen::Index d = dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [c, w] : terms_) m += c * w.to_dense();
  return m;
}

double HermitianOp::trace() const {
  if (!is_pauli_form()) return dense_.trace().real();
  for (const auto& [c, w] : terms_) {
    if (w.is_identity_word()) return c * std::pow(2.0, n_);
  }
  return 0.0;
}

double HermitianOp::hs_norm_sq() const { return hs_inner(*this, *this); }

double HermitianOp::trace_norm() const {
  if (is_pauli_form()) {
    if (terms_.empty()) return 0.0;
    if (terms_.size() == 1) {
      return std::abs(terms_[0].first) * std::pow(2.0, n_);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double HermitianOp::coefficient_of(const PauliString& word) const {
  for (const auto& [c, w] : terms_) {
    if (w.same_word(word)) return c;
  }
  return 0.0;
}

HermitianOp& HermitianOp::operator+=(const HermitianOp& o) {
  if (is_pauli_form() != o.is_pauli_form()) {
    throw ConfigError("cannot mix Pauli and dense forms in addition");
  }
  if (!is_pauli_form()) {
    if (dense_.rows() != o.dense_.rows()) throw ConfigError("dimension mismatch");
    dense_ += o.dense_;
    return *this;
  }
  if (n_ != o.n_) throw ConfigError("dimension mismatch");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

HermitianOp HermitianOp::operator+(const HermitianOp& o) const {
  HermitianOp out = *this;
  out += o;
  return out;
}

HermitianOp HermitianOp::operator*(double s) const {
  HermitianOp out = *this;
  out.scale(s);
  return out;
}

HermitianOp& HermitianOp::scale(double s) {
  if (!is_pauli_form()) {
    dense_ *= s;
    return *this;
  }
  for (auto& t : terms_) t.first *= s;
  if (s == 0.0) terms_.clear();
  return *this;
}

std::string HermitianOp::str() const {
  if (!is_pauli_form()) {
    return "dense[" + std::to_string(dense_.rows()) + "]";
  }
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += std::to_string(terms_[i].first) + "*" + terms_[i].second.str();
  }
  return out;
}

double hs_inner(const HermitianOp& a, const HermitianOp& b) {
  if (a.is_pauli_form() && b.is_pauli_form()) {
    if (a.num_qubits() != b.num_qubits()) {
      throw ConfigError("hs_inner dimension mismatch");
    }
    // Both term lists are sorted by (z, x); merge-match.
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    auto key = [](const HermitianOp::Term& t) {
      return std::make_pair(t.second.z_bits(), t.second.x_bits());
    };
    while (i < ta.size() && j < tb.size()) {
      if (key(ta[i]) == key(tb[j])) {
        sum += ta[i].first * tb[j].first;
        ++i, ++j;
      } else if (key(ta[i]) < key(tb[j])) {
        ++i;
      } else {
        ++j;
      }
    }
    return sum * std::pow(2.0, a.num_qubits());
  }
  const Eigen::MatrixXcd da = a.to_dense();
  const Eigen::MatrixXcd db = b.to_dense();
  if (da.rows() != db.rows()) throw ConfigError("hs_inner dimension mismatch");
  return (da.adjoint() * db).trace().real();
}

}  // namespace plateau
