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

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace plateau::oracle {

namespace {

Eigen::Matrix2cd letter_matrix(char c) {
  Eigen::Matrix2cd m;
  const Cx i(0, 1);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad letter");
  }
  return m;
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

}  // namespace

Eigen::MatrixXcd dense_pauli(const std::string& text) {
  std::size_t pos = 0;
  Cx phase(1, 0);
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = -phase;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase *= Cx(0, 1);
    ++pos;
  }
  Eigen::MatrixXcd m = letter_matrix(std::toupper(text[pos]));
  for (std::size_t k = pos + 1; k < text.size(); ++k) {
    // qubit k is the k-th letter; amplitude index bit k is the k-th kron slot
    m = Eigen::kroneckerProduct(letter_matrix(std::toupper(text[k])), m).eval();
  }
  return phase * m;
}

int dense_closure_dim(const std::vector<Eigen::MatrixXcd>& generators,
                      int max_dim) {
  std::vector<Eigen::MatrixXcd> basis;  // orthonormalized span
  std::vector<Eigen::MatrixXcd> worklist;
  auto try_add = [&](Eigen::MatrixXcd cand) -> bool {
    Eigen::VectorXcd v = vectorize(cand);
    for (const auto& b : basis) {
      const Eigen::VectorXcd bv = vectorize(b);
      v -= bv.dot(v) * bv;
    }
    if (v.norm() < 1e-9) return false;
    Eigen::MatrixXcd unit =
        Eigen::Map<Eigen::MatrixXcd>(v.data(), cand.rows(), cand.cols()) / v.norm();
    basis.push_back(unit);
    worklist.push_back(unit);
    return true;
  };
  for (const auto& g : generators) try_add(Cx(0, 1) * g);
  while (!worklist.empty()) {
    const Eigen::MatrixXcd next = worklist.back();
    worklist.pop_back();
    const std::size_t frozen = basis.size();
    for (std::size_t k = 0; k < frozen; ++k) {
      try_add(next * basis[k] - basis[k] * next);
      if (static_cast<int>(basis.size()) > max_dim) {
        throw std::runtime_error("dense closure exceeded max_dim");
      }
    }
  }
  return static_cast<int>(basis.size());
}

std::vector<int> dense_ideal_dims(const std::vector<Eigen::MatrixXcd>& basis,
                                  uint64_t seed) {
  const int m = static_cast<int>(basis.size());
  // structure constants: [B_a, B_b] = sum_c f[a](c,b) B_c (basis orthonormal,
  // coefficients real up to rounding)
  std::vector<Eigen::MatrixXd> ad(m, Eigen::MatrixXd::Zero(m, m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      // Hermitian representative of the real-algebra bracket is i[A, B]
      const Eigen::MatrixXcd br =
          Cx(0, 1) * (basis[a] * basis[b] - basis[b] * basis[a]);
      for (int c = 0; c < m; ++c) {
        ad[a](c, b) = (basis[c].adjoint() * br).trace().real();
      }
    }
  }
  // Sylvester stack: rows are vec(T ad_a - ad_a T) = (ad_a^T (x) I - I (x) ad_a) vec(T)
  Eigen::MatrixXd sys(m * m * m, m * m);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m, m);
  for (int a = 0; a < m; ++a) {
    sys.block(a * m * m, 0, m * m, m * m) =
        Eigen::kroneckerProduct(ad[a].transpose(), id) -
        Eigen::kroneckerProduct(id, ad[a]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  int null_dim = 0;
  for (int k = 0; k < sv.size(); ++k) {
    if (sv(k) < 1e-8 * std::max(1.0, sv(0))) ++null_dim;
  }
  SplitMix64 rng(seed);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int k = 0; k < null_dim; ++k) {
    const Eigen::VectorXd col = svd.matrixV().col(m * m - 1 - k);
    t += rng.normal() * Eigen::Map<const Eigen::MatrixXd>(col.data(), m, m);
  }
  t = ((t + t.transpose()) / 2).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double scale = std::max(1e-12, ev.cwiseAbs().maxCoeff());
  std::vector<int> dims;
  int run = 1;
  for (int k = 1; k < m; ++k) {
    if (std::abs(ev(k) - ev(k - 1)) > 1e-6 * scale) {
      dims.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  dims.push_back(run);
  std::sort(dims.begin(), dims.end());
  return dims;
}

int brute_max_abelian_dim(const std::vector<Eigen::MatrixXcd>& basis,
                          int trials, uint64_t seed) {
  // The centralizer of a generic element is a maximal abelian subalgebra;
  // take the minimum centralizer dimension over several random draws and
  // verify for the minimizing draw that the centralizer really is abelian.
  const int m = static_cast<int>(basis.size());
  SplitMix64 rng(seed);
  int best = m + 1;
  for (int t = 0; t < trials; ++t) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(basis[0].rows(), basis[0].cols());
    for (int i = 0; i < m; ++i) x += rng.normal() * basis[i];
    // ad_x in the given orthonormal basis, with Hermitian representatives
    Eigen::MatrixXd ad(m, m);
    for (int b = 0; b < m; ++b) {
      const Eigen::MatrixXcd br = Cx(0, 1) * (x * basis[b] - basis[b] * x);
      for (int c = 0; c < m; ++c) {
        ad(c, b) = (basis[c].adjoint() * br).trace().real();
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ad, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    int nullity = 0;
    for (int k = 0; k < sv.size(); ++k) {
      if (sv(k) < 1e-9 * std::max(1.0, sv(0))) ++nullity;
    }
    if (nullity >= best) continue;
    // verify the kernel is abelian before accepting it
    std::vector<Eigen::MatrixXcd> kernel;
    for (int k = 0; k < nullity; ++k) {
      const Eigen::VectorXd col = svd.matrixV().col(m - 1 - k);
      Eigen::MatrixXcd elem = Eigen::MatrixXcd::Zero(x.rows(), x.cols());
      for (int i = 0; i < m; ++i) elem += col(i) * basis[i];
      kernel.push_back(elem);
    }
    bool abelian = true;
    for (std::size_t p = 0; p < kernel.size() && abelian; ++p) {
      for (std::size_t q = 0; q < p && abelian; ++q) {
        abelian = (kernel[p] * kernel[q] - kernel[q] * kernel[p]).norm() < 1e-8;
      }
    }
    if (abelian) best = nullity;
  }
  return best;
}

Eigen::MatrixXcd expi(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian);
  const Eigen::VectorXd ev = es.eigenvalues();
  Eigen::VectorXcd phases(ev.size());
  for (int k = 0; k < ev.size(); ++k) phases(k) = std::polar(1.0, ev(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd haar_su2_spin(int two_s, SplitMix64& rng) {
  // uniform quaternion -> rotation angle/axis -> exp(i theta n.S)
  double q[4], norm = 0;
  do {
    norm = 0;
    for (double& v : q) {
      v = rng.normal();
      norm += v * v;
    }
  } while (norm == 0);
  norm = std::sqrt(norm);
  for (double& v : q) v /= norm;
  const double half = std::acos(std::clamp(q[0], -1.0, 1.0));
  const double s = std::sin(half);
  double nx = 0, ny = 0, nz = 1;
  if (s > 1e-12) {
    nx = q[1] / s;
    ny = q[2] / s;
    nz = q[3] / s;
  }
  const double theta = 2 * half;
  const int d = two_s + 1;
  const double spin = two_s / 2.0;
  Eigen::MatrixXcd sx = Eigen::MatrixXcd::Zero(d, d), sy = sx, sz = sx;
  for (int k = 0; k < d; ++k) {
    const double mval = spin - k;
    sz(k, k) = mval;
    if (k + 1 < d) {
      const double c = 0.5 * std::sqrt(spin * (spin + 1) - mval * (mval - 1));
      sx(k, k + 1) = c;
      sx(k + 1, k) = c;
      sy(k, k + 1) = Cx(0, -c);
      sy(k + 1, k) = Cx(0, c);
    }
  }
  return expi(theta * (nx * sx + ny * sy + nz * sz));
}

}  // namespace plateau::oracle
