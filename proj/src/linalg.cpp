// Copyright 2026 The qcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcomp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcomp {

namespace {

constexpr double kJacobiThreshold = 1e-13;
constexpr int kMaxJacobiSweeps = 100;
constexpr double kPhaseThreshold = 1e-9;
// Residual below which a projected basis vector is treated as outside a
// degenerate eigenspace.
constexpr double kClusterPickThreshold = 1e-6;

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

// One complex Jacobi rotation annihilating a(p,q). J is the 2x2 unitary
// [[c, s e^{i t}], [-s e^{-i t}, c]] embedded in rows/cols p,q, with t the
// argument of a(p,q); A <- J^dagger A J and V <- V J.
void jacobi_rotate(CMatrix& a, CMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s * phase;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

// Replaces the columns of a degenerate cluster with the Gram-Schmidt
// projections of e_0, e_1, ... onto the cluster's eigenspace.
void canonicalize_cluster(CMatrix& vectors, Eigen::Index begin, Eigen::Index end) {
  const Eigen::Index n = vectors.rows();
  const Eigen::Index size = end - begin;
  if (size < 2) return;
  const CMatrix span = vectors.middleCols(begin, size);
  CMatrix picked(n, size);
  Eigen::Index count = 0;
  for (Eigen::Index e = 0; e < n && count < size; ++e) {
    CVector w = span * span.row(e).adjoint();  // projection of |e> onto span
    for (Eigen::Index k = 0; k < count; ++k) {
      w -= picked.col(k) * picked.col(k).dot(w);
    }
    const double norm = w.norm();
    if (norm > kClusterPickThreshold) {
      picked.col(count++) = w / norm;
    }
  }
  if (count == size) vectors.middleCols(begin, size) = picked;
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int qubit_count(std::size_t dim) {
  if (!is_power_of_two(dim)) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

CVector fix_phase(const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > kPhaseThreshold) {
      return v * (std::conj(v(i)) / mag);
    }
  }
  return v;
}

// PureState -------------------------------------------------------------------

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  n_qubits_ = qubit_count(static_cast<std::size_t>(amplitudes_.size()));
  if (n_qubits_ < 1) throw std::invalid_argument("state needs at least one qubit");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized (norm^2 = " + std::to_string(norm2) + ")");
  }
}

PureState::PureState(CVector amplitudes, int n_qubits, Unchecked)
    : amplitudes_(std::move(amplitudes)), n_qubits_(n_qubits) {}

PureState PureState::normalized(CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis_state(int n_qubits, std::size_t index) {
  if (n_qubits < 1 || n_qubits > 20) throw std::invalid_argument("unsupported qubit count");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw std::out_of_range("basis index out of range");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint());
}

// DensityMatrix ---------------------------------------------------------------

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw std::invalid_argument("density matrix must be square");
  n_qubits_ = qubit_count(static_cast<std::size_t>(entries_.rows()));
  if (!is_hermitian(entries_)) throw std::invalid_argument("density matrix is not Hermitian");
  const Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > kNormTolerance) {
    throw std::invalid_argument("density matrix trace is " + std::to_string(tr.real()));
  }
  const EigenDecomposition eig = hermitian_eig(entries_);
  if (eig.values(eig.values.size() - 1) < -kPsdTolerance) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

// UnitaryMatrix ---------------------------------------------------------------

UnitaryMatrix::UnitaryMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("unitary must be square and non-empty");
  }
  const CMatrix id = CMatrix::Identity(entries_.rows(), entries_.cols());
  if (max_abs_diff(entries_ * entries_.adjoint(), id) > kUnitaryTolerance) {
    throw std::invalid_argument("matrix is not unitary");
  }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return UnitaryMatrix(CMatrix::Identity(n, n));
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(entries_.adjoint()); }

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (dim() != rhs.dim()) throw std::invalid_argument("unitary dimension mismatch");
  return UnitaryMatrix(entries_ * rhs.entries_);
}

// Tensor products ---------------------------------------------------------------

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector tensor_product(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

PureState tensor_product(const PureState& a, const PureState& b) {
  return PureState::normalized(tensor_product(a.amplitudes(), b.amplitudes()));
}

UnitaryMatrix tensor_product(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  return UnitaryMatrix(tensor_product(a.entries(), b.entries()));
}

// Partial trace -----------------------------------------------------------------

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.n_qubits();
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
      kept.front() < 0 || kept.back() >= n) {
    throw std::out_of_range("invalid subsystem");
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  // Qubit q sits at bit (n - 1 - q) of the full index.
  auto compose = [n](const std::vector<int>& qubits, std::size_t local) {
    std::size_t full = 0;
    const auto m = qubits.size();
    for (std::size_t b = 0; b < m; ++b) {
      if ((local >> (m - 1 - b)) & 1U) full |= std::size_t{1} << (n - 1 - qubits[b]);
    }
    return full;
  };

  const std::size_t kd = std::size_t{1} << kept.size();
  const std::size_t td = std::size_t{1} << traced.size();
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  for (std::size_t r = 0; r < kd; ++r) {
    const std::size_t rk = compose(kept, r);
    for (std::size_t c = 0; c < kd; ++c) {
      const std::size_t ck = compose(kept, c);
      Complex sum = 0.0;
      for (std::size_t t = 0; t < td; ++t) {
        const std::size_t tt = compose(traced, t);
        sum += rho(rk | tt, ck | tt);
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = sum;
    }
  }
  // Symmetrize to wash out rounding before validation.
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const PureState& psi, std::span<const int> keep) {
  return partial_trace(psi.projector(), keep);
}

// Eigensolver -------------------------------------------------------------------

EigenDecomposition hermitian_eig(const CMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) throw std::invalid_argument("not Hermitian");
  if (!is_hermitian(h)) throw std::invalid_argument("not Hermitian");

  const Eigen::Index n = h.rows();
  CMatrix a = 0.5 * (h + h.adjoint());
  CMatrix v = CMatrix::Identity(n, n);
  const double scale = std::max(1.0, a.norm());
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kJacobiThreshold * scale) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        jacobi_rotate(a, v, p, q);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&a](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }

  Eigen::Index begin = 0;
  for (Eigen::Index k = 1; k <= n; ++k) {
    if (k == n || out.values(k - 1) - out.values(k) >= kDegeneracyTolerance) {
      canonicalize_cluster(out.vectors, begin, k);
      begin = k;
    }
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    out.vectors.col(k) = fix_phase(out.vectors.col(k));
  }
  return out;
}

EigenDecomposition hermitian_eig(const DensityMatrix& rho) { return hermitian_eig(rho.entries()); }

// Unitary application -------------------------------------------------------------

PureState apply_unitary(const PureState& state, const UnitaryMatrix& u, std::span<const int> targets) {
  const int n = state.n_qubits();
  const std::size_t k = targets.size();
  if (k == 0 || u.dim() != (std::size_t{1} << k)) {
    throw std::invalid_argument("unitary dimension does not match target count");
  }
  std::vector<int> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 ||
      sorted.back() >= n) {
    throw std::out_of_range("invalid target qubits");
  }

  std::vector<std::size_t> offsets(u.dim());
  for (std::size_t local = 0; local < u.dim(); ++local) {
    std::size_t full = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if ((local >> (k - 1 - b)) & 1U) full |= std::size_t{1} << (n - 1 - targets[b]);
    }
    offsets[local] = full;
  }
  std::size_t target_mask = 0;
  for (int t : targets) target_mask |= std::size_t{1} << (n - 1 - t);

  const CVector& in = state.amplitudes();
  CVector out = in;
  CVector gathered(static_cast<Eigen::Index>(u.dim()));
  for (std::size_t base = 0; base < state.dim(); ++base) {
    if (base & target_mask) continue;
    for (std::size_t l = 0; l < u.dim(); ++l) {
      gathered(static_cast<Eigen::Index>(l)) = in(static_cast<Eigen::Index>(base | offsets[l]));
    }
    const CVector mixed = u.entries() * gathered;
    for (std::size_t l = 0; l < u.dim(); ++l) {
      out(static_cast<Eigen::Index>(base | offsets[l])) = mixed(static_cast<Eigen::Index>(l));
    }
  }
  return PureState(std::move(out), n, PureState::Unchecked{});
}

}  // namespace qcomp
