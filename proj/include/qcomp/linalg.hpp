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

#pragma once

/// Dense complex linear algebra for small qubit registers.
///
/// Basis ordering: qubit 0 (particle A) is the most significant bit of the
/// basis index, so for three qubits the basis runs |000>, |001>, ..., |111>
/// and amplitude a_ijk lives at index 4i + 2j + k.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qcomp {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kDegeneracyTolerance = 1e-9;

class DensityMatrix;
class UnitaryMatrix;

/// Normalized state vector over 2^n computational basis states.
class PureState {
 public:
  /// Validates length (power of two) and unit norm within 1e-12.
  explicit PureState(CVector amplitudes);

  /// Rescales to unit norm; throws on a zero vector.
  static PureState normalized(CVector amplitudes);
  static PureState basis_state(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }
  double norm() const { return amplitudes_.norm(); }

  DensityMatrix projector() const;

 private:
  struct Unchecked {};
  PureState(CVector amplitudes, int n_qubits, Unchecked);

  CVector amplitudes_;
  int n_qubits_;

  friend PureState apply_unitary(const PureState&, const UnitaryMatrix&, std::span<const int>);
};

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12), trace (1e-12) and eigenvalues >= -1e-10.
  explicit DensityMatrix(CMatrix entries);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  double purity() const;

 private:
  CMatrix entries_;
  int n_qubits_;
};

class UnitaryMatrix {
 public:
  /// Validates U U^dagger = I within 1e-10 elementwise.
  explicit UnitaryMatrix(CMatrix entries);

  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  UnitaryMatrix adjoint() const;

  /// Matrix product (this applied after `rhs`).
  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;

 private:
  CMatrix entries_;
};

/// Eigenvalues sorted descending; column i of `vectors` pairs with value i.
struct EigenDecomposition {
  RVector values;
  CMatrix vectors;
};

bool is_power_of_two(std::size_t n);
int qubit_count(std::size_t dim);

CMatrix tensor_product(const CMatrix& a, const CMatrix& b);
CVector tensor_product(const CVector& a, const CVector& b);
PureState tensor_product(const PureState& a, const PureState& b);
UnitaryMatrix tensor_product(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Reduced density matrix over `keep` (qubit indices, any order; the result
/// uses ascending qubit order). Throws std::out_of_range("invalid subsystem").
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const PureState& psi, std::span<const int> keep);

/// Cyclic complex Jacobi eigensolver. The input is symmetrized before the
/// sweeps; degenerate clusters get a deterministic basis and every
/// eigenvector has its first non-negligible component real and positive.
EigenDecomposition hermitian_eig(const CMatrix& h);
EigenDecomposition hermitian_eig(const DensityMatrix& rho);

/// Applies `u` to the qubits in `targets`; targets[0] is the most
/// significant bit of u's index.
PureState apply_unitary(const PureState& state, const UnitaryMatrix& u,
                        std::span<const int> targets);

/// Elementwise Hermiticity check scaled by max(1, max |entry|).
bool is_hermitian(const CMatrix& m, double tol = kHermitianTolerance);

/// Multiplies by a unit phase so the first component with modulus > 1e-9 is
/// real and positive.
CVector fix_phase(const CVector& v);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace qcomp
