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

#include "qcomp/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcomp {

namespace {

constexpr double kEigenResidual = 1e-9;
constexpr double kSqrtClamp = 1e-12;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void require_qubit(const PureState& psi, int k) {
  if (k < 0 || k >= psi.n_qubits()) throw std::out_of_range("qubit index out of range");
}

void require_three_qubits(const PureState& psi) {
  if (psi.n_qubits() != 3) throw std::invalid_argument("expected a three-qubit state");
}

// |rho v - <v|rho|v> v|
double eigen_residual(const CMatrix& rho, const CVector& v) {
  const Complex rq = v.dot(rho * v);
  return (rho * v - rq * v).norm();
}

// Fills slots [filled, 4) with the Gram-Schmidt projections of e_0..e_3 onto
// the complement of the vectors already present.
void complete_basis(std::array<CVector, 4>& phi, int filled) {
  for (int e = 0; e < 4 && filled < 4; ++e) {
    CVector w = CVector::Zero(4);
    w(e) = 1.0;
    for (int k = 0; k < filled; ++k) w -= phi[static_cast<std::size_t>(k)] * phi[static_cast<std::size_t>(k)].dot(w);
    const double norm = w.norm();
    if (norm > 1e-6) phi[static_cast<std::size_t>(filled++)] = w / norm;
  }
}

CVector phi1_from_theta(const ThetaAngles& t) {
  CVector v = CVector::Zero(4);
  v(0) = -std::sin(t.theta1 / 2);
  v(1) = std::cos(t.theta1 / 2) * std::sin(t.theta3 / 2);
  v(2) = std::cos(t.theta1 / 2) * std::cos(t.theta3 / 2);
  return v;
}

}  // namespace

CMatrix PreferredBasis::matrix() const {
  CMatrix m(4, 4);
  for (int j = 0; j < 4; ++j) m.col(j) = phi[static_cast<std::size_t>(j)];
  return m;
}

DensityMatrix reduced_qubit(const PureState& psi, int k) {
  require_qubit(psi, k);
  const int keep[] = {k};
  return partial_trace(psi, keep);
}

DensityMatrix reduced_bc(const PureState& psi) {
  require_three_qubits(psi);
  const int keep[] = {1, 2};
  return partial_trace(psi, keep);
}

double concurrence_bipartition(const PureState& psi, int k) {
  const DensityMatrix rho = reduced_qubit(psi, k);
  return std::sqrt(clamp01(2.0 * (1.0 - rho.purity())));
}

double concurrence_two_qubit(const PureState& psi) {
  if (psi.n_qubits() != 2) throw std::invalid_argument("expected a two-qubit state");
  CMatrix sy(2, 2);
  sy << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  const CMatrix yy = tensor_product(sy, sy);
  const CVector& a = psi.amplitudes();
  return clamp01(std::abs(a.dot(yy * a.conjugate())));
}

double predictability(const PureState& psi, int k) {
  const DensityMatrix rho = reduced_qubit(psi, k);
  return clamp01(std::abs(rho(0, 0).real() - rho(1, 1).real()));
}

double single_visibility_direct(const PureState& psi, int k) {
  const DensityMatrix rho = reduced_qubit(psi, k);
  return clamp01(2.0 * std::abs(rho(0, 1)));
}

double single_particle_character(const PureState& psi, int k) {
  const double v = single_visibility_direct(psi, k);
  const double p = predictability(psi, k);
  return clamp01(std::sqrt(v * v + p * p));
}

PreferredBasis preferred_basis(const PureState& psi) {
  const DensityMatrix rho = reduced_bc(psi);
  const EigenDecomposition eig = hermitian_eig(rho);
  PreferredBasis basis;
  for (int j = 0; j < 4; ++j) basis.phi[static_cast<std::size_t>(j)] = eig.vectors.col(j);
  basis.support_rank = static_cast<int>((eig.values.array() > kSupportThreshold).count());
  return basis;
}

IntermediateSpectrum intermediate_spectrum(const FamilyParams& p) {
  const double c1 = std::cos(p.alpha1 / 2);
  const double s1 = std::sin(p.alpha1 / 2);
  const double c2 = std::cos(p.alpha2[0] / 2);
  const double s2 = std::sin(p.alpha2[0] / 2);
  const double s3 = std::sin(p.alpha3[0][0] / 2);
  const double a = c1 * c1 * (c2 * c2 * s3 * s3 + s2 * s2);
  const double root = std::sqrt(std::max(0.0, 1.0 - 4.0 * a * s1 * s1));
  return {0.5 * (1.0 + root), 0.5 * (1.0 - root), a};
}

ThetaAngles theta_angles(const FamilyParams& p, StateClass c) {
  switch (c) {
    case StateClass::GHZ:
      return {0.0, 0.0, 0.0};
    case StateClass::W:
      return {0.0, 0.0, -p.alpha2[0]};
    case StateClass::General:
      throw std::invalid_argument("use eigenbasis route");
    case StateClass::Intermediate:
      break;
  }

  const IntermediateSpectrum spec = intermediate_spectrum(p);
  // tan^2(t1/2) = (A - lambda_-)/(lambda_+ - A); atan2 keeps lambda_+ = A finite.
  const double half1 = std::atan2(std::sqrt(std::max(0.0, spec.a - spec.lambda_minus)),
                                  std::sqrt(std::max(0.0, spec.lambda_plus - spec.a)));
  // tan(t3/2) = cot(a2/2) sin(a3/2)
  const double half3 = std::atan2(std::cos(p.alpha2[0] / 2) * std::sin(p.alpha3[0][0] / 2),
                                  std::sin(p.alpha2[0] / 2));

  const CMatrix rho = reduced_bc(intermediate_state(p.alpha1, p.alpha2[0], p.alpha3[0][0])).entries();
  for (double sign1 : {1.0, -1.0}) {
    for (double sign3 : {1.0, -1.0}) {
      const ThetaAngles t{2.0 * sign1 * half1, 0.0, 2.0 * sign3 * half3};
      if (eigen_residual(rho, phi0_from_theta(t)) < kEigenResidual &&
          eigen_residual(rho, phi1_from_theta(t)) < kEigenResidual) {
        return t;
      }
    }
  }
  throw std::runtime_error("closed-form angles do not diagonalize rho_BC");
}

CVector phi0_from_theta(const ThetaAngles& t) {
  CVector v(4);
  v(0) = std::cos(t.theta1 / 2) * std::cos(t.theta2 / 2);
  v(1) = std::sin(t.theta1 / 2) * std::sin(t.theta3 / 2);
  v(2) = std::sin(t.theta1 / 2) * std::cos(t.theta3 / 2);
  v(3) = std::cos(t.theta1 / 2) * std::sin(t.theta2 / 2);
  return v;
}

PreferredBasis table_basis(const FamilyParams& p, StateClass c) {
  PreferredBasis basis;
  switch (c) {
    case StateClass::GHZ:
      basis.phi[0] = CVector::Unit(4, 0);
      basis.phi[1] = CVector::Unit(4, 3);
      break;
    case StateClass::W: {
      basis.phi[0] = CVector::Unit(4, 0);
      CVector v = CVector::Zero(4);
      v(1) = std::cos(p.alpha2[0] / 2);
      v(2) = std::sin(p.alpha2[0] / 2);
      basis.phi[1] = v;
      break;
    }
    case StateClass::Intermediate: {
      const ThetaAngles t = theta_angles(p, c);
      basis.phi[0] = phi0_from_theta(t);
      basis.phi[1] = phi1_from_theta(t);
      break;
    }
    case StateClass::General:
      throw std::invalid_argument("use eigenbasis route");
  }
  complete_basis(basis.phi, 2);

  const CMatrix rho = reduced_bc(family_state(c, p)).entries();
  for (int j = 0; j < 2; ++j) {
    const CVector& v = basis.phi[static_cast<std::size_t>(j)];
    if (v.dot(rho * v).real() > kSupportThreshold) ++basis.support_rank;
  }
  return basis;
}

CMatrix psd_sqrt(const CMatrix& m) {
  const EigenDecomposition eig = hermitian_eig(m);
  RVector roots(eig.values.size());
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    roots(i) = eig.values(i) < kSqrtClamp ? 0.0 : std::sqrt(eig.values(i));
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim()) throw std::invalid_argument("density matrix dimension mismatch");
  const CMatrix s = psd_sqrt(rho1.entries());
  CMatrix inner = s * rho2.entries() * s;
  inner = 0.5 * (inner + inner.adjoint()).eval();
  const EigenDecomposition eig = hermitian_eig(inner);
  double f = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > kSqrtClamp) f += std::sqrt(eig.values(i));
  }
  return clamp01(f);
}

double phase_distance(const CVector& a, const CVector& b) {
  const Complex overlap = b.dot(a);  // <b|a>
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0);
  return (a - phase * b).norm();
}

}  // namespace qcomp
