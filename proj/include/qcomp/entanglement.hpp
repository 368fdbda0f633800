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

/// Direct (non-interferometric) quantifiers of local and nonlocal character.
///
/// Everything here is computed from reduced density matrices, and serves as
/// the reference the interferometer simulation is validated against.

#include <array>

#include "qcomp/linalg.hpp"
#include "qcomp/states.hpp"

namespace qcomp {

inline constexpr double kSupportThreshold = 1e-10;

/// Orthonormal basis of the BC subsystem. phi[0], phi[1] span the support of
/// rho_BC; phi[2], phi[3] complete the basis.
struct PreferredBasis {
  std::array<CVector, 4> phi;
  int support_rank = 0;

  /// Columns phi[0..3].
  CMatrix matrix() const;
};

struct ThetaAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
};

/// Closed-form intermediates lambda_+, lambda_-, A of the intermediate family.
struct IntermediateSpectrum {
  double lambda_plus;
  double lambda_minus;
  double a;
};

DensityMatrix reduced_qubit(const PureState& psi, int k);
/// rho_BC = Tr_A |psi><psi| for a three-qubit state.
DensityMatrix reduced_bc(const PureState& psi);

/// sqrt(2 (1 - Tr rho_k^2)), clamped to [0, 1].
double concurrence_bipartition(const PureState& psi, int k);

/// |<psi| sigma_y (x) sigma_y |psi*>| for a two-qubit state.
double concurrence_two_qubit(const PureState& psi);

/// |<sigma_z^k>|
double predictability(const PureState& psi, int k);

/// 2 |<0|rho_k|1>|
double single_visibility_direct(const PureState& psi, int k);

/// sqrt(V_k^2 + P_k^2)
double single_particle_character(const PureState& psi, int k);

/// Eigenvectors of rho_BC in descending eigenvalue order.
PreferredBasis preferred_basis(const PureState& psi);

IntermediateSpectrum intermediate_spectrum(const FamilyParams& p);

/// Closed-form rotation angles for the named families. Intermediate angles
/// come from lambda_pm and A with half-angles in [0, pi/2], then the signs
/// are flipped if needed so that the resulting vectors diagonalize rho_BC.
/// Throws std::invalid_argument("use eigenbasis route") for General.
ThetaAngles theta_angles(const FamilyParams& p, StateClass c);

/// cos(t1/2)cos(t2/2)|00> + sin(t1/2)sin(t3/2)|01> + sin(t1/2)cos(t3/2)|10>
///   + cos(t1/2)sin(t2/2)|11>
CVector phi0_from_theta(const ThetaAngles& t);

/// Tabulated preferred basis of the three named families (GHZ: |00>, |11>;
/// W: |00>, cos|01> + sin|10>; intermediate: theta-parametrized pair), with
/// phi[2], phi[3] completed deterministically.
PreferredBasis table_basis(const FamilyParams& p, StateClass c);

/// Uhlmann fidelity Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)).
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Principal square root of a PSD matrix; eigenvalues below 1e-12 are
/// clamped to zero.
CMatrix psd_sqrt(const CMatrix& m);

/// min over global phases of |a - e^{i t} b| (both assumed normalized).
double phase_distance(const CVector& a, const CVector& b);

}  // namespace qcomp
