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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qcomp/linalg.hpp"

namespace qcomp {

enum class StateClass { GHZ, W, Intermediate, General };

std::string_view to_string(StateClass c);
/// Accepts "ghz", "w", "intermediate"/"int", "general" (case-insensitive).
std::optional<StateClass> parse_state_class(std::string_view name);

/// Rotation angles of the three-qubit preparation network, in radians.
/// alpha2[i] is conditioned on qubit A = i; alpha3[i][j] on A = i, B = j.
struct FamilyParams {
  double alpha1 = 0.0;
  double alpha2[2] = {0.0, 0.0};
  double alpha3[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  static FamilyParams ghz(double alpha1);
  static FamilyParams w(double alpha1, double alpha2_0);
  static FamilyParams intermediate(double alpha1, double alpha2_0, double alpha3_00);
};

/// a_ijk = cos(alpha1/2 - i pi/2) cos(alpha2[i]/2 - j pi/2) cos(alpha3[i][j]/2 - k pi/2)
PureState amplitudes_from_angles(const FamilyParams& p);

/// cos(a1/2)|000> + sin(a1/2)|111>
PureState ghz_state(double alpha1);

/// cos(a1/2)cos(a2/2)|001> + cos(a1/2)sin(a2/2)|010> + sin(a1/2)|100>
PureState w_state(double alpha1, double alpha2_0);

/// W state plus a |000> component controlled by alpha3_00; alpha3_00 = pi
/// recovers w_state.
PureState intermediate_state(double alpha1, double alpha2_0, double alpha3_00);

/// Dispatches on the class; General uses every angle of `p`.
PureState family_state(StateClass c, const FamilyParams& p);

/// Haar-random state: 2^n independent standard complex Gaussians, normalized.
///
/// The generator is std::mt19937_64 seeded with `seed`; each Gaussian pair is
/// produced by the Box-Muller transform from two 53-bit uniforms, so the
/// output is reproducible across standard libraries.
PureState random_pure_state(std::uint64_t seed, int n_qubits);

/// ((1 - eps)/2^n) 1 + eps |psi><psi|, for eps in (0, 1].
DensityMatrix pseudopure(const PureState& psi, double epsilon);

/// (rho - ((1 - eps)/2^n) 1) / eps. Not validated as a density matrix, since
/// a wrong eps gives a Hermitian but non-positive result.
CMatrix relevant_pure_part(const DensityMatrix& rho, double epsilon);

}  // namespace qcomp
