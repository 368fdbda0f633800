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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcomp/entanglement.hpp"
#include "qcomp/interferometer.hpp"
#include "qcomp/states.hpp"

namespace qcomp {

inline constexpr double kEqualityTolerance = 1e-6;
inline constexpr double kSlackTolerance = 1e-8;

enum class BasisSource { Table, Eigensolve };

std::string_view to_string(BasisSource s);
std::optional<BasisSource> parse_basis_source(std::string_view name);

/// Local and nonlocal quantifiers of one state. The direct quantities come
/// from reduced density matrices; v2 and v_single_interferometric come from
/// the simulated interferometer.
struct ComplementarityRecord {
  std::string descriptor;
  double parameter = 0.0;  // swept value; 0 outside sweeps
  double concurrence = 0.0;
  double predictability = 0.0;
  double v_single = 0.0;
  double character = 0.0;  // S_A
  double v2 = 0.0;         // V_A(BC)
  double v_single_interferometric = 0.0;
  double residual_equality = 0.0;  // |V2^2 + S^2 - 1|
  std::optional<double> slack_inequality;  // 1 - (V^2 + S^2), extended-basis runs
};

struct VerifyOptions {
  int phase_points = kDefaultPhasePoints;
  SweepMode mode = SweepMode::Independent;
};

/// Preferred-basis measurement with the eigensolved basis of xi.
ComplementarityRecord verify_equality(const PureState& xi, const VerifyOptions& options = {});

/// Same, through a caller-supplied interferometer (table route, custom
/// bases). `device` must be built from `xi`.
ComplementarityRecord verify_equality(const PureState& xi, const Interferometer& device,
                                      const VerifyOptions& options = {});

/// Extended-basis run along |m> = sum_i c_i |Phi_i>.
ComplementarityRecord verify_inequality(const PureState& xi, const BasisCoefficients& coeffs,
                                        const VerifyOptions& options = {});

/// Interferometer for a named family: the table route uses R(theta) and the
/// support permutation; the eigensolve route the general rotation.
Interferometer family_interferometer(StateClass family, const FamilyParams& params, BasisSource source);

struct SweepSpec {
  StateClass family = StateClass::GHZ;
  std::string parameter = "alpha1";  // alpha1 | alpha2_0 | alpha3_00
  std::vector<double> values;
  FamilyParams fixed;
  VerifyOptions options;
  BasisSource source = BasisSource::Table;

  /// alpha1 over `points` uniform values in [0, pi]; W fixes alpha2_0 = pi/2,
  /// intermediate alpha2_0 = pi/3 and alpha3_00 = pi/4.
  static SweepSpec standard(StateClass family, int points = 33);
};

/// One record per value, in grid order. Throws std::invalid_argument on an
/// unknown parameter name or a General family.
std::vector<ComplementarityRecord> family_sweep(const SweepSpec& spec);

struct PseudopureReport {
  double epsilon = 0.0;
  double max_joint_deviation = 0.0;
  double max_single_deviation = 0.0;
  double max_corrected_deviation = 0.0;
  bool match = false;
};

inline constexpr double kPseudopureTolerance = 1e-9;

/// Sweeps pseudopure(xi, eps) and xi in the preferred basis of xi, removes
/// the flat (1 - eps)/8 background from each joint channel, rescales by
/// 1/eps, rebuilds marginals and corrected values, and compares pointwise.
PseudopureReport pseudopure_check(const PureState& xi, double epsilon, const PhaseGrid& grid);

/// C^2 and S^2 from the single-qubit marginal of a mixed state.
struct MixedProbe {
  double concurrence_sq;
  double character_sq;
};
MixedProbe mixed_state_probe(const DensityMatrix& rho);

struct VerifySummary {
  double max_residual = 0.0;
  double mean_residual = 0.0;
  std::size_t n_states = 0;
  std::optional<double> min_slack;
  bool pass = false;
};

/// Equality runs pass when max_residual < tolerance; runs carrying slacks
/// pass when every slack is >= -1e-8.
VerifySummary summarize(const std::vector<ComplementarityRecord>& records, double tolerance = kEqualityTolerance);

}  // namespace qcomp
