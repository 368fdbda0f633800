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

/// Four-way interferometer for a three-qubit source.
///
/// Particle A passes a transducer U(phi1) and is detected at port i (0 = K1,
/// 1 = L1). The pair BC passes the block transducer U_BC(phi2) written in a
/// chosen BC basis {Phi_0..Phi_3} and is detected at port j (0 = K2, 1 = L2,
/// 2 and 3 the ports outside the support). A "measurement rotation" M is any
/// unitary with M Phi_j = e_j up to phase; for the closed-form rotation R of
/// the named families that is M = P R with P a permutation.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qcomp/entanglement.hpp"
#include "qcomp/linalg.hpp"

namespace qcomp {

inline constexpr int kMinPhasePoints = 16;
inline constexpr int kDefaultPhasePoints = 360;

enum class SweepMode { Locked, Independent };

std::string_view to_string(SweepMode m);
std::optional<SweepMode> parse_sweep_mode(std::string_view name);

/// Uniform phase grid over [offset, offset + 2 pi).
class PhaseGrid {
 public:
  /// phi1 = phi2 = offset + 2 pi k / points.
  static PhaseGrid locked(int points, double offset = 0.0);
  /// Cartesian product; point k = (phi1[k / n2], phi2[k % n2]).
  static PhaseGrid independent(int points_phi1, int points_phi2, double offset = 0.0);
  static PhaseGrid make(SweepMode mode, int points, double offset = 0.0);

  SweepMode mode() const { return mode_; }
  const std::vector<double>& phi1_values() const { return phi1_; }
  const std::vector<double>& phi2_values() const { return phi2_; }
  double step1() const;
  double step2() const;
  std::size_t size() const;
  std::pair<double, double> point(std::size_t k) const;

 private:
  PhaseGrid(SweepMode mode, std::vector<double> phi1, std::vector<double> phi2);

  SweepMode mode_;
  std::vector<double> phi1_;
  std::vector<double> phi2_;
};

/// Detection probabilities at one pair of phases.
struct GridSample {
  std::array<double, 8> joint{};      // p(i, j) at 4 i + j
  std::array<double, 2> single_a{};   // sum_j p(i, j)
  std::array<double, 4> single_bc{};  // sum_i p(i, j)
  std::array<double, 4> corrected{};  // pbar(i, j) at 2 i + j, j in {0, 1}

  double joint_at(int i, int j) const { return joint[static_cast<std::size_t>(4 * i + j)]; }
  double corrected_at(int i, int j) const { return corrected[static_cast<std::size_t>(2 * i + j)]; }

  /// Fills the marginals and corrected values from the eight joints.
  static GridSample from_joint(const std::array<double, 8>& joint);
};

/// pbar(i, j) = p(i, j) - p_A(i) p_BC(j) + 1/4 for any BC port j in 0..3.
double corrected_probability(const GridSample& s, int i, int j);

/// Source plus measurement frame; evaluates probabilities at any phases.
class Interferometer {
 public:
  Interferometer(const PureState& source, const UnitaryMatrix& measurement_rotation);
  Interferometer(const DensityMatrix& source, const UnitaryMatrix& measurement_rotation);

  /// Uses general_basis_rotation(basis) as the measurement rotation.
  static Interferometer with_basis(const PureState& source, const PreferredBasis& basis);

  GridSample sample(double phi1, double phi2) const;
  bool is_pure() const { return !rotated_rho_.has_value(); }

 private:
  using Vec8 = Eigen::Matrix<Complex, 8, 1>;
  using Mat8 = Eigen::Matrix<Complex, 8, 8>;

  Vec8 rotated_psi_;
  std::optional<Mat8> rotated_rho_;
};

class Interferogram {
 public:
  Interferogram(Interferometer device, PhaseGrid grid, std::vector<GridSample> samples);

  const Interferometer& device() const { return device_; }
  const PhaseGrid& grid() const { return grid_; }
  const std::vector<GridSample>& samples() const { return samples_; }
  const GridSample& at(std::size_t k) const { return samples_.at(k); }

 private:
  Interferometer device_;
  PhaseGrid grid_;
  std::vector<GridSample> samples_;
};

/// (1/sqrt 2) [[e^{-i phi/2}, e^{i phi/2}], [-e^{-i phi/2}, e^{i phi/2}]]
UnitaryMatrix transducer(double phi);

/// Block diagonal: transducer(phi) on {Phi_0, Phi_1} and on {Phi_2, Phi_3}.
UnitaryMatrix transducer_bc(double phi);

/// transducer(phi) on {Phi_0, Phi_1}; on {Phi_2, Phi_3} the SU(2) block
/// [[cos(g/2) e^{-ib}, -sin(g/2) e^{-id}], [sin(g/2) e^{id}, cos(g/2) e^{ib}]].
UnitaryMatrix transducer_bc_general(double phi, double gamma, double beta, double delta);

/// Closed-form real rotation whose first row is phi0_from_theta(t).
UnitaryMatrix basis_rotation_R(const ThetaAngles& t);

/// Rows are the conjugated basis vectors, so Phi_j maps to e_j.
/// Throws std::invalid_argument if the basis is not orthonormal (1e-10).
UnitaryMatrix general_basis_rotation(const PreferredBasis& basis);

/// Permutation P with P r Phi_j proportional to e_j for j = 0, 1; the other
/// computational states keep ascending order on ports 2, 3.
UnitaryMatrix support_permutation(const UnitaryMatrix& r, const PreferredBasis& basis);

/// U(phi1) (x) r^dagger perm^dagger U_BC(phi2) perm r applied to xi.
PureState output_state(const PureState& xi, double phi1, double phi2, const UnitaryMatrix& r,
                       const UnitaryMatrix& perm);

/// |<i|_A <j|_BC (1 (x) rotation) |out>|^2
double joint_probability(const PureState& out, int i, int j, const UnitaryMatrix& rotation);

/// <i| Tr_BC |out><out| |i>
double single_probability(const PureState& out, int i);

Interferogram sweep_interferogram(const Interferometer& device, const PhaseGrid& grid);
Interferogram sweep_interferogram(const PureState& xi, const PreferredBasis& basis, const PhaseGrid& grid);

/// Extreme values of a signal over the phase domain: grid extrema refined by
/// golden-section search through the device.
struct SignalRange {
  double max;
  double min;
};

/// (max - min)/(max + min); 0 when max + min = 0.
double visibility(const SignalRange& r);

SignalRange single_range(const Interferogram& ig, int i);
SignalRange corrected_range(const Interferogram& ig, int i, int j);

double visibility_single(const Interferogram& ig, int i);

/// Two-party visibility on the support ports; throws
/// std::invalid_argument("outside support") for j in {2, 3}.
double visibility_two_party(const Interferogram& ig, int i, int j);

/// Corrected visibility of A port i against each of the four BC ports.
std::array<double, 4> port_visibilities(const Interferogram& ig, int i = 0);

struct ExtendedVisibility {
  double value;                   // sum_i |c_i|^2 V^(i)
  std::array<double, 4> per_port;  // V^(i)
};

using BasisCoefficients = std::array<Complex, 4>;

/// Combines per-port visibilities V^(i) with the weights |c_i|^2. Throws
/// std::invalid_argument unless sum |c_i|^2 = 1 within 1e-10.
ExtendedVisibility extended_basis_visibility(const std::array<double, 4>& per_port, const BasisCoefficients& coeffs);

/// Two-party visibility along |m> = sum_i c_i |Phi_i> with A port 0, built
/// from the per-port visibilities of an existing interferogram.
ExtendedVisibility extended_basis_visibility(const Interferogram& ig, const BasisCoefficients& coeffs);

/// Sweeps xi in its eigensolved preferred basis, then as above.
ExtendedVisibility extended_basis_visibility(const PureState& xi, const BasisCoefficients& coeffs,
                                             const PhaseGrid& grid);

}  // namespace qcomp
