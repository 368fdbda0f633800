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

#include "qcomp/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"
#include "qcomp/extremum.hpp"

namespace qcomp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kCoeffTolerance = 1e-10;
// Refinement window half-width, in coarse grid steps.
constexpr double kWindowSteps = 2.0;

void require_port_a(int i) {
  if (i < 0 || i > 1) throw std::out_of_range("A port out of range");
}

void require_port_bc(int j) {
  if (j < 0 || j > 3) throw std::out_of_range("BC port out of range");
}

std::vector<double> uniform_phases(int points, double offset) {
  if (points < kMinPhasePoints) {
    throw std::invalid_argument("phase grid needs at least " + std::to_string(kMinPhasePoints) + " points");
  }
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) v[static_cast<std::size_t>(k)] = offset + 2.0 * kPi * k / points;
  return v;
}

CMatrix transducer_entries(double phi) {
  const Complex em = std::polar(kInvSqrt2, -phi / 2);
  const Complex ep = std::polar(kInvSqrt2, phi / 2);
  CMatrix u(2, 2);
  u << em, ep, -em, ep;
  return u;
}

template <typename Signal>
SignalRange refined_range(const Interferogram& ig, Signal&& signal) {
  const auto& samples = ig.samples();
  std::size_t arg_max = 0;
  std::size_t arg_min = 0;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const double v = signal(samples[k]);
    if (v > signal(samples[arg_max])) arg_max = k;
    if (v < signal(samples[arg_min])) arg_min = k;
  }

  const PhaseGrid& grid = ig.grid();
  const Interferometer& device = ig.device();
  auto extreme = [&](std::size_t k, double sign) {
    const auto [x0, y0] = grid.point(k);
    if (grid.mode() == SweepMode::Locked) {
      auto f = [&](double phi) { return sign * signal(device.sample(phi, phi)); };
      return sign * refine_max(f, x0, kWindowSteps * grid.step1()).value;
    }
    auto f = [&](double phi1, double phi2) { return sign * signal(device.sample(phi1, phi2)); };
    return sign * refine_max_2d(f, x0, y0, kWindowSteps * grid.step1(), kWindowSteps * grid.step2()).value;
  };
  SignalRange r{extreme(arg_max, 1.0), extreme(arg_min, -1.0)};
  // Refinement never loses to the coarse grid.
  r.max = std::max(r.max, signal(samples[arg_max]));
  r.min = std::min(r.min, signal(samples[arg_min]));
  return r;
}

}  // namespace

std::string_view to_string(SweepMode m) { return m == SweepMode::Locked ? "locked" : "independent"; }

std::optional<SweepMode> parse_sweep_mode(std::string_view name) {
  if (name == "locked") return SweepMode::Locked;
  if (name == "independent") return SweepMode::Independent;
  return std::nullopt;
}

// PhaseGrid -------------------------------------------------------------------

PhaseGrid::PhaseGrid(SweepMode mode, std::vector<double> phi1, std::vector<double> phi2)
    : mode_(mode), phi1_(std::move(phi1)), phi2_(std::move(phi2)) {}

PhaseGrid PhaseGrid::locked(int points, double offset) {
  auto v = uniform_phases(points, offset);
  return PhaseGrid(SweepMode::Locked, v, v);
}

PhaseGrid PhaseGrid::independent(int points_phi1, int points_phi2, double offset) {
  return PhaseGrid(SweepMode::Independent, uniform_phases(points_phi1, offset),
                   uniform_phases(points_phi2, offset));
}

PhaseGrid PhaseGrid::make(SweepMode mode, int points, double offset) {
  return mode == SweepMode::Locked ? locked(points, offset) : independent(points, points, offset);
}

double PhaseGrid::step1() const { return 2.0 * kPi / static_cast<double>(phi1_.size()); }
double PhaseGrid::step2() const { return 2.0 * kPi / static_cast<double>(phi2_.size()); }

std::size_t PhaseGrid::size() const {
  return mode_ == SweepMode::Locked ? phi1_.size() : phi1_.size() * phi2_.size();
}

std::pair<double, double> PhaseGrid::point(std::size_t k) const {
  if (k >= size()) throw std::out_of_range("grid index out of range");
  if (mode_ == SweepMode::Locked) return {phi1_[k], phi2_[k]};
  return {phi1_[k / phi2_.size()], phi2_[k % phi2_.size()]};
}

// GridSample ------------------------------------------------------------------

GridSample GridSample::from_joint(const std::array<double, 8>& joint) {
  GridSample s;
  s.joint = joint;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 4; ++j) {
      s.single_a[static_cast<std::size_t>(i)] += s.joint_at(i, j);
      s.single_bc[static_cast<std::size_t>(j)] += s.joint_at(i, j);
    }
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) s.corrected[static_cast<std::size_t>(2 * i + j)] = corrected_probability(s, i, j);
  }
  return s;
}

double corrected_probability(const GridSample& s, int i, int j) {
  require_port_a(i);
  require_port_bc(j);
  return s.joint_at(i, j) - s.single_a[static_cast<std::size_t>(i)] * s.single_bc[static_cast<std::size_t>(j)] + 0.25;
}

// Interferometer --------------------------------------------------------------

Interferometer::Interferometer(const PureState& source, const UnitaryMatrix& measurement_rotation) {
  if (source.n_qubits() != 3) throw std::invalid_argument("interferometer expects a three-qubit source");
  if (measurement_rotation.dim() != 4) throw std::invalid_argument("measurement rotation must be 4x4");
  const CMatrix full = tensor_product(CMatrix::Identity(2, 2), measurement_rotation.entries());
  rotated_psi_ = full * source.amplitudes();
}

Interferometer::Interferometer(const DensityMatrix& source, const UnitaryMatrix& measurement_rotation) {
  if (source.n_qubits() != 3) throw std::invalid_argument("interferometer expects a three-qubit source");
  if (measurement_rotation.dim() != 4) throw std::invalid_argument("measurement rotation must be 4x4");
  const CMatrix full = tensor_product(CMatrix::Identity(2, 2), measurement_rotation.entries());
  rotated_psi_.setZero();
  rotated_rho_ = Mat8(full * source.entries() * full.adjoint());
}

Interferometer Interferometer::with_basis(const PureState& source, const PreferredBasis& basis) {
  return Interferometer(source, general_basis_rotation(basis));
}

GridSample Interferometer::sample(double phi1, double phi2) const {
  const Complex am = std::polar(kInvSqrt2, -phi1 / 2);
  const Complex ap = std::polar(kInvSqrt2, phi1 / 2);
  const Complex bm = std::polar(kInvSqrt2, -phi2 / 2);
  const Complex bp = std::polar(kInvSqrt2, phi2 / 2);
  std::array<double, 8> joint{};

  if (!rotated_rho_) {
    // out(i, j) = sum_ab U_A(i, a) U_BC(j, b) v(4 a + b) with U_BC block diagonal.
    Complex x[2][4];
    for (int a = 0; a < 2; ++a) {
      const Complex* v = rotated_psi_.data() + 4 * a;
      x[a][0] = bm * v[0] + bp * v[1];
      x[a][1] = -bm * v[0] + bp * v[1];
      x[a][2] = bm * v[2] + bp * v[3];
      x[a][3] = -bm * v[2] + bp * v[3];
    }
    for (int j = 0; j < 4; ++j) {
      joint[static_cast<std::size_t>(j)] = std::norm(am * x[0][j] + ap * x[1][j]);
      joint[static_cast<std::size_t>(4 + j)] = std::norm(-am * x[0][j] + ap * x[1][j]);
    }
    return GridSample::from_joint(joint);
  }

  Eigen::Matrix<Complex, 2, 2> ua;
  ua << am, ap, -am, ap;
  Eigen::Matrix<Complex, 4, 4> ubc = Eigen::Matrix<Complex, 4, 4>::Zero();
  ubc.block<2, 2>(0, 0) << bm, bp, -bm, bp;
  ubc.block<2, 2>(2, 2) = ubc.block<2, 2>(0, 0);
  Mat8 w;
  for (int i = 0; i < 2; ++i) {
    for (int a = 0; a < 2; ++a) w.block<4, 4>(4 * i, 4 * a) = ua(i, a) * ubc;
  }
  const Mat8 t = w * (*rotated_rho_);
  for (int k = 0; k < 8; ++k) {
    joint[static_cast<std::size_t>(k)] = std::max(0.0, t.row(k).dot(w.row(k)).real());
  }
  return GridSample::from_joint(joint);
}

Interferogram::Interferogram(Interferometer device, PhaseGrid grid, std::vector<GridSample> samples)
    : device_(std::move(device)), grid_(std::move(grid)), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) throw std::invalid_argument("sample count does not match grid");
}

// Transducers and basis rotations ----------------------------------------------

UnitaryMatrix transducer(double phi) { return UnitaryMatrix(transducer_entries(phi)); }

UnitaryMatrix transducer_bc(double phi) {
  CMatrix u = CMatrix::Zero(4, 4);
  u.block(0, 0, 2, 2) = transducer_entries(phi);
  u.block(2, 2, 2, 2) = transducer_entries(phi);
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix transducer_bc_general(double phi, double gamma, double beta, double delta) {
  CMatrix u = CMatrix::Zero(4, 4);
  u.block(0, 0, 2, 2) = transducer_entries(phi);
  u(2, 2) = std::polar(std::cos(gamma / 2), -beta);
  u(2, 3) = -std::polar(std::sin(gamma / 2), -delta);
  u(3, 2) = std::polar(std::sin(gamma / 2), delta);
  u(3, 3) = std::polar(std::cos(gamma / 2), beta);
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix basis_rotation_R(const ThetaAngles& t) {
  const double c1 = std::cos(t.theta1 / 2), s1 = std::sin(t.theta1 / 2);
  const double c2 = std::cos(t.theta2 / 2), s2 = std::sin(t.theta2 / 2);
  const double c3 = std::cos(t.theta3 / 2), s3 = std::sin(t.theta3 / 2);
  CMatrix r(4, 4);
  // The last row carries +s1 s2 and -s1 c2; with the opposite signs it is
  // not orthogonal to the second row unless sin(theta1) = 0.
  r << c1 * c2, s1 * s3, s1 * c3, c1 * s2,
      -c1 * s2, s1 * c3, -s1 * s3, c1 * c2,
      -s1 * c2, c1 * s3, c1 * c3, -s1 * s2,
      s1 * s2, c1 * c3, -c1 * s3, -s1 * c2;
  return UnitaryMatrix(std::move(r));
}

UnitaryMatrix general_basis_rotation(const PreferredBasis& basis) {
  const CMatrix m = basis.matrix().adjoint();
  if (max_abs_diff(m * m.adjoint(), CMatrix::Identity(4, 4)) > kUnitaryTolerance) {
    throw std::invalid_argument("basis is not orthonormal");
  }
  return UnitaryMatrix(m);
}

UnitaryMatrix support_permutation(const UnitaryMatrix& r, const PreferredBasis& basis) {
  if (r.dim() != 4) throw std::invalid_argument("rotation must be 4x4");
  std::array<int, 2> image{};
  for (int j = 0; j < 2; ++j) {
    const CVector v = r.entries() * basis.phi[static_cast<std::size_t>(j)];
    Eigen::Index idx = 0;
    v.cwiseAbs().maxCoeff(&idx);
    if (std::abs(std::abs(v(idx)) - 1.0) > 1e-9) {
      throw std::invalid_argument("rotation does not map the support onto computational states");
    }
    image[static_cast<std::size_t>(j)] = static_cast<int>(idx);
  }
  if (image[0] == image[1]) throw std::invalid_argument("support vectors share an image");

  std::array<int, 4> target{-1, -1, -1, -1};  // target[k]: port assigned to computational state k
  target[static_cast<std::size_t>(image[0])] = 0;
  target[static_cast<std::size_t>(image[1])] = 1;
  int next = 2;
  for (int& t : target) {
    if (t < 0) t = next++;
  }
  CMatrix p = CMatrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) p(target[static_cast<std::size_t>(k)], k) = 1.0;
  return UnitaryMatrix(std::move(p));
}

// Literal pipeline ------------------------------------------------------------

PureState output_state(const PureState& xi, double phi1, double phi2, const UnitaryMatrix& r,
                       const UnitaryMatrix& perm) {
  if (xi.n_qubits() != 3) throw std::invalid_argument("expected a three-qubit state");
  if (r.dim() != 4 || perm.dim() != 4) throw std::invalid_argument("BC operators must be 4x4");
  const UnitaryMatrix bc = r.adjoint() * perm.adjoint() * transducer_bc(phi2) * perm * r;
  const int a[] = {0};
  const int bc_qubits[] = {1, 2};
  return apply_unitary(apply_unitary(xi, transducer(phi1), a), bc, bc_qubits);
}

double joint_probability(const PureState& out, int i, int j, const UnitaryMatrix& rotation) {
  require_port_a(i);
  require_port_bc(j);
  if (out.n_qubits() != 3) throw std::invalid_argument("expected a three-qubit state");
  const int bc_qubits[] = {1, 2};
  const PureState measured = apply_unitary(out, rotation, bc_qubits);
  return std::norm(measured[static_cast<std::size_t>(4 * i + j)]);
}

double single_probability(const PureState& out, int i) {
  require_port_a(i);
  const int a[] = {0};
  return partial_trace(out, a)(static_cast<std::size_t>(i), static_cast<std::size_t>(i)).real();
}

// Sweeps ----------------------------------------------------------------------

Interferogram sweep_interferogram(const Interferometer& device, const PhaseGrid& grid) {
  std::vector<GridSample> samples(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t k) {
    const auto [phi1, phi2] = grid.point(k);
    samples[k] = device.sample(phi1, phi2);
  });
  return Interferogram(device, grid, std::move(samples));
}

Interferogram sweep_interferogram(const PureState& xi, const PreferredBasis& basis, const PhaseGrid& grid) {
  return sweep_interferogram(Interferometer::with_basis(xi, basis), grid);
}

// Visibilities ----------------------------------------------------------------

double visibility(const SignalRange& r) {
  const double denom = r.max + r.min;
  if (denom == 0.0) return 0.0;
  return (r.max - r.min) / denom;
}

SignalRange single_range(const Interferogram& ig, int i) {
  require_port_a(i);
  return refined_range(ig, [i](const GridSample& s) { return s.single_a[static_cast<std::size_t>(i)]; });
}

SignalRange corrected_range(const Interferogram& ig, int i, int j) {
  require_port_a(i);
  require_port_bc(j);
  return refined_range(ig, [i, j](const GridSample& s) { return corrected_probability(s, i, j); });
}

double visibility_single(const Interferogram& ig, int i) { return visibility(single_range(ig, i)); }

double visibility_two_party(const Interferogram& ig, int i, int j) {
  if (j == 2 || j == 3) throw std::invalid_argument("outside support");
  return visibility(corrected_range(ig, i, j));
}

std::array<double, 4> port_visibilities(const Interferogram& ig, int i) {
  std::array<double, 4> v{};
  for (int j = 0; j < 4; ++j) v[static_cast<std::size_t>(j)] = visibility(corrected_range(ig, i, j));
  return v;
}

namespace {

void require_normalized(const BasisCoefficients& coeffs) {
  double total = 0.0;
  for (const Complex& c : coeffs) total += std::norm(c);
  if (std::abs(total - 1.0) > kCoeffTolerance) {
    throw std::invalid_argument("basis coefficients are not normalized");
  }
}

}  // namespace

ExtendedVisibility extended_basis_visibility(const std::array<double, 4>& per_port, const BasisCoefficients& coeffs) {
  require_normalized(coeffs);
  ExtendedVisibility out{0.0, per_port};
  for (std::size_t k = 0; k < 4; ++k) out.value += std::norm(coeffs[k]) * out.per_port[k];
  return out;
}

ExtendedVisibility extended_basis_visibility(const Interferogram& ig, const BasisCoefficients& coeffs) {
  require_normalized(coeffs);
  return extended_basis_visibility(port_visibilities(ig, 0), coeffs);
}

ExtendedVisibility extended_basis_visibility(const PureState& xi, const BasisCoefficients& coeffs,
                                             const PhaseGrid& grid) {
  require_normalized(coeffs);
  return extended_basis_visibility(sweep_interferogram(xi, preferred_basis(xi), grid), coeffs);
}

}  // namespace qcomp
