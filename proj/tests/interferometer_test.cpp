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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace qcomp {
namespace {

using oracle::C;
using oracle::Mat;
using oracle::Vec;

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

TEST(TransducerTest, SpecExamples) {
  Mat at0(2, 2);
  at0 << 1, 1, -1, 1;
  EXPECT_LT(max_abs_diff(transducer(0.0).entries(), at0 * kInvSqrt2), 1e-15);
  Mat atpi(2, 2);
  atpi << C(0, -1), C(0, 1), C(0, 1), C(0, 1);
  EXPECT_LT(max_abs_diff(transducer(kPi).entries(), atpi * kInvSqrt2), 1e-15);
  Mat bc0 = Mat::Zero(4, 4);
  bc0.block(0, 0, 2, 2) = at0 * kInvSqrt2;
  bc0.block(2, 2, 2, 2) = at0 * kInvSqrt2;
  EXPECT_LT(max_abs_diff(transducer_bc(0.0).entries(), bc0), 1e-15);
}

TEST(TransducerTest, GeneralFormReducesToBlockForm) {
  for (double phi : {0.0, 0.4, 2.1, -1.3}) {
    // gamma = -pi/2 reproduces the block-diagonal transducer exactly.
    EXPECT_LT(max_abs_diff(transducer_bc_general(phi, -kPi / 2, phi / 2, -phi / 2).entries(),
                           transducer_bc(phi).entries()),
              1e-15);
    // gamma = +pi/2 differs on the lower block only, so support ports agree.
    const Mat plus = transducer_bc_general(phi, kPi / 2, phi / 2, -phi / 2).entries();
    EXPECT_GT(max_abs_diff(plus, transducer_bc(phi).entries()), 0.5);
    EXPECT_LT(max_abs_diff(plus.block(0, 0, 2, 2), transducer(phi).entries()), 1e-15);
  }
  const Vec in_support = oracle::Rng(2).state(8).cwiseProduct(Vec((Eigen::VectorXcd(8) << 1, 1, 0, 0, 1, 1, 0, 0).finished()));
  const PureState xi = PureState::normalized(in_support);
  const int bc[] = {1, 2};
  const PureState a = apply_unitary(xi, transducer_bc_general(0.8, kPi / 2, 0.4, -0.4), bc);
  const PureState b = apply_unitary(xi, transducer_bc(0.8), bc);
  EXPECT_LT((a.amplitudes().cwiseAbs2() - b.amplitudes().cwiseAbs2()).cwiseAbs().maxCoeff(), 1e-15);
}

Mat printed_rotation(double t1, double t2, double t3) {
  const double c1 = std::cos(t1 / 2), s1 = std::sin(t1 / 2);
  const double c2 = std::cos(t2 / 2), s2 = std::sin(t2 / 2);
  const double c3 = std::cos(t3 / 2), s3 = std::sin(t3 / 2);
  Mat r(4, 4);
  r << c1 * c2, s1 * s3, s1 * c3, c1 * s2,
      -c1 * s2, s1 * c3, -s1 * s3, c1 * c2,
      -s1 * c2, c1 * s3, c1 * c3, -s1 * s2,
      -s1 * s2, c1 * c3, -c1 * s3, s1 * c2;
  return r;
}

TEST(BasisRotationTest, ZeroAnglesGiveCnot32) {
  Mat cnot = Mat::Zero(4, 4);
  cnot(0, 0) = cnot(1, 3) = cnot(2, 2) = cnot(3, 1) = 1.0;
  EXPECT_EQ(basis_rotation_R({0, 0, 0}).entries(), cnot);
}

TEST(BasisRotationTest, OrthogonalWithClosedFormRows) {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const ThetaAngles t{rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi)};
    const UnitaryMatrix r = basis_rotation_R(t);
    EXPECT_LT(max_abs_diff(r.entries() * r.entries().adjoint(), Mat::Identity(4, 4)), 1e-14);
    EXPECT_LT((r.entries().row(0).transpose() - phi0_from_theta(t)).norm(), 1e-15);
    EXPECT_LT((r.entries() * phi0_from_theta(t) - CVector::Unit(4, 0)).norm(), 1e-14);
    const Mat printed = printed_rotation(t.theta1, t.theta2, t.theta3);
    EXPECT_LT(max_abs_diff(printed.topRows(3), r.entries().topRows(3)), 1e-15);
    // The printed last row fails orthogonality by sin(theta1).
    EXPECT_NEAR(printed.row(1).dot(printed.row(3)).real(), std::sin(t.theta1), 1e-14);
  }
}

TEST(BasisRotationTest, GeneralRotationAndPermutation) {
  PreferredBasis computational;
  for (int k = 0; k < 4; ++k) computational.phi[static_cast<std::size_t>(k)] = CVector::Unit(4, k);
  EXPECT_EQ(general_basis_rotation(computational).entries(), Mat(Mat::Identity(4, 4)));
  PreferredBasis broken = computational;
  broken.phi[3] = broken.phi[0];
  EXPECT_THROW(general_basis_rotation(broken), std::invalid_argument);

  // GHZ: R maps |00>, |11> to |00>, |01>, so the permutation is trivial.
  const UnitaryMatrix r0 = basis_rotation_R({0, 0, 0});
  const PreferredBasis ghz = table_basis(FamilyParams::ghz(1.0), StateClass::GHZ);
  EXPECT_EQ(support_permutation(r0, ghz).entries(), Mat(Mat::Identity(4, 4)));

  const auto check = [](const FamilyParams& p, StateClass c) {
    const PreferredBasis b = table_basis(p, c);
    const UnitaryMatrix r = basis_rotation_R(theta_angles(p, c));
    const UnitaryMatrix m = support_permutation(r, b) * r;
    for (int j = 0; j < 2; ++j) {
      EXPECT_NEAR(std::abs((m.entries() * b.phi[static_cast<std::size_t>(j)])(j)), 1.0, 1e-12);
    }
  };
  check(FamilyParams::w(1.0, 0.7), StateClass::W);
  check(FamilyParams::intermediate(1.0, 0.7, 0.9), StateClass::Intermediate);
}

TEST(PipelineTest, OutputStateSpecExample) {
  const UnitaryMatrix id = UnitaryMatrix::identity(4);
  const PureState out = output_state(PureState::basis_state(3, 0), 0.0, 0.0, id, id);
  // (1/2)(|0> - |1>)_A (x) (|00> - |01>)_BC
  CVector expected = CVector::Zero(8);
  expected(0) = 0.5;
  expected(1) = -0.5;
  expected(4) = -0.5;
  expected(5) = 0.5;
  EXPECT_LT((out.amplitudes() - expected).norm(), 1e-15);
}

TEST(PipelineTest, SingleProbabilityOfSplitter) {
  const UnitaryMatrix id = UnitaryMatrix::identity(4);
  const PureState out = output_state(PureState::basis_state(3, 0), 0.0, 0.0, id, id);
  EXPECT_NEAR(single_probability(out, 0), 0.5, 1e-15);
  EXPECT_NEAR(single_probability(out, 1), 0.5, 1e-15);
  EXPECT_THROW(single_probability(out, 2), std::out_of_range);
}

TEST(PipelineTest, FastPathMatchesLiteralAndBruteForce) {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState xi = random_pure_state(static_cast<std::uint64_t>(100 + trial), 3);
    const UnitaryMatrix m = general_basis_rotation(preferred_basis(xi));
    const Interferometer device(xi, m);
    const Interferometer mixed(xi.projector(), m);
    const UnitaryMatrix id = UnitaryMatrix::identity(4);
    for (int k = 0; k < 5; ++k) {
      const double phi1 = rng.uniform(-kPi, 3 * kPi);
      const double phi2 = rng.uniform(-kPi, 3 * kPi);
      const GridSample fast = device.sample(phi1, phi2);
      const GridSample slow = mixed.sample(phi1, phi2);
      const Eigen::VectorXd brute = oracle::pipeline_joint(xi.amplitudes(), m.entries(), phi1, phi2);
      const PureState out = output_state(xi, phi1, phi2, m, id);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 4; ++j) {
          const double p = brute(4 * i + j);
          EXPECT_NEAR(fast.joint_at(i, j), p, 1e-14);
          EXPECT_NEAR(slow.joint_at(i, j), p, 1e-14);
          EXPECT_NEAR(joint_probability(out, i, j, m), p, 1e-14);
        }
        EXPECT_NEAR(fast.single_a[static_cast<std::size_t>(i)], single_probability(out, i), 1e-14);
      }
    }
  }
}

TEST(PipelineTest, TableRouteMatchesEigenRoute) {
  // P R and the eigenvector rotation agree up to phases on the support, so
  // every support-port probability coincides.
  const FamilyParams p = FamilyParams::intermediate(1.1, 0.8, 2.0);
  const PureState xi = family_state(StateClass::Intermediate, p);
  const PreferredBasis table = table_basis(p, StateClass::Intermediate);
  const UnitaryMatrix r = basis_rotation_R(theta_angles(p, StateClass::Intermediate));
  const UnitaryMatrix perm = support_permutation(r, table);
  const Interferometer via_r(xi, perm * r);
  const Interferometer via_table(xi, general_basis_rotation(table));
  for (double phi1 : {0.1, 1.9, 4.0}) {
    for (double phi2 : {0.3, 2.6, 5.2}) {
      const GridSample a = via_r.sample(phi1, phi2);
      const GridSample b = via_table.sample(phi1, phi2);
      for (std::size_t c = 0; c < 8; ++c) EXPECT_NEAR(a.joint[c], b.joint[c], 1e-14);
      const PureState out = output_state(xi, phi1, phi2, r, perm);
      EXPECT_NEAR(joint_probability(out, 0, 0, perm * r), a.joint_at(0, 0), 1e-14);
    }
  }
}

TEST(PipelineTest, GhzClosedForm) {
  const PureState xi = ghz_state(kPi / 2);
  const Interferometer device(xi, basis_rotation_R({0, 0, 0}));
  for (double phi1 = -3.0; phi1 < 3.0; phi1 += 0.7) {
    for (double phi2 = -3.0; phi2 < 3.0; phi2 += 0.9) {
      const GridSample s = device.sample(phi1, phi2);
      EXPECT_NEAR(s.joint_at(0, 0), 0.25 * (1.0 + std::cos(phi1 + phi2)), 1e-15);
      EXPECT_NEAR(s.single_a[0], 0.5, 1e-15);
      EXPECT_NEAR(s.corrected_at(0, 0), s.joint_at(0, 0), 1e-15);
    }
  }
}

TEST(PhaseGridTest, Layout) {
  const PhaseGrid locked = PhaseGrid::locked(16);
  EXPECT_EQ(locked.size(), 16u);
  EXPECT_DOUBLE_EQ(locked.point(4).first, kPi / 2);
  EXPECT_DOUBLE_EQ(locked.point(4).second, kPi / 2);
  const PhaseGrid ind = PhaseGrid::independent(16, 20, 0.5);
  EXPECT_EQ(ind.size(), 320u);
  EXPECT_DOUBLE_EQ(ind.point(21).first, 0.5 + 2 * kPi / 16);
  EXPECT_DOUBLE_EQ(ind.point(21).second, 0.5 + 2 * kPi / 20);
  EXPECT_THROW(PhaseGrid::locked(15), std::invalid_argument);
  EXPECT_THROW(locked.point(16), std::out_of_range);
  EXPECT_EQ(parse_sweep_mode("independent"), SweepMode::Independent);
  EXPECT_FALSE(parse_sweep_mode("diagonal").has_value());
}

TEST(InterferogramTest, ProductStateIsFlat) {
  oracle::Rng rng(19);
  const Vec a = rng.state(2);
  const Vec bc = rng.state(4);
  const PureState xi(oracle::kron(a, bc));
  const Interferogram ig = sweep_interferogram(xi, preferred_basis(xi), PhaseGrid::independent(16, 16));
  for (const GridSample& s : ig.samples()) {
    for (double pbar : s.corrected) EXPECT_NEAR(pbar, 0.25, 1e-15);
  }
  EXPECT_NEAR(visibility_two_party(ig, 0, 0), 0.0, 1e-12);
}

TEST(InterferogramTest, GhzLockedRangeAndVisibility) {
  const PureState xi = ghz_state(kPi / 2);
  const Interferogram ig = sweep_interferogram(Interferometer(xi, basis_rotation_R({0, 0, 0})), PhaseGrid::locked(360));
  const SignalRange r = corrected_range(ig, 0, 0);
  EXPECT_NEAR(r.max, 0.5, 1e-12);
  EXPECT_NEAR(r.min, 0.0, 1e-12);
  EXPECT_NEAR(visibility_two_party(ig, 0, 0), 1.0, 1e-9);
  EXPECT_NEAR(visibility_single(ig, 0), 0.0, 1e-12);
  try {
    visibility_two_party(ig, 0, 2);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "outside support");
  }
}

TEST(VisibilityTest, ZeroDenominator) { EXPECT_EQ(visibility({0.0, 0.0}), 0.0); }

TEST(VisibilityTest, SingleParticleExamples) {
  const PhaseGrid grid = PhaseGrid::independent(32, 32);
  const auto single = [&](const PureState& xi) {
    return visibility_single(sweep_interferogram(xi, preferred_basis(xi), grid), 0);
  };
  CVector plus = CVector::Zero(8);
  plus(0) = plus(4) = kInvSqrt2;
  EXPECT_NEAR(single(PureState(plus)), 1.0, 1e-9);
  CVector tilted = CVector::Zero(8);
  tilted(0) = std::cos(kPi / 8);
  tilted(4) = std::sin(kPi / 8);
  EXPECT_NEAR(single(PureState(tilted)), std::sin(kPi / 4), 1e-6);
  for (double a1 : {0.3, 1.4, 2.8}) EXPECT_NEAR(single(ghz_state(a1)), 0.0, 1e-12);
}

TEST(VisibilityTest, TwoPartyExamples) {
  const PhaseGrid grid = PhaseGrid::independent(64, 64);
  const auto two = [&](const PureState& xi) {
    return visibility_two_party(sweep_interferogram(xi, preferred_basis(xi), grid), 0, 0);
  };
  EXPECT_NEAR(two(ghz_state(kPi / 2)), 1.0, 1e-6);
  EXPECT_NEAR(two(PureState::basis_state(3, 0)), 0.0, 1e-12);
  EXPECT_NEAR(two(w_state(kPi / 3, kPi / 2)), std::sin(kPi / 3), 1e-6);
}

TEST(VisibilityTest, TwoPartyEqualsConcurrenceOnRandomStates) {
  const PhaseGrid grid = PhaseGrid::independent(48, 48);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PureState xi = random_pure_state(seed, 3);
    const Interferogram ig = sweep_interferogram(xi, preferred_basis(xi), grid);
    const double c = concurrence_bipartition(xi, 0);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) EXPECT_NEAR(visibility_two_party(ig, i, j), c, 1e-6);
    }
    EXPECT_NEAR(visibility_single(ig, 0), single_visibility_direct(xi, 0), 1e-6);
    const auto ports = port_visibilities(ig, 0);
    EXPECT_NEAR(ports[2], 0.0, 1e-12);
    EXPECT_NEAR(ports[3], 0.0, 1e-12);
  }
}

TEST(VisibilityTest, LockedSweepMissesWConcurrence) {
  // With Phi_0 = |00> paired to A = 1, the locked diagonal sees no fringe.
  const FamilyParams p = FamilyParams::w(kPi / 2, kPi / 2);
  const PureState xi = w_state(kPi / 2, kPi / 2);
  const PreferredBasis table = table_basis(p, StateClass::W);
  const Interferometer device(xi, general_basis_rotation(table));
  EXPECT_NEAR(visibility_two_party(sweep_interferogram(device, PhaseGrid::locked(360)), 0, 0), 0.0, 1e-12);
  EXPECT_NEAR(visibility_two_party(sweep_interferogram(device, PhaseGrid::independent(64, 64)), 0, 0), 1.0, 1e-6);
}

TEST(ExtendedBasisTest, Decomposition) {
  const PhaseGrid grid = PhaseGrid::independent(48, 48);
  const PureState xi = random_pure_state(4, 3);
  const Interferogram ig = sweep_interferogram(xi, preferred_basis(xi), grid);
  const double c = concurrence_bipartition(xi, 0);

  const ExtendedVisibility e0 = extended_basis_visibility(ig, {1.0, 0.0, 0.0, 0.0});
  EXPECT_NEAR(e0.value, visibility_two_party(ig, 0, 0), 1e-15);

  const double r = 1.0 / std::sqrt(10.0);
  const BasisCoefficients coeffs{C(r, 0), C(0, 2 * r), C(r, r), C(0, -r * std::sqrt(3.0))};
  const ExtendedVisibility e = extended_basis_visibility(ig, coeffs);
  EXPECT_NEAR(e.value, 0.5 * c, 1e-6);  // (|c0|^2 + |c1|^2) C
  double sum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) sum += std::norm(coeffs[k]) * e.per_port[k];
  EXPECT_NEAR(e.value, sum, 1e-15);
  EXPECT_NEAR(extended_basis_visibility(xi, coeffs, grid).value, e.value, 1e-15);
  EXPECT_EQ(extended_basis_visibility(port_visibilities(ig, 0), coeffs).value, e.value);
  EXPECT_THROW(extended_basis_visibility(ig, {1.0, 1.0, 0.0, 0.0}), std::invalid_argument);
}

}  // namespace
}  // namespace qcomp
