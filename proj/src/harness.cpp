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

#include "qcomp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcomp {

namespace {

constexpr int kA = 0;

void fill_direct(ComplementarityRecord& r, const PureState& xi) {
  r.concurrence = concurrence_bipartition(xi, kA);
  r.predictability = predictability(xi, kA);
  r.v_single = single_visibility_direct(xi, kA);
  r.character = single_particle_character(xi, kA);
}

PhaseGrid grid_for(const VerifyOptions& o) { return PhaseGrid::make(o.mode, o.phase_points); }

double& sweep_slot(FamilyParams& p, const std::string& name) {
  if (name == "alpha1") return p.alpha1;
  if (name == "alpha2_0") return p.alpha2[0];
  if (name == "alpha3_00") return p.alpha3[0][0];
  throw std::invalid_argument("invalid parameter name: " + name);
}

}  // namespace

std::string_view to_string(BasisSource s) { return s == BasisSource::Table ? "table" : "eigensolve"; }

std::optional<BasisSource> parse_basis_source(std::string_view name) {
  if (name == "table") return BasisSource::Table;
  if (name == "eigensolve") return BasisSource::Eigensolve;
  return std::nullopt;
}

ComplementarityRecord verify_equality(const PureState& xi, const VerifyOptions& options) {
  return verify_equality(xi, Interferometer::with_basis(xi, preferred_basis(xi)), options);
}

ComplementarityRecord verify_equality(const PureState& xi, const Interferometer& device,
                                      const VerifyOptions& options) {
  ComplementarityRecord r;
  fill_direct(r, xi);
  const Interferogram ig = sweep_interferogram(device, grid_for(options));
  r.v2 = visibility_two_party(ig, kA, 0);
  r.v_single_interferometric = visibility_single(ig, kA);
  r.residual_equality = std::abs(r.v2 * r.v2 + r.character * r.character - 1.0);
  return r;
}

ComplementarityRecord verify_inequality(const PureState& xi, const BasisCoefficients& coeffs,
                                        const VerifyOptions& options) {
  ComplementarityRecord r;
  fill_direct(r, xi);
  const Interferogram ig = sweep_interferogram(xi, preferred_basis(xi), grid_for(options));
  r.v2 = extended_basis_visibility(ig, coeffs).value;
  r.v_single_interferometric = visibility_single(ig, kA);
  const double total = r.v2 * r.v2 + r.character * r.character;
  r.residual_equality = std::abs(total - 1.0);
  r.slack_inequality = 1.0 - total;
  return r;
}

Interferometer family_interferometer(StateClass family, const FamilyParams& params, BasisSource source) {
  const PureState xi = family_state(family, params);
  if (source == BasisSource::Eigensolve || family == StateClass::General) {
    return Interferometer::with_basis(xi, preferred_basis(xi));
  }
  const PreferredBasis basis = table_basis(params, family);
  const UnitaryMatrix r = basis_rotation_R(theta_angles(params, family));
  return Interferometer(xi, support_permutation(r, basis) * r);
}

SweepSpec SweepSpec::standard(StateClass family, int points) {
  if (points < 2) throw std::invalid_argument("sweep needs at least two points");
  SweepSpec spec;
  spec.family = family;
  spec.parameter = "alpha1";
  for (int k = 0; k < points; ++k) spec.values.push_back(std::numbers::pi * k / (points - 1));
  if (family == StateClass::W) spec.fixed = FamilyParams::w(0.0, std::numbers::pi / 2);
  if (family == StateClass::Intermediate) {
    spec.fixed = FamilyParams::intermediate(0.0, std::numbers::pi / 3, std::numbers::pi / 4);
  }
  if (family == StateClass::GHZ) spec.fixed = FamilyParams::ghz(0.0);
  return spec;
}

std::vector<ComplementarityRecord> family_sweep(const SweepSpec& spec) {
  if (spec.family == StateClass::General) throw std::invalid_argument("family sweeps need a named family");
  if (spec.values.empty()) throw std::invalid_argument("sweep grid is empty");
  FamilyParams probe = spec.fixed;
  sweep_slot(probe, spec.parameter);

  std::vector<ComplementarityRecord> out;
  out.reserve(spec.values.size());
  for (double value : spec.values) {
    FamilyParams p = spec.fixed;
    sweep_slot(p, spec.parameter) = value;
    const PureState xi = family_state(spec.family, p);
    ComplementarityRecord r = verify_equality(xi, family_interferometer(spec.family, p, spec.source), spec.options);
    r.descriptor = std::string(to_string(spec.family)) + " " + spec.parameter;
    r.parameter = value;
    out.push_back(std::move(r));
  }
  return out;
}

PseudopureReport pseudopure_check(const PureState& xi, double epsilon, const PhaseGrid& grid) {
  const UnitaryMatrix rotation = general_basis_rotation(preferred_basis(xi));
  const Interferogram pure = sweep_interferogram(Interferometer(xi, rotation), grid);
  const Interferogram mixed = sweep_interferogram(Interferometer(pseudopure(xi, epsilon), rotation), grid);

  PseudopureReport report;
  report.epsilon = epsilon;
  const double background = (1.0 - epsilon) / 8.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::array<double, 8> joint{};
    for (std::size_t c = 0; c < 8; ++c) joint[c] = (mixed.at(k).joint[c] - background) / epsilon;
    const GridSample rebuilt = GridSample::from_joint(joint);
    const GridSample& ref = pure.at(k);
    for (std::size_t c = 0; c < 8; ++c) {
      report.max_joint_deviation = std::max(report.max_joint_deviation, std::abs(rebuilt.joint[c] - ref.joint[c]));
    }
    for (std::size_t c = 0; c < 2; ++c) {
      report.max_single_deviation =
          std::max(report.max_single_deviation, std::abs(rebuilt.single_a[c] - ref.single_a[c]));
    }
    for (std::size_t c = 0; c < 4; ++c) {
      report.max_corrected_deviation =
          std::max(report.max_corrected_deviation, std::abs(rebuilt.corrected[c] - ref.corrected[c]));
    }
  }
  report.match = report.max_joint_deviation < kPseudopureTolerance &&
                 report.max_single_deviation < kPseudopureTolerance &&
                 report.max_corrected_deviation < kPseudopureTolerance;
  return report;
}

MixedProbe mixed_state_probe(const DensityMatrix& rho) {
  const int keep[] = {kA};
  const DensityMatrix a = partial_trace(rho, keep);
  const double p = a(0, 0).real() - a(1, 1).real();
  const double v = 2.0 * std::abs(a(0, 1));
  return {std::max(0.0, 2.0 * (1.0 - a.purity())), v * v + p * p};
}

VerifySummary summarize(const std::vector<ComplementarityRecord>& records, double tolerance) {
  VerifySummary s;
  s.n_states = records.size();
  if (records.empty()) return s;
  double sum = 0.0;
  for (const auto& r : records) {
    s.max_residual = std::max(s.max_residual, r.residual_equality);
    sum += r.residual_equality;
    if (r.slack_inequality) s.min_slack = std::min(s.min_slack.value_or(*r.slack_inequality), *r.slack_inequality);
  }
  s.mean_residual = sum / static_cast<double>(records.size());
  s.pass = s.min_slack ? *s.min_slack >= -kSlackTolerance : s.max_residual < tolerance;
  return s;
}

}  // namespace qcomp
