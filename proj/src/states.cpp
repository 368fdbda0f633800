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

#include "qcomp/states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qcomp {

namespace {

constexpr double kPi = std::numbers::pi;

double uniform53(std::mt19937_64& gen) {
  // (0, 1]: avoids log(0) in Box-Muller.
  return (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

std::string_view to_string(StateClass c) {
  switch (c) {
    case StateClass::GHZ: return "ghz";
    case StateClass::W: return "w";
    case StateClass::Intermediate: return "intermediate";
    case StateClass::General: return "general";
  }
  return "general";
}

std::optional<StateClass> parse_state_class(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "ghz") return StateClass::GHZ;
  if (lower == "w") return StateClass::W;
  if (lower == "intermediate" || lower == "int") return StateClass::Intermediate;
  if (lower == "general") return StateClass::General;
  return std::nullopt;
}

FamilyParams FamilyParams::ghz(double alpha1) {
  FamilyParams p;
  p.alpha1 = alpha1;
  p.alpha2[1] = kPi;
  p.alpha3[1][1] = kPi;
  return p;
}

FamilyParams FamilyParams::w(double alpha1, double alpha2_0) {
  FamilyParams p;
  p.alpha1 = alpha1;
  p.alpha2[0] = alpha2_0;
  p.alpha3[0][0] = kPi;
  return p;
}

FamilyParams FamilyParams::intermediate(double alpha1, double alpha2_0, double alpha3_00) {
  FamilyParams p;
  p.alpha1 = alpha1;
  p.alpha2[0] = alpha2_0;
  p.alpha3[0][0] = alpha3_00;
  return p;
}

PureState amplitudes_from_angles(const FamilyParams& p) {
  CVector a(8);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        a(4 * i + 2 * j + k) = std::cos(p.alpha1 / 2 - kPi / 2 * i) *
                               std::cos(p.alpha2[i] / 2 - kPi / 2 * j) *
                               std::cos(p.alpha3[i][j] / 2 - kPi / 2 * k);
      }
    }
  }
  return PureState::normalized(std::move(a));
}

PureState ghz_state(double alpha1) {
  CVector a = CVector::Zero(8);
  a(0) = std::cos(alpha1 / 2);
  a(7) = std::sin(alpha1 / 2);
  return PureState::normalized(std::move(a));
}

PureState w_state(double alpha1, double alpha2_0) {
  CVector a = CVector::Zero(8);
  a(1) = std::cos(alpha1 / 2) * std::cos(alpha2_0 / 2);
  a(2) = std::cos(alpha1 / 2) * std::sin(alpha2_0 / 2);
  a(4) = std::sin(alpha1 / 2);
  return PureState::normalized(std::move(a));
}

PureState intermediate_state(double alpha1, double alpha2_0, double alpha3_00) {
  CVector a = CVector::Zero(8);
  a(0) = std::cos(alpha1 / 2) * std::cos(alpha2_0 / 2) * std::cos(alpha3_00 / 2);
  a(1) = std::cos(alpha1 / 2) * std::cos(alpha2_0 / 2) * std::sin(alpha3_00 / 2);
  a(2) = std::cos(alpha1 / 2) * std::sin(alpha2_0 / 2);
  a(4) = std::sin(alpha1 / 2);
  return PureState::normalized(std::move(a));
}

PureState family_state(StateClass c, const FamilyParams& p) {
  switch (c) {
    case StateClass::GHZ: return ghz_state(p.alpha1);
    case StateClass::W: return w_state(p.alpha1, p.alpha2[0]);
    case StateClass::Intermediate: return intermediate_state(p.alpha1, p.alpha2[0], p.alpha3[0][0]);
    case StateClass::General: return amplitudes_from_angles(p);
  }
  throw std::invalid_argument("unknown state class");
}

PureState random_pure_state(std::uint64_t seed, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 20) throw std::invalid_argument("unsupported qubit count");
  std::mt19937_64 gen(seed);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  CVector a(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double r = std::sqrt(-2.0 * std::log(uniform53(gen)));
    const double t = 2.0 * kPi * uniform53(gen);
    a(i) = Complex(r * std::cos(t), r * std::sin(t));
  }
  return PureState::normalized(std::move(a));
}

DensityMatrix pseudopure(const PureState& psi, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("pseudopure polarization must lie in (0, 1]");
  }
  const auto dim = static_cast<Eigen::Index>(psi.dim());
  CMatrix rho = ((1.0 - epsilon) / static_cast<double>(dim)) * CMatrix::Identity(dim, dim) +
                epsilon * psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(std::move(rho));
}

CMatrix relevant_pure_part(const DensityMatrix& rho, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("pseudopure polarization must lie in (0, 1]");
  }
  const auto dim = static_cast<Eigen::Index>(rho.dim());
  const CMatrix background = ((1.0 - epsilon) / static_cast<double>(dim)) * CMatrix::Identity(dim, dim);
  return (rho.entries() - background) / epsilon;
}

}  // namespace qcomp
