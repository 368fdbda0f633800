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

#include "qcomp/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcomp/harness.hpp"
#include "qcomp/io.hpp"
#include "qcomp/states.hpp"

namespace qcomp {

namespace {

// Bad input that should end the run with the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string output;
  std::string format = "csv";
  double tolerance = kEqualityTolerance;
  int phase_points = kDefaultPhasePoints;
  std::string mode;  // empty: command default
  std::uint64_t seed = 0;
  bool degrees = false;

  // State selection.
  std::string state_class;
  bool random = false;
  std::string state_file;
  std::optional<double> alpha1, alpha2_0, alpha2_1, alpha3_00, alpha3_01, alpha3_10, alpha3_11;

  std::string basis;  // table | eigensolve; empty: per-source default
  std::string basis_coeffs;

  // verify / figure9.
  std::string family;
  std::string sweep = "alpha1";
  int points = 33;
  int count = 1;
};

double angle(const RunConfig& cfg, const std::optional<double>& v, double fallback) {
  if (!v) return fallback;
  if (!std::isfinite(*v)) throw UsageError("angles must be finite");
  return cfg.degrees ? *v * std::numbers::pi / 180.0 : *v;
}

StateClass require_class(const std::string& name) {
  const auto c = parse_state_class(name);
  if (!c) throw UsageError("unknown state class: " + name);
  return *c;
}

// Family defaults overridden by any angle given on the command line.
FamilyParams family_params(const RunConfig& cfg, StateClass c, const FamilyParams& base) {
  FamilyParams p = base;
  p.alpha1 = angle(cfg, cfg.alpha1, p.alpha1);
  p.alpha2[0] = angle(cfg, cfg.alpha2_0, p.alpha2[0]);
  if (c == StateClass::General) {
    p.alpha2[1] = angle(cfg, cfg.alpha2_1, p.alpha2[1]);
    p.alpha3[0][1] = angle(cfg, cfg.alpha3_01, p.alpha3[0][1]);
    p.alpha3[1][0] = angle(cfg, cfg.alpha3_10, p.alpha3[1][0]);
    p.alpha3[1][1] = angle(cfg, cfg.alpha3_11, p.alpha3[1][1]);
  }
  if (c == StateClass::General || c == StateClass::Intermediate) {
    p.alpha3[0][0] = angle(cfg, cfg.alpha3_00, p.alpha3[0][0]);
  }
  switch (c) {
    case StateClass::GHZ: return FamilyParams::ghz(p.alpha1);
    case StateClass::W: return FamilyParams::w(p.alpha1, p.alpha2[0]);
    case StateClass::Intermediate: return FamilyParams::intermediate(p.alpha1, p.alpha2[0], p.alpha3[0][0]);
    case StateClass::General: return p;
  }
  return p;
}

FamilyParams class_defaults(StateClass c) {
  switch (c) {
    case StateClass::GHZ: return FamilyParams::ghz(0.0);
    case StateClass::W: return FamilyParams::w(0.0, 0.0);
    case StateClass::Intermediate: return FamilyParams::intermediate(0.0, 0.0, 0.0);
    case StateClass::General: return {};
  }
  return {};
}

struct ResolvedState {
  PureState xi;
  std::optional<StateClass> family;  // set for named classes
  FamilyParams params;
  std::string descriptor;
};

ResolvedState resolve_state(const RunConfig& cfg) {
  const int sources = static_cast<int>(!cfg.state_class.empty()) + static_cast<int>(cfg.random) +
                      static_cast<int>(!cfg.state_file.empty());
  if (sources != 1) throw UsageError("give exactly one of --class, --random, --state");
  if (cfg.random) {
    return {random_pure_state(cfg.seed, 3), std::nullopt, {}, "random seed=" + std::to_string(cfg.seed)};
  }
  if (!cfg.state_file.empty()) {
    std::ifstream in(cfg.state_file);
    if (!in) throw UsageError("cannot open state file: " + cfg.state_file);
    PureState xi = [&] {
      try {
        return read_state(in);
      } catch (const std::runtime_error& e) {
        throw UsageError(cfg.state_file + ": " + e.what());
      }
    }();
    if (xi.n_qubits() != 3) throw UsageError("state file must hold 8 amplitudes");
    return {std::move(xi), std::nullopt, {}, "file " + cfg.state_file};
  }
  const StateClass c = require_class(cfg.state_class);
  const FamilyParams p = family_params(cfg, c, class_defaults(c));
  std::ostringstream d;
  d << to_string(c) << " alpha1=" << format_double(p.alpha1);
  return {family_state(c, p), c, p, d.str()};
}

BasisSource basis_source(const RunConfig& cfg) {
  if (cfg.basis.empty()) return BasisSource::Table;
  const auto b = parse_basis_source(cfg.basis);
  if (!b) throw UsageError("unknown basis source: " + cfg.basis);
  return *b;
}

SweepMode sweep_mode(const RunConfig& cfg, SweepMode fallback) {
  if (cfg.mode.empty()) return fallback;
  const auto m = parse_sweep_mode(cfg.mode);
  if (!m) throw UsageError("unknown mode: " + cfg.mode);
  return *m;
}

Interferometer device_for(const RunConfig& cfg, const ResolvedState& s) {
  if (s.family) return family_interferometer(*s.family, s.params, basis_source(cfg));
  if (!cfg.basis.empty() && basis_source(cfg) == BasisSource::Table) {
    throw UsageError("table bases exist only for named classes");
  }
  return Interferometer::with_basis(s.xi, preferred_basis(s.xi));
}

std::optional<BasisCoefficients> parse_coeffs(const std::string& text) {
  if (text.empty()) return std::nullopt;
  BasisCoefficients c{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 4) throw UsageError("--basis-coeffs takes four values");
    std::istringstream is(item);
    double re = 0.0;
    double im = 0.0;
    // Each entry is `re` or `re:im`.
    char sep = 0;
    if (!(is >> re) || ((is >> sep) && (sep != ':' || !(is >> im)))) {
      throw UsageError("bad coefficient: " + item);
    }
    c[k++] = Complex(re, im);
  }
  if (k != 4) throw UsageError("--basis-coeffs takes four values");
  double norm = 0.0;
  for (const auto& v : c) norm += std::norm(v);
  if (norm == 0.0 || !std::isfinite(norm)) throw UsageError("basis coefficients must be nonzero");
  for (auto& v : c) v /= std::sqrt(norm);
  return c;
}

void check_format(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") throw UsageError("unknown format: " + cfg.format);
}

// Writes through a buffer so a failing run never leaves a partial file.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw UsageError("cannot write " + cfg.output);
}

int cmd_prepare(const RunConfig& cfg, std::ostream& out) {
  const ResolvedState s = resolve_state(cfg);
  std::ostringstream text;
  if (cfg.format == "json") {
    nlohmann::ordered_json amps = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < s.xi.dim(); ++k) amps.push_back({s.xi[k].real(), s.xi[k].imag()});
    nlohmann::ordered_json doc;
    doc["descriptor"] = s.descriptor;
    doc["amplitudes"] = std::move(amps);
    text << doc.dump(1) << '\n';
  } else {
    write_state(text, s.xi);
  }
  emit(cfg, out, text.str());
  return kExitPass;
}

int cmd_interfere(const RunConfig& cfg, std::ostream& out) {
  const ResolvedState s = resolve_state(cfg);
  const PhaseGrid grid = PhaseGrid::make(sweep_mode(cfg, SweepMode::Locked), cfg.phase_points);
  const Interferogram ig = sweep_interferogram(device_for(cfg, s), grid);
  std::ostringstream text;
  if (cfg.format == "json") {
    write_interferogram_json(text, ig);
  } else {
    write_interferogram_csv(text, ig);
  }
  emit(cfg, out, text.str());
  return kExitPass;
}

std::vector<double> sweep_values(int points) {
  if (points < 2) throw UsageError("--points must be at least 2");
  std::vector<double> v;
  for (int k = 0; k < points; ++k) v.push_back(std::numbers::pi * k / (points - 1));
  return v;
}

std::vector<ComplementarityRecord> family_records(const RunConfig& cfg, StateClass family,
                                                  const std::optional<BasisCoefficients>& coeffs) {
  if (family == StateClass::General) throw UsageError("--family takes ghz, w or intermediate");
  SweepSpec spec = SweepSpec::standard(family);
  spec.parameter = cfg.sweep;
  spec.values = sweep_values(cfg.points);
  spec.fixed = family_params(cfg, family, spec.fixed);
  spec.options = {cfg.phase_points, sweep_mode(cfg, SweepMode::Independent)};
  spec.source = basis_source(cfg);
  if (spec.parameter != "alpha1" && spec.parameter != "alpha2_0" && spec.parameter != "alpha3_00") {
    throw UsageError("unknown sweep parameter: " + spec.parameter);
  }
  if (!coeffs) return family_sweep(spec);

  std::vector<ComplementarityRecord> out;
  for (double value : spec.values) {
    FamilyParams p = spec.fixed;
    if (spec.parameter == "alpha1") p.alpha1 = value;
    if (spec.parameter == "alpha2_0") p.alpha2[0] = value;
    if (spec.parameter == "alpha3_00") p.alpha3[0][0] = value;
    ComplementarityRecord r = verify_inequality(family_state(family, p), *coeffs, spec.options);
    r.descriptor = std::string(to_string(family)) + " " + spec.parameter;
    r.parameter = value;
    out.push_back(std::move(r));
  }
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto coeffs = parse_coeffs(cfg.basis_coeffs);
  const VerifyOptions options{cfg.phase_points, sweep_mode(cfg, SweepMode::Independent)};
  if (!(cfg.tolerance > 0.0)) throw UsageError("--tolerance must be positive");

  std::vector<ComplementarityRecord> records;
  if (!cfg.family.empty()) {
    if (!cfg.state_class.empty() || cfg.random || !cfg.state_file.empty()) {
      throw UsageError("--family excludes --class, --random and --state");
    }
    records = family_records(cfg, require_class(cfg.family), coeffs);
  } else if (cfg.random) {
    if (cfg.count < 1) throw UsageError("--count must be positive");
    for (int k = 0; k < cfg.count; ++k) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
      const PureState xi = random_pure_state(seed, 3);
      ComplementarityRecord r = coeffs ? verify_inequality(xi, *coeffs, options) : verify_equality(xi, options);
      r.descriptor = "random seed=" + std::to_string(seed);
      records.push_back(std::move(r));
    }
  } else {
    const ResolvedState s = resolve_state(cfg);
    ComplementarityRecord r =
        coeffs ? verify_inequality(s.xi, *coeffs, options) : verify_equality(s.xi, device_for(cfg, s), options);
    r.descriptor = s.descriptor;
    records.push_back(std::move(r));
  }

  const VerifySummary summary = summarize(records, cfg.tolerance);
  std::ostringstream text;
  if (cfg.format == "json") {
    write_records_json(text, records);
  } else {
    write_records_csv(text, records);
  }
  emit(cfg, out, text.str());

  std::ostringstream sj;
  write_summary_json(sj, summary);
  if (cfg.output.empty()) {
    err << sj.str();
  } else {
    RunConfig side = cfg;
    side.output = cfg.output + ".summary.json";
    emit(side, out, sj.str());
  }
  return summary.pass ? kExitPass : kExitVerificationFailure;
}

int cmd_figure9(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family.empty()) throw UsageError("figure9 needs --family");
  RunConfig sweep = cfg;
  sweep.sweep = "alpha1";
  const auto records = family_records(sweep, require_class(cfg.family), std::nullopt);
  std::ostringstream text;
  write_figure9_csv(text, records);
  emit(cfg, out, text.str());
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Four-way interferometer simulator for three-qubit complementarity", "qcomp"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file mirroring the flags; flags win");

  app.add_option("-o,--output", cfg.output, "Output file (default stdout)");
  app.add_option("--format", cfg.format, "csv or json")->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "Pass threshold on |V2^2 + S^2 - 1|")->capture_default_str();
  app.add_option("--phase-points", cfg.phase_points, "Phase samples per axis")->capture_default_str();
  app.add_option("--mode", cfg.mode, "locked or independent");
  app.add_option("--seed", cfg.seed, "Seed for --random (verify uses seed, seed+1, ...)")->capture_default_str();
  app.add_flag("--degrees", cfg.degrees, "Read angles in degrees");

  app.add_option("--class", cfg.state_class, "ghz, w, intermediate or general");
  app.add_flag("--random", cfg.random, "Haar-random state from --seed");
  app.add_option("--state", cfg.state_file, "State file (re im per line)");
  app.add_option("--alpha1", cfg.alpha1);
  app.add_option("--alpha2_0", cfg.alpha2_0);
  app.add_option("--alpha2_1", cfg.alpha2_1);
  app.add_option("--alpha3_00", cfg.alpha3_00);
  app.add_option("--alpha3_01", cfg.alpha3_01);
  app.add_option("--alpha3_10", cfg.alpha3_10);
  app.add_option("--alpha3_11", cfg.alpha3_11);
  app.add_option("--basis", cfg.basis, "table or eigensolve");
  app.add_option("--basis-coeffs", cfg.basis_coeffs, "Extended basis c0,c1,c2,c3 (re or re:im)");

  app.add_option("--family", cfg.family, "Family swept by verify and figure9");
  app.add_option("--sweep", cfg.sweep, "alpha1, alpha2_0 or alpha3_00")->capture_default_str();
  app.add_option("--points", cfg.points, "Sweep points over [0, pi]")->capture_default_str();
  app.add_option("--count", cfg.count, "Random states for verify --random")->capture_default_str();

  auto* prepare = app.add_subcommand("prepare", "Write a state file")->fallthrough();
  auto* interfere = app.add_subcommand("interfere", "Sweep phases and write the interferogram")->fallthrough();
  auto* verify = app.add_subcommand("verify", "Check the complementarity relation")->fallthrough();
  auto* figure9 = app.add_subcommand("figure9", "Emit (V, S) pairs of a family sweep")->fallthrough();

  std::vector<const char*> argv{"qcomp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    check_format(cfg);
    if (cfg.phase_points < kMinPhasePoints) {
      throw UsageError("--phase-points must be at least " + std::to_string(kMinPhasePoints));
    }
    if (prepare->parsed()) return cmd_prepare(cfg, out);
    if (interfere->parsed()) return cmd_interfere(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (figure9->parsed()) return cmd_figure9(cfg, out);
  } catch (const std::exception& e) {
    err << "qcomp: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qcomp
