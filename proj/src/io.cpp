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

#include "qcomp/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qcomp {

namespace {

constexpr double kFileNormTolerance = 1e-9;

std::string join_row(const std::vector<double>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += format_double(values[k]);
  }
  return out;
}

void write_row(std::ostream& os, const std::vector<double>& values) { os << join_row(values) << '\n'; }

std::vector<double> sample_row(const Interferogram& ig, std::size_t k) {
  const auto [phi1, phi2] = ig.grid().point(k);
  const GridSample& s = ig.at(k);
  std::vector<double> row{phi1, phi2};
  row.insert(row.end(), s.joint.begin(), s.joint.end());
  row.insert(row.end(), s.single_a.begin(), s.single_a.end());
  row.insert(row.end(), s.corrected.begin(), s.corrected.end());
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json record_json(const ComplementarityRecord& r) {
  nlohmann::ordered_json j;
  j["descriptor"] = r.descriptor;
  j["parameter"] = r.parameter;
  j["C"] = r.concurrence;
  j["P"] = r.predictability;
  j["V_single"] = r.v_single;
  j["S"] = r.character;
  j["V2"] = r.v2;
  j["V_single_interferometric"] = r.v_single_interferometric;
  j["residual"] = r.residual_equality;
  j["slack"] = r.slack_inequality ? nlohmann::ordered_json(*r.slack_inequality) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_state(std::ostream& os, const PureState& psi) {
  os << "# " << psi.n_qubits() << "-qubit state, re im per basis amplitude\n";
  for (std::size_t k = 0; k < psi.dim(); ++k) {
    os << format_double(psi[k].real()) << ' ' << format_double(psi[k].imag()) << '\n';
  }
}

PureState read_state(std::istream& is) {
  std::vector<Complex> amps;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double re = 0.0;
    double im = 0.0;
    if (!(ls >> re)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected `re im`");
    }
    std::string rest;
    if (!(ls >> im) || (ls >> rest) || !std::isfinite(re) || !std::isfinite(im)) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected `re im`");
    }
    amps.emplace_back(re, im);
  }
  if (amps.empty() || !is_power_of_two(amps.size()) || amps.size() < 2) {
    throw std::runtime_error("amplitude count must be a power of two >= 2, got " + std::to_string(amps.size()));
  }
  CVector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t k = 0; k < amps.size(); ++k) v[static_cast<Eigen::Index>(k)] = amps[k];
  if (std::abs(v.norm() - 1.0) > kFileNormTolerance) throw std::runtime_error("state is not normalized");
  // Exact files round-trip bit for bit; only drifted ones are rescaled.
  if (std::abs(v.squaredNorm() - 1.0) <= kNormTolerance) return PureState(v);
  return PureState::normalized(v);
}

std::vector<std::string> interferogram_columns() {
  std::vector<std::string> cols{"phi1", "phi2"};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 4; ++j) cols.push_back("p_" + std::to_string(i) + "_" + std::to_string(j));
  }
  cols.push_back("pA_0");
  cols.push_back("pA_1");
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) cols.push_back("pbar_" + std::to_string(i) + "_" + std::to_string(j));
  }
  return cols;
}

void write_interferogram_csv(std::ostream& os, const Interferogram& ig) {
  const auto cols = interferogram_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
  os << '\n';
  for (std::size_t k = 0; k < ig.grid().size(); ++k) write_row(os, sample_row(ig, k));
}

void write_interferogram_json(std::ostream& os, const Interferogram& ig) {
  const auto cols = interferogram_columns();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < ig.grid().size(); ++k) {
    const auto row = sample_row(ig, k);
    nlohmann::ordered_json j;
    for (std::size_t c = 0; c < cols.size(); ++c) j[cols[c]] = row[c];
    rows.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["format"] = "qcomp-interferogram-v1";
  doc["mode"] = std::string(to_string(ig.grid().mode()));
  doc["rows"] = std::move(rows);
  os << doc.dump(1) << '\n';
}

void write_records_csv(std::ostream& os, const std::vector<ComplementarityRecord>& records) {
  os << "descriptor,parameter,C,P,V_single,S,V2,V_single_interferometric,residual,slack\n";
  for (const auto& r : records) {
    os << csv_field(r.descriptor) << ','
       << join_row({r.parameter, r.concurrence, r.predictability, r.v_single, r.character, r.v2,
                    r.v_single_interferometric, r.residual_equality})
       << ',' << (r.slack_inequality ? format_double(*r.slack_inequality) : std::string()) << '\n';
  }
}

void write_records_json(std::ostream& os, const std::vector<ComplementarityRecord>& records) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : records) doc.push_back(record_json(r));
  os << doc.dump(1) << '\n';
}

void write_summary_json(std::ostream& os, const VerifySummary& s) {
  nlohmann::ordered_json j;
  j["max_residual"] = s.max_residual;
  j["mean_residual"] = s.mean_residual;
  j["n_states"] = s.n_states;
  if (s.min_slack) j["min_slack"] = *s.min_slack;
  j["pass"] = s.pass;
  os << j.dump() << '\n';
}

void write_figure9_csv(std::ostream& os, const std::vector<ComplementarityRecord>& records) {
  os << "V_ABC,S_A\n";
  for (const auto& r : records) write_row(os, {r.v2, r.character});
}

}  // namespace qcomp
