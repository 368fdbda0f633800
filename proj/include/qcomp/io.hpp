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

#include <iosfwd>
#include <string>
#include <vector>

#include "qcomp/harness.hpp"
#include "qcomp/interferometer.hpp"
#include "qcomp/linalg.hpp"

namespace qcomp {

/// %.17g; round-trips every finite double.
std::string format_double(double x);

/// One `re im` line per amplitude in basis order, after a `#` header line.
void write_state(std::ostream& os, const PureState& psi);

/// Blank lines and text after `#` are ignored. Amplitudes whose norm is off
/// by more than 1e-9 are rejected; smaller drift is renormalized. Throws
/// std::runtime_error naming the offending line.
PureState read_state(std::istream& is);

/// Column layout of the interferogram CSV (format v1):
/// phi1,phi2, p_i_j for i in 0..1, j in 0..3, pA_0,pA_1,
/// pbar_0_0,pbar_0_1,pbar_1_0,pbar_1_1.
std::vector<std::string> interferogram_columns();

void write_interferogram_csv(std::ostream& os, const Interferogram& ig);
void write_interferogram_json(std::ostream& os, const Interferogram& ig);

void write_records_csv(std::ostream& os, const std::vector<ComplementarityRecord>& records);
void write_records_json(std::ostream& os, const std::vector<ComplementarityRecord>& records);

void write_summary_json(std::ostream& os, const VerifySummary& s);

/// Two columns, V_ABC,S_A.
void write_figure9_csv(std::ostream& os, const std::vector<ComplementarityRecord>& records);

}  // namespace qcomp
