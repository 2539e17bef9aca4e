// Copyright 2026 The arealab Authors
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

#include "arealab/analysis.hpp"
#include "arealab/fingerprint.hpp"
#include "arealab/lattice.hpp"
#include "arealab/qecc.hpp"
#include "arealab/sparse_state.hpp"
#include "arealab/spectrum.hpp"
#include "json.hpp"

namespace arealab {

/// Insertion-ordered so reports serialize byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "arealab/1";

// State files: {"D", "L", "d", "terms": [["digits", re, im], ...]} with terms
// in canonical order.
Json state_to_json(const SparseVector& v);
/// Throws std::invalid_argument on a malformed document or a non-unit norm.
SparseState state_from_json(const Json& j);
SparseState read_state_file(const std::string& path);
void write_state_file(const std::string& path, const SparseVector& v);

Json region_to_json(const Region& r);
Region region_from_json(const Json& j);
/// "o_1,...,o_D:l_1,...,l_D".
Region parse_region(const std::string& text);

/// A JSON array of Pauli strings.
std::vector<PauliString> paulis_from_json(const Json& j);
Json paulis_to_json(const std::vector<PauliString>& paulis);

/// Renyi orders as text: "inf" for kInfiniteAlpha.
std::string alpha_label(double alpha);
double parse_alpha(const std::string& text);

Json to_json(const SchmidtSpectrum& s);
Json to_json(const AreaLawRecord& r);
Json to_json(const AreaLawAudit& a);
Json to_json(const CorrelatorSweep& s);
Json to_json(const DecayProfile& p);
Json to_json(const CountingReport& r);
Json to_json(const DimensionBound& b);
Json to_json(const CodeCheck& c);
Json to_json(const FingerprintCode& c);
Json to_json(const ProtocolOutcome& o);
Json to_json(const EpsilonScan& s);
Json to_json(const CostReport& r);

void write_audit_csv(std::ostream& os, const AreaLawAudit& audit);
void write_decay_csv(std::ostream& os, const DecayProfile& profile);
void write_entropy_csv(std::ostream& os, const std::vector<double>& alphas, const std::vector<double>& values);

}  // namespace arealab
