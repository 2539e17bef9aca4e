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

#include "arealab/serialization.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace arealab {

namespace {

std::size_t get_size(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        throw std::invalid_argument(std::string("expected non-negative integer field '") + key + "'");
    }
    return j[key].get<std::size_t>();
}

Coord parse_coord_list(const std::string& text) {
    Coord out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer '" + item + "' in region");
        }
        if (used != item.size() || item.empty() || item[0] == '-') {
            throw std::invalid_argument("bad integer '" + item + "' in region");
        }
        out.push_back(v);
    }
    return out;
}

Json coord_json(const Coord& c) { return Json(std::vector<std::size_t>(c.begin(), c.end())); }

// Fixed 17 significant digits keeps CSV round-trippable and deterministic.
std::string csv_number(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

Json state_to_json(const SparseVector& v) {
    const auto& lat = v.lattice();
    Json terms = Json::array();
    for (const auto& t : v.terms()) {
        terms.push_back(Json::array({config_to_string(t.config), t.amplitude.real(), t.amplitude.imag()}));
    }
    return Json{{"D", lat.dim()}, {"L", lat.side()}, {"d", lat.local_dim()}, {"terms", std::move(terms)}};
}

SparseState state_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("state document must be an object");
    const Lattice lat(get_size(j, "D"), get_size(j, "L"), get_size(j, "d"));
    if (!j.contains("terms") || !j["terms"].is_array()) throw std::invalid_argument("state needs a 'terms' array");
    std::vector<Term> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_number() || !t[2].is_number()) {
            throw std::invalid_argument("each term must be [\"digits\", re, im]");
        }
        terms.push_back({config_from_string(t[0].get<std::string>()), Complex(t[1].get<double>(), t[2].get<double>())});
    }
    return SparseState(lat, std::move(terms));
}

SparseState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open state file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("state file '" + path + "' is not valid JSON: " + e.what());
    }
    return state_from_json(j);
}

void write_state_file(const std::string& path, const SparseVector& v) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << state_to_json(v).dump(2) << '\n';
}

Json region_to_json(const Region& r) { return Json{{"offset", coord_json(r.offset)}, {"lengths", coord_json(r.lengths)}}; }

Region region_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("offset") || !j.contains("lengths")) {
        throw std::invalid_argument("region needs 'offset' and 'lengths'");
    }
    Region r{j["offset"].get<Coord>(), j["lengths"].get<Coord>()};
    if (r.offset.size() != r.lengths.size()) throw std::invalid_argument("region offset and lengths differ in size");
    return r;
}

Region parse_region(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("region must look like 'o,o:l,l'");
    Region r{parse_coord_list(text.substr(0, colon)), parse_coord_list(text.substr(colon + 1))};
    if (r.offset.empty() || r.offset.size() != r.lengths.size()) {
        throw std::invalid_argument("region offset and lengths differ in size");
    }
    return r;
}

std::vector<PauliString> paulis_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("code document must be an array of Pauli strings");
    std::vector<PauliString> out;
    for (const auto& p : j) {
        if (!p.is_string()) throw std::invalid_argument("code entries must be strings");
        out.emplace_back(p.get<std::string>());
        if (out.back().size() != out.front().size()) throw std::invalid_argument("Pauli strings differ in length");
    }
    return out;
}

Json paulis_to_json(const std::vector<PauliString>& paulis) {
    Json j = Json::array();
    for (const auto& p : paulis) j.push_back(p.letters());
    return j;
}

std::string alpha_label(double alpha) {
    if (std::isinf(alpha)) return "inf";
    std::ostringstream os;
    os << alpha;
    return os.str();
}

double parse_alpha(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "infinity") return kInfiniteAlpha;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad Renyi order '" + text + "'");
    }
    if (used != text.size() || !(v >= 0.0) || std::isinf(v)) throw std::invalid_argument("bad Renyi order '" + text + "'");
    return v;
}

Json to_json(const SchmidtSpectrum& s) { return Json{{"rank", s.rank()}, {"probabilities", s.probabilities()}}; }

Json to_json(const AreaLawRecord& r) {
    return Json{{"region", to_string(r.region)},
                {"schmidt_rank", r.schmidt_rank},
                {"s0", r.s0},
                {"rank_bound_bits", r.rank_bound},
                {"boundary", r.boundary},
                {"within_rank_bound", r.within_rank_bound},
                {"within_boundary", r.within_boundary},
                {"skipped", r.skipped}};
}

Json to_json(const AreaLawAudit& a) {
    Json records = Json::array();
    for (const auto& r : a.records) records.push_back(to_json(r));
    Json violations = Json::array();
    for (const auto& r : a.violations()) violations.push_back(to_string(r));
    return Json{{"bound", a.bound == RankBound::hyperplane ? "hyperplane" : "isotropic"},
                {"regions", a.records.size()},
                {"passed", a.passed()},
                {"minimal_c", a.minimal_c},
                {"violations", std::move(violations)},
                {"notices", a.notices},
                {"records", std::move(records)}};
}

Json to_json(const CorrelatorSweep& s) {
    return Json{{"pairs", s.pairs},
                {"evaluations", s.evaluations},
                {"max_abs_connected", s.max_abs_connected},
                {"max_imaginary_residue", s.max_imaginary_residue},
                {"worst_site_a", s.worst_site_a},
                {"worst_site_b", s.worst_site_b}};
}

Json to_json(const DecayProfile& p) {
    Json points = Json::array();
    for (const auto& pt : p.points) {
        points.push_back(Json{{"L", pt.side}, {"value", pt.value}, {"separation", pt.separation}});
    }
    Json out{{"points", std::move(points)}};
    out["fitted_exponent"] = p.fitted_exponent ? Json(*p.fitted_exponent) : Json(nullptr);
    out["max_scaled"] = p.max_scaled;
    return out;
}

Json to_json(const CountingReport& r) {
    return Json{{"q", r.q},
                {"epsilon", r.epsilon},
                {"budget_bits", r.budget_bits},
                {"net_exponent_bits", r.net_exponent_bits},
                {"describable_exponent_bits", r.describable_exponent_bits},
                {"net_exceeds_budget", r.net_exceeds_budget},
                {"constant_convention", r.constant_convention}};
}

Json to_json(const DimensionBound& b) {
    Json out{{"sites", b.sites}};
    out["exact"] = b.exact ? Json(*b.exact) : Json(nullptr);
    out["q"] = b.q;
    out["log2_q"] = b.log2_q;
    return out;
}

Json to_json(const CodeCheck& c) {
    return Json{{"generators_commute", c.generators_commute},
                {"worst_stabilizer_residual", c.worst_stabilizer_residual},
                {"worst_codeword_overlap", c.worst_codeword_overlap},
                {"ok", c.ok()}};
}

Json to_json(const FingerprintCode& c) {
    return Json{{"n", c.n()},
                {"m", c.m()},
                {"seed", c.seed()},
                {"effective_seed", c.effective_seed()},
                {"attempts", c.attempts()},
                {"min_relative_distance", c.min_relative_distance()},
                {"max_relative_distance", c.max_relative_distance()},
                {"measured_overlap_max", c.measured_overlap_max()},
                {"qubits_per_fingerprint", fingerprint_qubits(c.m())}};
}

Json to_json(const ProtocolOutcome& o) {
    Json out{{"decision", o.equal ? "equal" : "unequal"},
             {"mode", o.mode == ProtocolMode::analytic ? "analytic" : "sampling"},
             {"accept_probability", o.accept_probability},
             {"joint_accept_probability", o.joint_accept_probability},
             {"threshold", o.threshold},
             {"repetitions", o.repetitions},
             {"qubits_used", o.qubits_used},
             {"error_bound", o.error_bound}};
    if (o.mode == ProtocolMode::sampling) out["accepted_tests"] = o.accepted_tests;
    out["epsilon"] = o.epsilon;
    return out;
}

Json to_json(const EpsilonScan& s) {
    Json out{{"grid", s.grid}, {"pairs", s.pairs}, {"tolerated", s.tolerated}};
    out["first_failure"] = s.first_failure ? Json(*s.first_failure) : Json(nullptr);
    return out;
}

Json to_json(const CostReport& r) {
    return Json{{"n", r.n},
                {"m", r.m},
                {"repetitions", r.repetitions},
                {"qubits_per_fingerprint", r.qubits_per_fingerprint},
                {"quantum_qubits", r.quantum_qubits},
                {"classical_reference_bits", r.classical_reference_bits},
                {"description_bits", r.description_bits},
                {"quantum_to_classical_ratio", r.quantum_to_classical_ratio},
                {"description_beats_classical_bound", r.description_beats_classical_bound},
                {"constant_convention", r.constant_convention}};
}

void write_audit_csv(std::ostream& os, const AreaLawAudit& audit) {
    os << "region,schmidt_rank,s0,rank_bound_bits,boundary,within_rank_bound,within_boundary,skipped\n";
    for (const auto& r : audit.records) {
        os << '"' << to_string(r.region) << "\"," << r.schmidt_rank << ',' << csv_number(r.s0) << ','
           << csv_number(r.rank_bound) << ',' << r.boundary << ',' << r.within_rank_bound << ',' << r.within_boundary
           << ',' << r.skipped << '\n';
    }
}

void write_decay_csv(std::ostream& os, const DecayProfile& profile) {
    os << "L,separation,value\n";
    for (const auto& p : profile.points) os << p.side << ',' << p.separation << ',' << csv_number(p.value) << '\n';
}

void write_entropy_csv(std::ostream& os, const std::vector<double>& alphas, const std::vector<double>& values) {
    if (alphas.size() != values.size()) throw std::invalid_argument("alpha and value lists differ in size");
    os << "alpha,entropy_bits\n";
    for (std::size_t i = 0; i < alphas.size(); ++i) os << alpha_label(alphas[i]) << ',' << csv_number(values[i]) << '\n';
}

}  // namespace arealab
