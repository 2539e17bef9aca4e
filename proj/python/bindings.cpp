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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "arealab/analysis.hpp"
#include "arealab/cli.hpp"
#include "arealab/constructions.hpp"
#include "arealab/fingerprint.hpp"
#include "arealab/qecc.hpp"
#include "arealab/serialization.hpp"
#include "arealab/spectrum.hpp"

namespace py = pybind11;
using namespace arealab;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

LocalOperator to_operator(const std::vector<std::vector<Complex>>& rows) {
    LocalOperator op{rows.size(), {}};
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw std::invalid_argument("observable must be a square matrix");
        op.entries.insert(op.entries.end(), row.begin(), row.end());
    }
    return op;
}

SparseState state_from_terms(const Lattice& lattice, const std::vector<std::pair<std::string, Complex>>& terms) {
    std::vector<Term> out;
    for (const auto& [digits, amp] : terms) out.push_back({config_from_string(digits), amp});
    return SparseState(lattice, std::move(out));
}

std::vector<std::pair<std::string, Complex>> state_terms(const SparseState& s) {
    std::vector<std::pair<std::string, Complex>> out;
    for (const auto& t : s.terms()) out.emplace_back(config_to_string(t.config), t.amplitude);
    return out;
}

RankBound parse_bound(const std::string& name) {
    if (name == "hyperplane") return RankBound::hyperplane;
    if (name == "isotropic") return RankBound::isotropic;
    throw std::invalid_argument("bound must be 'hyperplane' or 'isotropic'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sparse strong area-law states, Schmidt spectra and fingerprint protocols";

    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

    py::class_<Lattice>(m, "Lattice")
        .def(py::init<std::size_t, std::size_t, std::size_t>(), py::arg("D"), py::arg("L"), py::arg("d") = 3)
        .def_property_readonly("D", &Lattice::dim)
        .def_property_readonly("L", &Lattice::side)
        .def_property_readonly("d", &Lattice::local_dim)
        .def_property_readonly("site_count", &Lattice::site_count)
        .def("coord", &Lattice::coord)
        .def("site", [](const Lattice& l, const Coord& c) { return l.site(c); })
        .def("__eq__", [](const Lattice& a, const Lattice& b) { return a == b; })
        .def("__repr__", [](const Lattice& l) {
            std::ostringstream os;
            os << "Lattice(D=" << l.dim() << ", L=" << l.side() << ", d=" << l.local_dim() << ")";
            return os.str();
        });

    py::class_<Region>(m, "Region")
        .def(py::init([](Coord offset, Coord lengths) { return Region{std::move(offset), std::move(lengths)}; }),
             py::arg("offset"), py::arg("lengths"))
        .def_readonly("offset", &Region::offset)
        .def_readonly("lengths", &Region::lengths)
        .def_property_readonly("volume", &Region::volume)
        .def_property_readonly("boundary", [](const Region& r) { return region_boundary(r); })
        .def("sites", &Region::sites)
        .def("__repr__", [](const Region& r) { return "Region('" + to_string(r) + "')"; });
    m.def("parse_region", &parse_region);
    m.def("enumerate_cubic_regions", &enumerate_cubic_regions, py::arg("lattice"), py::arg("max_volume"));

    py::class_<SparseState>(m, "SparseState")
        .def(py::init(&state_from_terms), py::arg("lattice"), py::arg("terms"))
        .def_property_readonly("lattice", &SparseState::lattice)
        .def_property_readonly("support_size", &SparseState::support_size)
        .def("terms", &state_terms)
        .def("to_json", [](const SparseState& s) { return state_to_json(s.vector()).dump(); })
        .def_static("from_json", [](const std::string& text) { return state_from_json(Json::parse(text)); })
        .def("__len__", &SparseState::support_size);
    m.def("inner_product", [](const SparseState& a, const SparseState& b) { return inner_product(a, b); });

    m.def(
        "schmidt_spectrum",
        [](const SparseState& s, const Region& r) { return schmidt_spectrum(s, r).probabilities(); },
        py::arg("state"), py::arg("region"));
    m.def(
        "renyi_entropy",
        [](const std::vector<double>& p, double alpha) { return renyi_entropy(SchmidtSpectrum(p), alpha); },
        py::arg("probabilities"), py::arg("alpha"));

    m.def(
        "ti_basis_size", [](std::size_t sub_dim, std::size_t side) { return ti_basis(sub_dim, side).size(); },
        py::arg("sub_dim"), py::arg("L"));
    m.def(
        "ti_basis_state",
        [](std::size_t sub_dim, std::size_t side, std::size_t index) {
            const OrbitBasis b = ti_basis(sub_dim, side);
            if (index >= b.size()) throw py::index_error("ti basis index out of range");
            return b.state(index);
        },
        py::arg("sub_dim"), py::arg("L"), py::arg("index"));
    m.def(
        "ti_random_state",
        [](std::size_t sub_dim, std::size_t side, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return ti_basis(sub_dim, side).random_state(rng);
        },
        py::arg("sub_dim"), py::arg("L"), py::arg("seed"));
    m.def("ghz_hyperplane_state", &ghz_hyperplane_state, py::arg("lattice"));
    m.def("area_law_state", &area_law_state, py::arg("phi"), py::arg("lattice"));
    m.def("isotropic_area_law_state", &isotropic_area_law_state, py::arg("phi"), py::arg("lattice"));

    m.def(
        "area_law_audit",
        [](const SparseState& s, std::size_t max_volume, const std::string& bound) {
            AuditOptions options;
            options.bound = parse_bound(bound);
            AreaLawAudit audit;
            {
                py::gil_scoped_release release;
                audit = area_law_audit(s, max_volume, options);
            }
            return to_python(to_json(audit));
        },
        py::arg("state"), py::arg("max_volume"), py::arg("bound") = "hyperplane");
    m.def(
        "connected_correlator",
        [](const SparseState& s, const std::vector<std::vector<Complex>>& a, std::size_t site_a,
           const std::vector<std::vector<Complex>>& b, std::size_t site_b) {
            return connected_correlator(s, to_operator(a), site_a, to_operator(b), site_b).connected_value;
        },
        py::arg("state"), py::arg("obs_a"), py::arg("site_a"), py::arg("obs_b"), py::arg("site_b"));
    m.def(
        "invariance_check",
        [](const SparseState& s, bool translations, bool rotations, bool reflections) {
            unsigned g = (translations ? kTranslations : 0u) | (rotations ? kRotations : 0u) |
                         (reflections ? kReflections : 0u);
            return invariance_check(s, g);
        },
        py::arg("state"), py::arg("translations") = true, py::arg("rotations") = false,
        py::arg("reflections") = false);
    m.def(
        "counting_report",
        [](double q, double epsilon, std::uint64_t budget) { return to_python(to_json(counting_report(q, epsilon, budget))); },
        py::arg("q"), py::arg("epsilon"), py::arg("budget_bits"));

    py::class_<FingerprintCode>(m, "FingerprintCode")
        .def(py::init<std::size_t, std::uint64_t, std::size_t, std::size_t>(), py::arg("n"), py::arg("seed"),
             py::arg("expansion") = 8, py::arg("sample_pairs") = 256)
        .def_property_readonly("n", &FingerprintCode::n)
        .def_property_readonly("m", &FingerprintCode::m)
        .def_property_readonly("measured_overlap_max", &FingerprintCode::measured_overlap_max)
        .def("encode", &FingerprintCode::encode)
        .def("describe", [](const FingerprintCode& c) { return to_python(to_json(c)); });
    m.def("build_fingerprint", &build_fingerprint, py::arg("x"), py::arg("code"));
    m.def("swap_test_accept", &swap_test_accept, py::arg("sigma"), py::arg("tau"));
    m.def(
        "equality_protocol",
        [](const BitString& x, const BitString& y, const FingerprintCode& code, std::size_t repetitions,
           const std::string& mode, std::uint64_t seed) {
            ProtocolOptions options;
            options.repetitions = repetitions;
            if (mode != "analytic" && mode != "sampling") throw std::invalid_argument("mode must be analytic or sampling");
            options.mode = mode == "sampling" ? ProtocolMode::sampling : ProtocolMode::analytic;
            options.seed = seed;
            return to_python(to_json(equality_protocol(x, y, code, options)));
        },
        py::arg("x"), py::arg("y"), py::arg("code"), py::arg("repetitions") = 1, py::arg("mode") = "analytic",
        py::arg("seed") = 0);
    m.def("minimal_repetitions", &minimal_repetitions, py::arg("omega_max"), py::arg("delta"));
    m.def(
        "cost_report", [](std::uint64_t n, std::size_t reps) { return to_python(to_json(cost_report(n, reps))); },
        py::arg("n"), py::arg("repetitions") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
