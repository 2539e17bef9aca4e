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

#include "arealab/qecc.hpp"

#include <cmath>
#include <random>

#include "arealab/analysis.hpp"
#include "arealab/spectrum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arealab;

namespace {

// All ten two-qubit marginals have a flat SVD spectrum, which forces I/4.
double worst_pair_deviation(const SparseState& s) {
    double worst = 0.0;
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = a + 1; b < 5; ++b) {
            const std::vector<std::size_t> sites{a, b};
            for (double p : oracle::svd_spectrum(s, sites)) worst = std::max(worst, std::abs(p - 0.25));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("Pauli strings") {
    CHECK_THROWS_AS(PauliString("XQ"), std::invalid_argument);
    CHECK(PauliString("XX").commutes_with(PauliString("ZZ")));
    CHECK_FALSE(PauliString("XI").commutes_with(PauliString("ZI")));
    CHECK_THROWS_AS(PauliString("X").commutes_with(PauliString("XX")), std::invalid_argument);

    const Lattice q(1, 1, 2);
    const auto y1 = apply_pauli(SparseVector::basis(q, {0}), PauliString("Y"));
    CHECK(y1.amplitude({1}) == Complex(0.0, 1.0));
    const auto y0 = apply_pauli(SparseVector::basis(q, {1}), PauliString("Y"));
    CHECK(y0.amplitude({0}) == Complex(0.0, -1.0));
    CHECK_THROWS_AS(apply_pauli(SparseVector::basis(Lattice(1, 1, 3), {0}), PauliString("X")), std::invalid_argument);
}

TEST_CASE("five-qubit code structure") {
    const auto code = build_513();
    CHECK(code.generators.size() == 4);
    CHECK(code.codewords.size() == 2);
    const auto check = check_code(code);
    CHECK(check.ok());
    for (const auto& g : code.generators) {
        CHECK(g.commutes_with(code.logical_x[0]));
        CHECK(g.commutes_with(code.logical_z[0]));
    }
    CHECK_FALSE(code.logical_x[0].commutes_with(code.logical_z[0]));

    for (const auto& c : code.codewords) {
        REQUIRE(c.support_size() == 16);
        for (const auto& t : c.terms()) CHECK(std::abs(std::abs(t.amplitude) - 0.25) < 1e-15);
    }
    // Logical X maps one codeword onto the other up to phase.
    CHECK(fidelity(apply_pauli(code.codewords[0].vector(), code.logical_x[0]), code.codewords[1].vector()) >
          1.0 - 1e-14);
}

TEST_CASE("encoding logical states") {
    const auto code = build_513();
    CHECK(fidelity(encode_logical(code, {1.0, 0.0}), code.codewords[0]) > 1.0 - 1e-15);
    CHECK(fidelity(encode_logical(code, {0.0, 1.0}), code.codewords[1]) > 1.0 - 1e-15);
    const double h = 1.0 / std::sqrt(2.0);
    const auto plus = encode_logical(code, {h, h});
    CHECK(worst_pair_deviation(plus) < 1e-12);
    CHECK(worst_marginal_mixedness(plus, 2) < 1e-12);
    CHECK_THROWS_AS(encode_logical(code, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(encode_logical(code, {1.0}), std::invalid_argument);
}

TEST_CASE("property: code-space states are maximally mixed on every pair") {
    const auto code = build_513();
    std::mt19937_64 rng(513);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_code_state(code, rng);
        CHECK(worst_pair_deviation(s) < 1e-12);
        CHECK(worst_marginal_mixedness(s, 2) < 1e-12);
    }
    // Three-qubit marginals are not maximally mixed for a distance-3 code.
    CHECK(worst_marginal_mixedness(code.codewords[0], 3) > 1e-3);
}

TEST_CASE("qecc area-law state") {
    const Lattice small(2, 2, 3);
    const auto two = SparseState::basis(Lattice(1, 2, 2), {1, 1});
    const auto placed = qecc_area_state(two, small);
    CHECK_FALSE(placed.padded);
    REQUIRE(placed.state.support_size() == 1);
    CHECK(placed.state.terms()[0].config == config_from_string("2200"));

    const auto code = build_513();
    const Lattice lat(2, 5, 3);
    const auto area = qecc_area_state(code.codewords[0], lat);
    CHECK(area.state.support_size() == 16);
    CHECK(area.state.lattice().site_count() == 25);

    // Schmidt rank of a top-row interval is at most 2^{width}.
    for (std::size_t width = 1; width <= 4; ++width) {
        const auto s = schmidt_spectrum(area.state, Region{{0, 0}, {width, 1}});
        CHECK(renyi_entropy(s, 0.0) <= static_cast<double>(width) + 1e-12);
    }

    CHECK_THROWS_AS(qecc_area_state(code.codewords[0], Lattice(2, 4, 3)), std::invalid_argument);
    CHECK_THROWS_AS(qecc_area_state(code.codewords[0], Lattice(2, 5, 2)), std::invalid_argument);
    CHECK_THROWS_AS(qecc_area_state(code.codewords[0], Lattice(2, 6, 3)), std::invalid_argument);
    const auto padded = qecc_area_state(code.codewords[0], Lattice(2, 6, 3), true);
    CHECK(padded.padded);
    CHECK(padded.state.support_size() == 16);
}

TEST_CASE("connected correlators of the qecc area-law state vanish") {
    const auto code = build_513();
    std::mt19937_64 rng(3);
    const auto area = qecc_area_state(random_code_state(code, rng), Lattice(2, 5, 3));
    const auto sweep = correlator_sweep(area.state, hermitian_operator_basis(3));
    CHECK(sweep.pairs == 25 * 24 / 2);
    CHECK(sweep.max_abs_connected < 1e-12);
}
