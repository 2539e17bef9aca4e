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

#include "arealab/analysis.hpp"

#include <cmath>
#include <random>
#include <set>

#include "arealab/constructions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arealab;

namespace {

SparseState uniform_random_superposition(const Lattice& lat, std::size_t count, std::mt19937_64& rng) {
    std::bernoulli_distribution coin;
    std::set<Config> configs;
    while (configs.size() < count) {
        Config c(lat.site_count());
        for (auto& x : c) x = coin(rng) ? 1 : 0;
        configs.insert(c);
    }
    std::vector<Term> terms;
    for (const auto& c : configs) terms.push_back({c, 1.0});
    return SparseState::normalized(SparseVector(lat, std::move(terms)));
}

}  // namespace

TEST_CASE("rank bound values") {
    CHECK(rank_bound_value(Region{{0, 0}, {2, 3}}, RankBound::hyperplane) == 4 * 3 + 1);
    CHECK(rank_bound_value(Region{{0, 0, 0}, {2, 2, 1}}, RankBound::hyperplane) == 16 + 1);
    CHECK(rank_bound_value(Region{{0, 0}, {2, 3}}, RankBound::isotropic) == (8 * 2 + 1) + (4 * 3 + 1));
}

TEST_CASE("product states pass the audit with c = 0") {
    const Lattice lat(2, 3, 3);
    const auto audit = area_law_audit(SparseState::vacuum(lat), lat.site_count());
    CHECK(audit.passed());
    CHECK(audit.minimal_c == 0.0);
    CHECK(audit.records.size() == 36);
    for (const auto& r : audit.records) CHECK(r.schmidt_rank == 1);
}

TEST_CASE("the audit reports a volume-law input honestly") {
    std::mt19937_64 rng(16);
    const Lattice lat(2, 4, 2);
    const auto psi = uniform_random_superposition(lat, 256, rng);
    const auto audit = area_law_audit(psi, 8);
    CHECK_FALSE(audit.passed());
    CHECK_FALSE(audit.violations().empty());
    CHECK(audit.minimal_c > 0.0);
}

TEST_CASE("property: the audit flips when a high-rank region is planted") {
    std::mt19937_64 rng(4);
    const Lattice lat(2, 4, 3);
    const auto phi = ti_basis(1, 4).random_state(rng);
    const auto good = area_law_state(phi, lat);
    CHECK(area_law_audit(good, 8).passed());

    // Entangle the left and right halves of the first two rows maximally.
    const Lattice q(2, 4, 3);
    std::vector<Term> terms;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 3; ++c) {
                Config cfg(16, 0);
                cfg[0] = cfg[2] = static_cast<std::uint8_t>(a);
                cfg[1] = cfg[3] = static_cast<std::uint8_t>(b);
                cfg[4] = cfg[6] = static_cast<std::uint8_t>(c);
                terms.push_back({cfg, 1.0});
            }
        }
    }
    const auto planted = SparseState::normalized(SparseVector(q, std::move(terms)));
    const auto audit = area_law_audit(planted, 8);
    CHECK_FALSE(audit.passed());
}

TEST_CASE("GHZ-family correlator closed forms") {
    for (std::size_t side = 3; side <= 6; ++side) {
        const auto psi = ghz_area_law_family(2)(side);
        const auto& lat = psi.lattice();
        const auto p1 = projector(3, 1);
        auto [a, b] = same_row_pattern(2)(side);
        const auto same = connected_correlator(psi, p1, lat.site(a), p1, lat.site(b));
        CHECK(std::abs(same.connected_value - oracle::ghz_same_row(static_cast<double>(side))) < 1e-12);
        CHECK(same.imaginary_residue < 1e-12);
        CHECK(same.within_norm_bound);

        auto [c, d] = different_row_pattern(2)(side);
        const auto diff = connected_correlator(psi, p1, lat.site(c), p1, lat.site(d));
        CHECK(std::abs(diff.connected_value - oracle::ghz_different_row(static_cast<double>(side))) < 1e-12);
    }
}

TEST_CASE("property: connected correlators are symmetric and bounded") {
    std::mt19937_64 rng(21);
    const Lattice lat(2, 3, 3);
    const auto ops = hermitian_operator_basis(3);
    CHECK(ops.size() == 9);
    std::uniform_int_distribution<std::size_t> pick_op(0, ops.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_site(0, lat.site_count() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto psi = oracle::random_sparse_state(lat, 20, rng);
        const std::size_t sa = pick_site(rng);
        std::size_t sb = pick_site(rng);
        if (sb == sa) sb = (sa + 1) % lat.site_count();
        const auto& oa = ops[pick_op(rng)];
        const auto& ob = ops[pick_op(rng)];
        const auto ab = connected_correlator(psi, oa, sa, ob, sb);
        const auto ba = connected_correlator(psi, ob, sb, oa, sa);
        CHECK(std::abs(ab.connected_value - ba.connected_value) < 1e-12);
        CHECK(ab.within_norm_bound);
        CHECK(std::abs(ab.connected_value) <= oa.operator_norm() * ob.operator_norm() + 1e-12);
    }
}

TEST_CASE("correlator errors and separations") {
    const Lattice lat(2, 4, 3);
    const auto psi = SparseState::vacuum(lat);
    const LocalOperator raising{3, {0, 0, 0, 1, 0, 0, 0, 0, 0}};
    CHECK_THROWS_AS(connected_correlator(psi, raising, 0, projector(3, 1), 1), std::invalid_argument);
    CHECK_THROWS_AS(connected_correlator(psi, projector(3, 1), 2, projector(3, 1), 2), std::invalid_argument);
    CHECK_THROWS_AS(connected_correlator(psi, projector(2, 1), 0, projector(3, 1), 1), std::invalid_argument);
    CHECK(connected_correlator(psi, projector(3, 0), 0, projector(3, 0), 5).connected_value == 0.0);
    CHECK(chebyshev_separation(lat, lat.site(Coord{0, 0}), lat.site(Coord{3, 0})) == 1);
    CHECK(chebyshev_separation(lat, lat.site(Coord{0, 0}), lat.site(Coord{2, 1})) == 2);
    CHECK(chebyshev_separation(lat, lat.site(Coord{1, 1}), lat.site(Coord{2, 2})) == 1);
}

TEST_CASE("decay profiles") {
    const auto p1 = projector(3, 1);
    const std::vector<std::size_t> sides{3, 4, 5, 6, 7, 8};
    const auto same = decay_profile(ghz_area_law_family(2), p1, p1, same_row_pattern(2), sides);
    REQUIRE(same.fitted_exponent.has_value());
    CHECK(std::abs(*same.fitted_exponent + 1.0) <= 0.15);
    for (const auto& pt : same.points) {
        CHECK(std::abs(pt.value - oracle::ghz_same_row(static_cast<double>(pt.side))) < 1e-10);
    }

    const auto diff = decay_profile(ghz_area_law_family(2), p1, p1, different_row_pattern(2), sides);
    REQUIRE(diff.fitted_exponent.has_value());
    CHECK(std::abs(*diff.fitted_exponent + 2.0) <= 0.15);

    const auto flat = decay_profile(product_family(2), p1, p1, same_row_pattern(2), sides);
    CHECK_FALSE(flat.fitted_exponent.has_value());
    for (const auto& pt : flat.points) CHECK(pt.value == 0.0);

    CHECK_THROWS_AS(decay_profile(product_family(2), p1, p1, same_row_pattern(2), {}), std::invalid_argument);
    CHECK_THROWS_AS(decay_profile(product_family(2), p1, p1, same_row_pattern(2), {4, 3}), std::invalid_argument);
}

TEST_CASE("least-squares slope") {
    CHECK(least_squares_slope({0.0, 1.0, 2.0}, {1.0, 3.0, 5.0}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(least_squares_slope({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(least_squares_slope({1.0, 1.0}, {0.0, 2.0}), std::invalid_argument);
}

TEST_CASE("cross terms vanish") {
    const Lattice lat3(2, 3, 3);
    CHECK(cross_term_check(ghz_hyperplane_state(lat3), lat3, 0, 1, Region{{0, 0}, {1, 1}}) < 1e-12);

    const Lattice lat2(2, 2, 3);
    const auto ones = SparseState::basis(hyperplane_lattice(lat2), config_from_string("11"));
    CHECK(cross_term_check(ones, lat2, 0, 1, Region{{0, 0}, {1, 1}}) < 1e-12);

    CHECK_THROWS_AS(cross_term_check(ones, lat2, 1, 1, Region{{0, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(cross_term_check(ones, lat2, 0, 2, Region{{0, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(cross_term_check(ones, lat2, 0, 1, Region{{0, 0}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("property: cross terms are symmetric in the rotation labels") {
    std::mt19937_64 rng(31);
    const Lattice lat(3, 2, 3);
    const auto regions = enumerate_cubic_regions(lat, 4);
    for (int trial = 0; trial < 3; ++trial) {
        const auto phi = mirror_ti_basis(2, 2).random_state(rng);
        for (std::size_t r = trial; r < regions.size(); r += 7) {
            for (std::size_t j = 0; j < 3; ++j) {
                for (std::size_t k = j + 1; k < 3; ++k) {
                    const double jk = cross_term_check(phi, lat, j, k, regions[r]);
                    const double kj = cross_term_check(phi, lat, k, j, regions[r]);
                    CHECK(jk < 1e-12);
                    CHECK(std::abs(jk - kj) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("counting report arithmetic") {
    const auto tiny = counting_report(2.0, 0.5, 10);
    CHECK(tiny.net_exponent_bits == 2.0);
    CHECK_FALSE(tiny.net_exceeds_budget);

    const auto b = ti_dimension_lower_bound(10, 2);
    REQUIRE(b.exact.has_value());
    CHECK(*b.exact == 103);
    CHECK_FALSE(counting_report(103.0, 0.1, 1000000).net_exceeds_budget);
    const auto big = counting_report(std::exp2(20.0), 0.1, 1000000);
    CHECK(big.net_exceeds_budget);
    CHECK(std::abs(big.net_exponent_bits - 3483294.3) < 1.0);

    CHECK_THROWS_AS(counting_report(1.0, 0.1, 10), std::invalid_argument);
    CHECK_THROWS_AS(counting_report(4.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(counting_report(4.0, 0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ti_dimension_lower_bound(3, 1), std::invalid_argument);
    CHECK(ti_dimension_lower_bound(100, 2).exact == std::nullopt);
}

TEST_CASE("property: the counting verdict is monotone") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> logq(1.0, 30.0);
    std::uniform_real_distribution<double> eps(0.001, 0.999);
    for (int trial = 0; trial < 500; ++trial) {
        const double q = std::exp2(logq(rng));
        const double e = eps(rng);
        const auto base = counting_report(q, e, 1000000);
        if (!base.net_exceeds_budget) continue;
        CHECK(counting_report(q * 1.5, e, 1000000).net_exceeds_budget);
        CHECK(counting_report(q, e / 2.0, 1000000).net_exceeds_budget);
    }
}

TEST_CASE("invariance checks") {
    std::mt19937_64 rng(12);
    const Lattice lat(2, 4, 3);
    const auto phi = ti_basis(1, 4).random_state(rng);
    CHECK(invariance_check(area_law_state(phi, lat), kTranslations) <= 1e-12);
    CHECK(invariance_check(isotropic_area_law_state(ghz_hyperplane_state(lat), lat),
                           kTranslations | kRotations | kReflections) <= 1e-12);
    const SparseState slab(embed_hyperplane(phi, 1, lat));
    CHECK(invariance_check(slab, kTranslations) == doctest::Approx(1.0));
    CHECK(symmetry_generators(lat, kTranslations).size() == 2);
}
