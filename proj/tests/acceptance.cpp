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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "arealab/analysis.hpp"
#include "arealab/constructions.hpp"
#include "arealab/fingerprint.hpp"
#include "arealab/qecc.hpp"
#include "arealab/spectrum.hpp"
#include "oracles.hpp"

using namespace arealab;

namespace {

constexpr double kAuditSeconds = 60.0;
constexpr double kOracleTol = 1e-10;
constexpr double kIsometryTol = 1e-12;
constexpr double kInvarianceTol = 1e-12;
constexpr double kMarginalTol = 1e-12;
constexpr double kCorrelatorTol = 1e-12;
constexpr double kDecayValueTol = 1e-10;
constexpr double kDecayExponentTol = 0.15;
constexpr double kFalseEqualLimit = 2e-3;
constexpr double kSigmas = 3.0;
constexpr std::uint64_t kShots = 100000;

struct Verdict {
    bool pass = true;
    std::string detail;
};

double gap(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0.0);
    b.resize(n, 0.0);
    double g = 0.0;
    for (std::size_t i = 0; i < n; ++i) g = std::max(g, std::abs(a[i] - b[i]));
    return g;
}

Verdict criterion_audit() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t regions = 0;
    std::size_t violations = 0;
    std::size_t skipped = 0;
    for (std::size_t side = 2; side <= 6; ++side) {
        const Lattice lat(2, side, 3);
        const auto basis = ti_basis(1, side);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            std::mt19937_64 rng(seed);
            const auto psi = area_law_state(basis.random_state(rng), lat);
            const auto audit = area_law_audit(psi, lat.site_count());
            regions += audit.records.size();
            violations += audit.violations().size();
            for (const auto& r : audit.records) skipped += r.skipped;
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << regions << " regions, " << violations << " violations, " << skipped << " skipped, " << seconds << " s";
    return {violations == 0 && skipped == 0 && seconds < kAuditSeconds, os.str()};
}

Verdict criterion_oracle() {
    std::vector<SparseState> states;
    for (std::size_t side : {2u, 3u}) {
        const Lattice lat(2, side, 3);
        for (const auto& phi : ti_basis(1, side).states()) states.push_back(area_law_state(phi, lat));
        states.push_back(area_law_state(ghz_hyperplane_state(lat), lat));
        states.push_back(area_law_state(uniform_hyperplane_state(lat), lat));
        states.push_back(isotropic_area_law_state(ghz_hyperplane_state(lat), lat));
        states.push_back(isotropic_area_law_state(uniform_hyperplane_state(lat), lat));
        std::mt19937_64 rng(side);
        states.push_back(isotropic_area_law_state(mirror_ti_basis(1, side).random_state(rng), lat));
    }
    const std::size_t constructed = states.size();
    std::mt19937_64 rng(2);
    const Lattice small(2, 3, 3);
    for (int i = 0; i < 50; ++i) states.push_back(oracle::random_sparse_state(small, 1 + i * 3, rng));

    double worst = 0.0;
    std::size_t cuts = 0;
    for (const auto& psi : states) {
        const auto& lat = psi.lattice();
        for (const auto& region : enumerate_cubic_regions(lat, lat.site_count())) {
            if (region.covers_lattice(lat)) continue;
            const auto sites = region.sites(lat);
            worst = std::max(worst, gap(schmidt_spectrum(psi, sites).probabilities(), oracle::svd_spectrum(psi, sites)));
            ++cuts;
        }
    }
    std::ostringstream os;
    os << constructed << " constructed + 50 random states, " << cuts << " cuts, max deviation " << worst;
    return {worst <= kOracleTol, os.str()};
}

Verdict criterion_isometry() {
    std::mt19937_64 rng(3);
    double worst = 0.0;
    for (int pair = 0; pair < 50; ++pair) {
        const std::size_t side = 2 + pair % 5;
        const Lattice lat(2, side, 3);
        const auto basis = ti_basis(1, side);
        const auto a = basis.random_state(rng);
        const auto b = basis.random_state(rng);
        const Complex lhs = inner_product(area_law_state(a, lat), area_law_state(b, lat));
        worst = std::max(worst, std::abs(lhs - inner_product(a, b)));
    }
    std::ostringstream os;
    os << "50 pairs, max |<f(a),f(b)> - <a,b>| = " << worst;
    return {worst <= kIsometryTol, os.str()};
}

Verdict criterion_invariance() {
    double translation = 0.0;
    double rotation = 0.0;
    double cross = 0.0;
    std::size_t cross_cases = 0;
    std::mt19937_64 rng(4);
    for (std::size_t side = 2; side <= 6; ++side) {
        const Lattice lat(2, side, 3);
        translation = std::max(translation, invariance_check(area_law_state(ti_basis(1, side).random_state(rng), lat),
                                                             kTranslations));
        const auto iso = isotropic_area_law_state(mirror_ti_basis(1, side).random_state(rng), lat);
        rotation = std::max(rotation, invariance_check(iso, kTranslations | kRotations | kReflections));
    }
    const Lattice cube(3, 2, 3);
    const auto iso3 = isotropic_area_law_state(mirror_ti_basis(2, 2).random_state(rng), cube);
    rotation = std::max(rotation, invariance_check(iso3, kTranslations | kRotations | kReflections));

    auto sweep_cross = [&](const Lattice& lat, const SparseState& phi) {
        for (const auto& region : enumerate_cubic_regions(lat, lat.site_count())) {
            if (region.covers_lattice(lat)) continue;
            for (std::size_t j = 0; j < lat.dim(); ++j) {
                for (std::size_t k = 0; k < lat.dim(); ++k) {
                    if (j == k) continue;
                    cross = std::max(cross, cross_term_check(phi, lat, j, k, region));
                    ++cross_cases;
                }
            }
        }
    };
    for (std::size_t side : {2u, 3u}) {
        const Lattice lat(2, side, 3);
        sweep_cross(lat, ghz_hyperplane_state(lat));
        sweep_cross(lat, mirror_ti_basis(1, side).random_state(rng));
    }
    sweep_cross(cube, mirror_ti_basis(2, 2).random_state(rng));

    std::ostringstream os;
    os << "translation " << translation << ", rotation+reflection " << rotation << ", cross terms max " << cross
       << " over " << cross_cases << " cases";
    return {translation <= kInvarianceTol && rotation <= kInvarianceTol && cross <= kInvarianceTol, os.str()};
}

Verdict criterion_dimension() {
    bool ok = true;
    std::ostringstream os;
    for (std::size_t n = 1; n <= 14; ++n) {
        const auto basis = ti_basis(1, n);
        const bool match = basis.size() == oracle::brute_force_necklaces(n);
        const bool bound = static_cast<std::uint64_t>(basis.size()) * n >= (std::uint64_t{1} << n);
        if (!match || !bound) {
            ok = false;
            os << "n=" << n << " size " << basis.size() << " mismatch; ";
        }
    }
    std::size_t mirror_cases = 0;
    for (auto [dim, side] : {std::pair<std::size_t, std::size_t>{1, 6}, {1, 10}, {1, 14}, {2, 3}, {2, 4}}) {
        const auto m = mirror_ti_basis(dim, side);
        const std::uint64_t total = std::uint64_t{1} << m.site_count();
        if (!m.satisfies_dimension_bound() || m.size() * m.group_order() < total) {
            ok = false;
            os << "mirror basis (" << dim << "," << side << ") below its bound; ";
        }
        ++mirror_cases;
    }
    os << "n = 1..14 orbit counts exact, " << mirror_cases << " mirror bases checked";
    return {ok, os.str()};
}

Verdict criterion_qecc() {
    const auto code = build_513();
    std::mt19937_64 rng(6);
    double marginal = 0.0;
    double correlator = 0.0;
    std::size_t pairs = 0;
    const Lattice lat(2, 5, 3);
    const auto ops = hermitian_operator_basis(3);
    for (int i = 0; i < 25; ++i) {
        const auto s = random_code_state(code, rng);
        for (std::size_t a = 0; a < 5; ++a) {
            for (std::size_t b = a + 1; b < 5; ++b) {
                // Trace distance to I/4 from the marginal's spectrum.
                const std::vector<std::size_t> sites{a, b};
                double td = 0.0;
                for (double p : oracle::svd_spectrum(s, sites)) td += std::abs(p - 0.25);
                marginal = std::max(marginal, 0.5 * td);
            }
        }
        const auto sweep = correlator_sweep(qecc_area_state(s, lat).state, ops);
        correlator = std::max(correlator, sweep.max_abs_connected);
        pairs += sweep.pairs;
    }
    std::ostringstream os;
    os << "25 code states, max marginal trace distance " << marginal << ", max |connected| " << correlator << " over "
       << pairs << " site pairs x " << ops.size() * ops.size() << " observable pairs";
    return {marginal <= kMarginalTol && correlator <= kCorrelatorTol, os.str()};
}

Verdict criterion_decay() {
    const auto p1 = projector(3, 1);
    const auto profile = decay_profile(ghz_area_law_family(2), p1, p1, same_row_pattern(2), {3, 4, 5, 6, 7, 8});
    double worst = 0.0;
    for (const auto& pt : profile.points) {
        worst = std::max(worst, std::abs(pt.value - oracle::ghz_same_row(static_cast<double>(pt.side))));
    }
    const bool fitted = profile.fitted_exponent.has_value();
    const double exponent = fitted ? *profile.fitted_exponent : NAN;
    std::ostringstream os;
    os << "max deviation from closed form " << worst << ", fitted exponent " << exponent;
    return {fitted && worst <= kDecayValueTol && std::abs(exponent + 1.0) <= kDecayExponentTol, os.str()};
}

bool same_outcome(const ProtocolOutcome& a, const ProtocolOutcome& b) {
    return a.equal == b.equal && a.accept_probability == b.accept_probability &&
           a.joint_accept_probability == b.joint_accept_probability && a.threshold == b.threshold &&
           a.qubits_used == b.qubits_used && a.repetitions == b.repetitions && a.accepted_tests == b.accepted_tests;
}

Verdict criterion_fingerprint() {
    const std::size_t n = 64;
    const FingerprintCode code(n, 1);
    const std::size_t reps = minimal_repetitions(code.measured_overlap_max(), kDefaultDelta);

    std::size_t equal_rejected = 0;
    std::size_t eps_mismatch = 0;
    std::size_t false_equal = 0;
    std::size_t sampled_runs = 0;
    const std::size_t pairs = 200;
    const std::size_t runs_per_pair = 50;
    for (std::uint64_t t = 0; t < pairs; ++t) {
        std::mt19937_64 rng(derive_seed(8, t));
        const auto x = random_bits(n, rng);
        auto y = random_bits(n, rng);
        if (x == y) y[0] ^= 1;

        const ProtocolOptions analytic{.repetitions = reps, .seed = t};
        if (!equality_protocol(x, x, code, analytic).equal) ++equal_rejected;
        if (!same_outcome(perturbed_protocol(x, y, code, 0.0, analytic), equality_protocol(x, y, code, analytic))) {
            ++eps_mismatch;
        }
        if (!same_outcome(perturbed_protocol(x, x, code, 0.0, analytic), equality_protocol(x, x, code, analytic))) {
            ++eps_mismatch;
        }
        for (std::uint64_t run = 0; run < runs_per_pair; ++run) {
            const ProtocolOptions sampling{
                .repetitions = reps, .mode = ProtocolMode::sampling, .seed = derive_seed(t, run)};
            false_equal += equality_protocol(x, y, code, sampling).equal;
            ++sampled_runs;
        }
    }
    const double rate = static_cast<double>(false_equal) / static_cast<double>(sampled_runs);

    std::size_t outside = 0;
    std::mt19937_64 rng(80);
    for (int i = 0; i < 10; ++i) {
        const auto x = random_bits(n, rng);
        auto y = random_bits(n, rng);
        if (i == 0) y = x;
        if (i == 1) {
            y = x;
            y[3] ^= 1;
        }
        const auto hx = build_fingerprint(x, code);
        const auto hy = build_fingerprint(y, code);
        const double p = swap_test_accept(hx, hy);
        const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(kShots));
        const double freq = static_cast<double>(sample_swap_test(hx, hy, kShots, rng)) / static_cast<double>(kShots);
        if (std::abs(freq - p) > kSigmas * sigma) ++outside;
    }

    std::ostringstream os;
    os << "r=" << reps << ", equal pairs rejected " << equal_rejected << ", false-equal rate " << rate << " ("
       << false_equal << "/" << sampled_runs << "), eps=0 mismatches " << eps_mismatch << ", sampling outside 3 sigma "
       << outside << "/10";
    return {equal_rejected == 0 && rate <= kFalseEqualLimit && eps_mismatch == 0 && outside == 0, os.str()};
}

Verdict criterion_counting() {
    const auto bound = ti_dimension_lower_bound(10, 2);
    const bool q_ok = bound.exact.has_value() && *bound.exact == 103;
    const auto low = counting_report(static_cast<double>(bound.q), 0.1, 1000000);
    const auto high = counting_report(std::exp2(20.0), 0.1, 1000000);
    bool monotone = true;
    bool flipped = false;
    for (double q = 103.0; q <= std::exp2(20.0); q *= 2.0) {
        const bool exceeds = counting_report(q, 0.1, 1000000).net_exceeds_budget;
        if (flipped && !exceeds) monotone = false;
        flipped = flipped || exceeds;
    }
    std::ostringstream os;
    os << "q(L=10)=" << bound.q << ", exceeds at q=103: " << (low.net_exceeds_budget ? "true" : "false")
       << ", at q=2^20: " << (high.net_exceeds_budget ? "true" : "false") << " (" << high.net_exponent_bits
       << " bits)";
    return {q_ok && !low.net_exceeds_budget && high.net_exceeds_budget && monotone, os.str()};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"area-law audit, D=2, L=2..6, 20 seeds", criterion_audit},
        {"Gram spectra match the dense oracle", criterion_oracle},
        {"area-law map is an isometry", criterion_isometry},
        {"invariance and cross terms", criterion_invariance},
        {"orbit counts and dimension bounds", criterion_dimension},
        {"five-qubit code marginals and correlators", criterion_qecc},
        {"GHZ-family correlator decay", criterion_decay},
        {"fingerprint equality protocol", criterion_fingerprint},
        {"counting report arithmetic", criterion_counting},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %d: %s: %s (%s)\n", index++, v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
