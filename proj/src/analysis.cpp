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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "arealab/constructions.hpp"
#include "arealab/parallel.hpp"
#include "arealab/spectrum.hpp"

namespace arealab {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t face_product(const Region& region, std::size_t skip) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < region.lengths.size(); ++i) {
        if (i != skip) p *= region.lengths[i];
    }
    return p;
}

// 2^exponent * factor + 1, saturating.
std::uint64_t stacked_rank(std::uint64_t exponent, std::uint64_t factor) {
    if (exponent >= 64) return kSaturated;
    std::uint64_t v = 0;
    if (__builtin_mul_overflow(std::uint64_t{1} << exponent, factor, &v) || v == kSaturated) return kSaturated;
    return v + 1;
}

// log2(2^exponent * factor + 1) without overflow.
double stacked_rank_bits(std::uint64_t exponent, std::uint64_t factor) {
    const double e = static_cast<double>(exponent);
    return e + std::log2(static_cast<double>(factor) + std::exp2(-e));
}

double rank_bound_bits(const Region& region, RankBound bound) {
    const std::size_t D = region.lengths.size();
    if (bound == RankBound::hyperplane) return stacked_rank_bits(face_product(region, D - 1), region.lengths[D - 1]);
    std::vector<double> terms;
    for (std::size_t j = 0; j < D; ++j) terms.push_back(stacked_rank_bits(face_product(region, j), region.lengths[j]));
    const double top = *std::max_element(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += std::exp2(t - top);
    return top + std::log2(sum);
}

LocalOperator make_operator(std::size_t d) { return {d, std::vector<Complex>(d * d, 0.0)}; }

void check_observable(const LocalOperator& op, const Lattice& lattice) {
    if (op.dim != lattice.local_dim() || op.entries.size() != op.dim * op.dim) {
        throw std::invalid_argument("observable dimension does not match local dimension");
    }
    if (!op.is_hermitian()) throw std::invalid_argument("observable is not Hermitian");
}

}  // namespace

bool AreaLawAudit::passed() const {
    return std::all_of(records.begin(), records.end(),
                       [](const AreaLawRecord& r) { return r.skipped || (r.within_rank_bound && r.within_boundary); });
}

std::vector<Region> AreaLawAudit::violations() const {
    std::vector<Region> out;
    for (const auto& r : records) {
        if (!r.skipped && !(r.within_rank_bound && r.within_boundary)) out.push_back(r.region);
    }
    return out;
}

std::uint64_t rank_bound_value(const Region& region, RankBound bound) {
    const std::size_t D = region.lengths.size();
    if (bound == RankBound::hyperplane) return stacked_rank(face_product(region, D - 1), region.lengths[D - 1]);
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < D; ++j) {
        const std::uint64_t term = stacked_rank(face_product(region, j), region.lengths[j]);
        if (term > kSaturated - total) return kSaturated;
        total += term;
    }
    return total;
}

AreaLawAudit area_law_audit(const SparseState& state, std::size_t max_region_volume, const AuditOptions& options) {
    const Lattice& lat = state.lattice();
    const auto regions = enumerate_cubic_regions(lat, max_region_volume);

    AreaLawAudit audit;
    audit.bound = options.bound;
    audit.records.resize(regions.size());
    parallel_for(regions.size(), [&](std::size_t i) {
        AreaLawRecord& rec = audit.records[i];
        rec.region = regions[i];
        rec.boundary = region_boundary(rec.region);
        rec.rank_bound = rank_bound_bits(rec.region, options.bound);
        const auto sites = rec.region.sites(lat);
        if (schmidt_block_size(state, sites) > options.max_gram_block) {
            rec.skipped = true;
            return;
        }
        const SchmidtSpectrum spectrum = schmidt_spectrum(state, sites);
        rec.schmidt_rank = spectrum.rank();
        rec.s0 = renyi_entropy(spectrum, 0.0);
        // Both inequalities are decided on integers: rank <= bound and
        // rank <= 2^|dA|.
        rec.within_rank_bound = rec.schmidt_rank <= rank_bound_value(rec.region, options.bound);
        rec.within_boundary = rec.boundary >= 64 || rec.schmidt_rank <= (std::uint64_t{1} << rec.boundary);
    });

    for (const auto& rec : audit.records) {
        if (rec.skipped) {
            audit.notices.push_back("skipped region " + to_string(rec.region) + ": Gram block exceeds " +
                                    std::to_string(options.max_gram_block));
            continue;
        }
        audit.minimal_c = std::max(audit.minimal_c, rec.s0 / static_cast<double>(rec.boundary));
    }
    return audit;
}

std::size_t chebyshev_separation(const Lattice& lattice, std::size_t site_a, std::size_t site_b) {
    const Coord a = lattice.coord(site_a);
    const Coord b = lattice.coord(site_b);
    std::size_t sep = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const std::size_t diff = a[j] > b[j] ? a[j] - b[j] : b[j] - a[j];
        sep = std::max(sep, std::min(diff, lattice.side() - diff));
    }
    return sep;
}

CorrelatorRecord connected_correlator(const SparseState& state, const LocalOperator& obs_a, std::size_t site_a,
                                      const LocalOperator& obs_b, std::size_t site_b) {
    const Lattice& lat = state.lattice();
    check_observable(obs_a, lat);
    check_observable(obs_b, lat);
    if (site_a >= lat.site_count() || site_b >= lat.site_count()) throw std::invalid_argument("site out of range");
    if (site_a == site_b) throw std::invalid_argument("correlator supports must be disjoint");

    const SparseVector& psi = state.vector();
    const Complex ab = inner_product(psi, apply_local(apply_local(psi, site_b, obs_b), site_a, obs_a));
    const Complex a = local_expectation(psi, site_a, obs_a);
    const Complex b = local_expectation(psi, site_b, obs_b);
    const Complex connected = ab - a * b;

    CorrelatorRecord rec;
    rec.site_a = lat.coord(site_a);
    rec.site_b = lat.coord(site_b);
    rec.obs_a = obs_a;
    rec.obs_b = obs_b;
    rec.connected_value = connected.real();
    rec.imaginary_residue = std::abs(connected.imag());
    rec.separation = chebyshev_separation(lat, site_a, site_b);
    rec.within_norm_bound =
        std::abs(rec.connected_value) <= obs_a.operator_norm() * obs_b.operator_norm() * (1.0 + 1e-12) + 1e-12;
    return rec;
}

std::vector<LocalOperator> hermitian_operator_basis(std::size_t d) {
    std::vector<LocalOperator> basis;
    basis.push_back(identity_operator(d));
    const Complex i_unit(0.0, 1.0);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            LocalOperator sym = make_operator(d);
            sym.entries[j * d + k] = 1.0;
            sym.entries[k * d + j] = 1.0;
            basis.push_back(sym);
            LocalOperator anti = make_operator(d);
            anti.entries[j * d + k] = -i_unit;
            anti.entries[k * d + j] = i_unit;
            basis.push_back(anti);
        }
    }
    for (std::size_t l = 1; l < d; ++l) {
        LocalOperator diag = make_operator(d);
        const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        for (std::size_t j = 0; j < l; ++j) diag.entries[j * d + j] = scale;
        diag.entries[l * d + l] = -scale * static_cast<double>(l);
        basis.push_back(diag);
    }
    return basis;
}

CorrelatorSweep correlator_sweep(const SparseState& state, const std::vector<LocalOperator>& observables) {
    const Lattice& lat = state.lattice();
    const std::size_t n = lat.site_count();
    for (const auto& op : observables) check_observable(op, lat);

    // Per site and observable: O|psi> and <O>.
    const SparseVector& psi = state.vector();
    std::vector<std::vector<Complex>> mean(n, std::vector<Complex>(observables.size()));
    std::vector<std::vector<SparseVector>> applied(n);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t o = 0; o < observables.size(); ++o) {
            applied[s].push_back(apply_local(psi, s, observables[o]));
            mean[s][o] = inner_product(psi, applied[s][o]);
        }
    }

    std::vector<CorrelatorSweep> per_site(n);
    parallel_for(n, [&](std::size_t sa) {
        CorrelatorSweep& sw = per_site[sa];
        for (std::size_t sb = sa + 1; sb < n; ++sb) {
            ++sw.pairs;
            for (std::size_t oa = 0; oa < observables.size(); ++oa) {
                for (std::size_t ob = 0; ob < observables.size(); ++ob) {
                    // <A_a B_b> = <A_a psi | B_b psi> for Hermitian A.
                    const Complex connected =
                        inner_product(applied[sa][oa], applied[sb][ob]) - mean[sa][oa] * mean[sb][ob];
                    ++sw.evaluations;
                    sw.max_imaginary_residue = std::max(sw.max_imaginary_residue, std::abs(connected.imag()));
                    const double magnitude = std::abs(connected.real());
                    if (sw.evaluations == 1 || magnitude > sw.max_abs_connected) {
                        sw.max_abs_connected = magnitude;
                        sw.worst_site_a = sa;
                        sw.worst_site_b = sb;
                    }
                }
            }
        }
    });

    CorrelatorSweep total;
    for (const auto& sw : per_site) {
        const bool first = total.evaluations == 0;
        total.pairs += sw.pairs;
        total.evaluations += sw.evaluations;
        total.max_imaginary_residue = std::max(total.max_imaginary_residue, sw.max_imaginary_residue);
        if (sw.evaluations && (first || sw.max_abs_connected > total.max_abs_connected)) {
            total.max_abs_connected = sw.max_abs_connected;
            total.worst_site_a = sw.worst_site_a;
            total.worst_site_b = sw.worst_site_b;
        }
    }
    return total;
}

StateFamily ghz_area_law_family(std::size_t dim) {
    return [dim](std::size_t side) {
        const Lattice lat(dim, side, 3);
        return area_law_state(ghz_hyperplane_state(lat), lat);
    };
}

StateFamily product_family(std::size_t dim) {
    return [dim](std::size_t side) { return SparseState::vacuum(Lattice(dim, side, 3)); };
}

SitePattern same_row_pattern(std::size_t dim) {
    return [dim](std::size_t side) {
        Coord a(dim, 0);
        Coord b(dim, 0);
        b[0] = side / 2;
        return std::make_pair(a, b);
    };
}

SitePattern different_row_pattern(std::size_t dim) {
    return [dim](std::size_t side) {
        Coord a(dim, 0);
        Coord b(dim, 0);
        b[dim - 1] = side / 2;
        return std::make_pair(a, b);
    };
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope needs at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw std::invalid_argument("slope undefined for constant x");
    return sxy / sxx;
}

DecayProfile decay_profile(const StateFamily& family, const LocalOperator& obs_a, const LocalOperator& obs_b,
                           const SitePattern& pattern, const std::vector<std::size_t>& sides) {
    if (sides.empty()) throw std::invalid_argument("decay profile needs at least one lattice size");
    if (!std::is_sorted(sides.begin(), sides.end()) ||
        std::adjacent_find(sides.begin(), sides.end()) != sides.end()) {
        throw std::invalid_argument("lattice sizes must be strictly increasing");
    }
    DecayProfile profile;
    std::vector<double> log_l;
    std::vector<double> log_v;
    for (auto side : sides) {
        const SparseState state = family(side);
        const auto [ca, cb] = pattern(side);
        const auto& lat = state.lattice();
        const auto rec = connected_correlator(state, obs_a, lat.site(ca), obs_b, lat.site(cb));
        profile.points.push_back({side, rec.connected_value, rec.separation});
        profile.max_scaled = std::max(profile.max_scaled, static_cast<double>(side) * std::abs(rec.connected_value));
        if (std::abs(rec.connected_value) > 1e-14) {
            log_l.push_back(std::log(static_cast<double>(side)));
            log_v.push_back(std::log(std::abs(rec.connected_value)));
        }
    }
    if (log_l.size() >= 2) profile.fitted_exponent = least_squares_slope(log_l, log_v);
    return profile;
}

double cross_term_check(const SparseState& phi, const Lattice& lattice, std::size_t j, std::size_t k,
                        const Region& region) {
    if (j == k) throw std::invalid_argument("cross term needs two distinct rotations");
    if (j >= lattice.dim() || k >= lattice.dim()) throw std::invalid_argument("rotation axis out of range");
    region.validate(lattice);
    if (region.covers_lattice(lattice)) {
        throw std::invalid_argument("cross-term region must leave part of the lattice outside A");
    }
    const auto copies = rotated_copies(phi, lattice);
    const SparseVector& u = copies[j];
    const SparseVector& v = copies[k];
    const auto sites = region.sites(lattice);
    const auto rest = complement_sites(lattice, sites);

    auto restrict = [](const Config& c, const std::vector<std::size_t>& where) {
        Config out(where.size());
        for (std::size_t i = 0; i < where.size(); ++i) out[i] = c[where[i]];
        return out;
    };

    // tr_{A-bar} |u><v| = sum over matching environments b of u(a,b) v(a',b)^*.
    std::map<Config, std::vector<std::pair<Config, Complex>>> v_by_env;
    for (const auto& t : v.terms()) v_by_env[restrict(t.config, rest)].emplace_back(restrict(t.config, sites), t.amplitude);

    std::map<Config, std::size_t> row_ids;
    std::map<Config, std::size_t> col_ids;
    struct Entry {
        std::size_t row;
        std::size_t col;
        Complex value;
    };
    std::vector<Entry> entries;
    for (const auto& t : u.terms()) {
        auto it = v_by_env.find(restrict(t.config, rest));
        if (it == v_by_env.end()) continue;
        const auto row = row_ids.try_emplace(restrict(t.config, sites), row_ids.size()).first->second;
        for (const auto& [a_prime, amp] : it->second) {
            const auto col = col_ids.try_emplace(a_prime, col_ids.size()).first->second;
            entries.push_back({row, col, t.amplitude * std::conj(amp)});
        }
    }
    if (entries.empty()) return 0.0;
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(row_ids.size(), col_ids.size());
    for (const auto& e : entries) x(e.row, e.col) += e.value;
    return trace_norm(x);
}

CountingReport counting_report(double q, double epsilon, std::uint64_t budget_bits) {
    if (!(q >= 2.0) || !std::isfinite(q)) throw std::invalid_argument("subspace dimension q must be >= 2");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (budget_bits < 1) throw std::invalid_argument("description budget must be >= 1 bit");
    CountingReport r;
    r.q = q;
    r.epsilon = epsilon;
    r.budget_bits = budget_bits;
    r.net_exponent_bits = q * std::log2(1.0 / epsilon);
    r.describable_exponent_bits = static_cast<double>(budget_bits);
    r.net_exceeds_budget = r.net_exponent_bits > r.describable_exponent_bits;
    return r;
}

DimensionBound ti_dimension_lower_bound(std::size_t side, std::size_t dim) {
    if (side < 1 || dim < 2) throw std::invalid_argument("dimension bound needs L >= 1 and D >= 2");
    DimensionBound b;
    double n = 1.0;
    for (std::size_t j = 0; j + 1 < dim; ++j) n *= static_cast<double>(side);
    if (n > 1e15) throw InfeasibleError("hyperplane site count too large");
    b.sites = static_cast<std::size_t>(n);
    if (b.sites < 64) {
        const std::uint64_t num = std::uint64_t{1} << b.sites;
        b.exact = (num + b.sites - 1) / b.sites;
        b.q = static_cast<double>(*b.exact);
        b.log2_q = std::log2(b.q);
    } else {
        b.log2_q = static_cast<double>(b.sites) - std::log2(static_cast<double>(b.sites));
        b.q = std::exp2(b.log2_q);
    }
    return b;
}

std::vector<SitePermutation> symmetry_generators(const Lattice& lattice, unsigned groups) {
    std::vector<SitePermutation> gens;
    const std::size_t D = lattice.dim();
    if (groups & kTranslations) {
        for (std::size_t a = 0; a < D; ++a) gens.push_back(translation(lattice, a, 1));
    }
    if (groups & kRotations) {
        for (std::size_t a = 0; a < D; ++a)
            for (std::size_t b = a + 1; b < D; ++b) gens.push_back(quarter_turn(lattice, b, a));
    }
    if (groups & kReflections) {
        for (std::size_t a = 0; a < D; ++a) gens.push_back(reflection(lattice, a));
    }
    return gens;
}

double invariance_check(const SparseState& state, unsigned groups) {
    double worst = 0.0;
    for (const auto& g : symmetry_generators(state.lattice(), groups)) {
        worst = std::max(worst, 1.0 - fidelity(state, apply_permutation(state, g)));
    }
    return worst;
}

}  // namespace arealab
