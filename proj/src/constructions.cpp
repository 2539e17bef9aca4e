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

#include "arealab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace arealab {

namespace {

// Every element of the orbit group as a site map on the sub-lattice.
std::vector<std::vector<std::size_t>> group_elements(const Lattice& lat, OrbitGroup group) {
    const std::size_t k = lat.dim();
    const std::size_t L = lat.side();

    std::vector<std::size_t> axes(k);
    std::iota(axes.begin(), axes.end(), 0);
    std::vector<std::vector<std::size_t>> axis_orders;
    std::size_t flip_masks = 1;
    if (group == OrbitGroup::mirror) {
        do axis_orders.push_back(axes);
        while (std::next_permutation(axes.begin(), axes.end()));
        flip_masks = std::size_t{1} << k;
    } else {
        axis_orders.push_back(axes);
    }

    std::set<std::vector<std::size_t>> unique;
    for (const auto& order : axis_orders) {
        for (std::size_t flips = 0; flips < flip_masks; ++flips) {
            for (std::size_t shift_index = 0; shift_index < lat.site_count(); ++shift_index) {
                const Coord shift = lat.coord(shift_index);
                std::vector<std::size_t> image(lat.site_count());
                for (std::size_t s = 0; s < image.size(); ++s) {
                    const Coord c = lat.coord(s);
                    Coord out(k);
                    for (std::size_t j = 0; j < k; ++j) {
                        std::size_t x = c[order[j]];
                        if (flips >> j & 1) x = L - 1 - x;
                        out[j] = (x + shift[j]) % L;
                    }
                    image[s] = lat.site(out);
                }
                unique.insert(std::move(image));
            }
        }
    }
    return {unique.begin(), unique.end()};
}

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<std::size_t>& image, std::size_t n) {
    std::uint32_t out = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (mask >> (n - 1 - s) & 1u) out |= 1u << (n - 1 - image[s]);
    }
    return out;
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

Lattice checked_sublattice(std::size_t sub_dim, std::size_t side) {
    if (sub_dim == 0) throw std::invalid_argument("sub-lattice dimension must be >= 1");
    std::size_t n = 1;
    for (std::size_t j = 0; j < sub_dim; ++j) {
        n *= side;
        if (n > kMaxOrbitSites) {
            throw InfeasibleError("orbit enumeration is capped at " + std::to_string(kMaxOrbitSites) + " sites");
        }
    }
    return Lattice(sub_dim, side, 3);
}

}  // namespace

OrbitBasis::OrbitBasis(std::size_t sub_dim, std::size_t side, OrbitGroup group)
    : sublattice_(checked_sublattice(sub_dim, side)), group_(group) {
    const std::size_t n = sublattice_.site_count();
    const auto elements = group_elements(sublattice_, group);
    group_order_ = elements.size();

    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> visited(total, false);
    std::vector<std::uint32_t> orbit;
    offsets_.push_back(0);
    for (std::uint64_t m = 0; m < total; ++m) {
        if (visited[m]) continue;
        const auto mask = static_cast<std::uint32_t>(m);
        orbit.clear();
        for (const auto& g : elements) orbit.push_back(permute_mask(mask, g, n));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (auto member : orbit) visited[member] = true;
        // Masks are scanned in increasing order, so the first unvisited one is
        // the lexicographic minimum of its orbit.
        representatives_.push_back(mask);
        members_.insert(members_.end(), orbit.begin(), orbit.end());
        offsets_.push_back(members_.size());
    }
}

std::vector<std::uint32_t> OrbitBasis::orbit(std::size_t i) const {
    return {members_.begin() + static_cast<std::ptrdiff_t>(offsets_.at(i)),
            members_.begin() + static_cast<std::ptrdiff_t>(offsets_.at(i + 1))};
}

Config OrbitBasis::mask_to_config(std::uint32_t mask) const {
    const std::size_t n = site_count();
    Config c(n);
    for (std::size_t s = 0; s < n; ++s) c[s] = (mask >> (n - 1 - s) & 1u) ? 2 : 1;
    return c;
}

SparseState OrbitBasis::state(std::size_t i) const {
    return SparseState(combine([&] {
        std::vector<Complex> e(size(), 0.0);
        e.at(i) = 1.0;
        return e;
    }()));
}

std::vector<SparseState> OrbitBasis::states() const {
    std::vector<SparseState> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(state(i));
    return out;
}

SparseVector OrbitBasis::combine(const std::vector<Complex>& coefficients) const {
    if (coefficients.size() != size()) throw std::invalid_argument("coefficient count does not match basis size");
    std::vector<Term> terms;
    for (std::size_t i = 0; i < size(); ++i) {
        if (coefficients[i] == Complex{0.0}) continue;
        const std::size_t len = offsets_[i + 1] - offsets_[i];
        const Complex amp = coefficients[i] / std::sqrt(static_cast<double>(len));
        for (std::size_t j = offsets_[i]; j < offsets_[i + 1]; ++j) terms.push_back({mask_to_config(members_[j]), amp});
    }
    return SparseVector(sublattice_, std::move(terms));
}

SparseState OrbitBasis::random_state(std::mt19937_64& rng) const {
    std::normal_distribution<double> normal;
    std::vector<Complex> c(size());
    for (auto& x : c) {
        const double re = normal(rng);
        const double im = normal(rng);
        x = {re, im};
    }
    return SparseState::normalized(combine(c));
}

bool OrbitBasis::satisfies_dimension_bound() const {
    const std::size_t n = site_count();
    const std::uint64_t target = std::uint64_t{1} << n;
    std::uint64_t per_orbit = n;
    if (group_ == OrbitGroup::mirror) per_orbit = 2 * n * factorial(sublattice_.dim() + 1);
    return static_cast<std::uint64_t>(size()) * per_orbit >= target;
}

Lattice hyperplane_lattice(const Lattice& lattice) {
    if (lattice.dim() < 2) throw std::invalid_argument("hyperplane constructions need D >= 2");
    return Lattice(lattice.dim() - 1, lattice.side(), 3);
}

SparseVector embed_hyperplane(const SparseVector& phi, std::size_t k, const Lattice& lattice) {
    if (lattice.local_dim() != 3) throw std::invalid_argument("hyperplane constructions need local dimension 3");
    if (!(phi.lattice() == hyperplane_lattice(lattice))) {
        throw std::invalid_argument("phi must live on the (D-1)-dimensional hyperplane lattice");
    }
    if (k < 1 || k > lattice.side()) throw std::invalid_argument("hyperplane index k must be in [1, L]");
    for (const auto& t : phi.terms()) {
        if (std::find(t.config.begin(), t.config.end(), 0) != t.config.end()) {
            throw std::invalid_argument("phi must be supported on symbols {1,2}");
        }
    }
    const std::size_t plane = lattice.hyperplane_size();
    std::vector<std::size_t> sites(plane);
    std::iota(sites.begin(), sites.end(), (k - 1) * plane);
    return embed_sites(phi, lattice, sites);
}

SparseVector area_law_map(const SparseVector& phi, const Lattice& lattice) {
    SparseVector out(lattice);
    for (std::size_t k = 1; k <= lattice.side(); ++k) out += embed_hyperplane(phi, k, lattice);
    out *= 1.0 / std::sqrt(static_cast<double>(lattice.side()));
    return out;
}

SparseState area_law_state(const SparseState& phi, const Lattice& lattice) {
    return SparseState(area_law_map(phi.vector(), lattice));
}

std::vector<SparseVector> rotated_copies(const SparseState& phi, const Lattice& lattice) {
    const SparseVector psi = area_law_map(phi.vector(), lattice);
    std::vector<SparseVector> out;
    out.reserve(lattice.dim());
    for (std::size_t axis = 0; axis < lattice.dim(); ++axis) {
        out.push_back(apply_permutation(psi, stacking_rotation(lattice, axis)));
    }
    return out;
}

double mirror_defect(const SparseState& phi) {
    const auto& lat = phi.lattice();
    double worst = 0.0;
    for (std::size_t a = 0; a < lat.dim(); ++a) {
        worst = std::max(worst, 1.0 - fidelity(phi, apply_permutation(phi, reflection(lat, a))));
        for (std::size_t b = a + 1; b < lat.dim(); ++b) {
            worst = std::max(worst, 1.0 - fidelity(phi, apply_permutation(phi, axis_swap(lat, a, b))));
        }
    }
    return worst;
}

SparseState isotropic_area_law_state(const SparseState& phi, const Lattice& lattice) {
    if (lattice.side() < 2) throw std::invalid_argument("isotropic construction needs L >= 2");
    if (mirror_defect(phi) > 1e-10) throw std::invalid_argument("phi is not mirror symmetric");
    SparseVector sum(lattice);
    for (auto& copy : rotated_copies(phi, lattice)) sum += copy;
    // Normalizing by the norm of the sum accounts for every cross overlap
    // <R_j psi|R_k psi>, whether or not they vanish.
    return SparseState::normalized(std::move(sum));
}

SparseState ghz_hyperplane_state(const Lattice& lattice) {
    const Lattice sub = hyperplane_lattice(lattice);
    std::vector<Term> terms;
    const double amp = 1.0 / std::sqrt(2.0);
    terms.push_back({Config(sub.site_count(), 1), amp});
    terms.push_back({Config(sub.site_count(), 2), amp});
    return SparseState::normalized(SparseVector(sub, std::move(terms)));
}

SparseState uniform_hyperplane_state(const Lattice& lattice) {
    const Lattice sub = hyperplane_lattice(lattice);
    return SparseState::basis(sub, Config(sub.site_count(), 1));
}

}  // namespace arealab
