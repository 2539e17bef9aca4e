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

#include "arealab/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace arealab {

namespace {

constexpr std::size_t kMaxSites = std::size_t{1} << 20;

void check_axis(const Lattice& lattice, std::size_t axis) {
    if (axis >= lattice.dim()) {
        throw std::invalid_argument("axis " + std::to_string(axis) + " out of range for D=" +
                                    std::to_string(lattice.dim()));
    }
}

template <typename F>
SitePermutation coordinate_map(const Lattice& lattice, F&& f) {
    std::vector<std::size_t> image(lattice.site_count());
    for (std::size_t s = 0; s < image.size(); ++s) {
        Coord c = lattice.coord(s);
        f(c);
        image[s] = lattice.site(c);
    }
    return SitePermutation(std::move(image));
}

}  // namespace

Lattice::Lattice(std::size_t dim, std::size_t side, std::size_t local_dim)
    : dim_(dim), side_(side), local_dim_(local_dim), site_count_(1) {
    if (dim == 0) throw std::invalid_argument("lattice dimension D must be >= 1");
    if (side == 0) throw std::invalid_argument("lattice side L must be >= 1");
    if (local_dim < 2 || local_dim > 10) throw std::invalid_argument("local dimension d must be in [2, 10]");
    for (std::size_t j = 0; j < dim; ++j) {
        if (site_count_ > kMaxSites / side) {
            throw InfeasibleError("lattice with L^D > 2^20 sites is not supported");
        }
        site_count_ *= side;
    }
}

Coord Lattice::coord(std::size_t site) const {
    Coord c(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        c[j] = site % side_;
        site /= side_;
    }
    return c;
}

std::size_t Lattice::site(std::span<const std::size_t> coord) const {
    if (coord.size() != dim_) throw std::invalid_argument("coordinate has wrong dimension");
    std::size_t s = 0;
    for (std::size_t j = dim_; j-- > 0;) {
        if (coord[j] >= side_) throw std::invalid_argument("coordinate outside lattice");
        s = s * side_ + coord[j];
    }
    return s;
}

std::size_t Region::volume() const {
    std::size_t v = 1;
    for (auto l : lengths) v *= l;
    return v;
}

void Region::validate(const Lattice& lattice) const {
    if (offset.size() != lattice.dim() || lengths.size() != lattice.dim()) {
        throw std::invalid_argument("region dimension does not match lattice");
    }
    for (std::size_t j = 0; j < lattice.dim(); ++j) {
        if (lengths[j] == 0) throw std::invalid_argument("region lengths must be >= 1");
        if (offset[j] + lengths[j] > lattice.side()) {
            throw std::invalid_argument("region " + to_string(*this) + " does not fit in the lattice");
        }
    }
}

std::vector<std::size_t> Region::sites(const Lattice& lattice) const {
    validate(lattice);
    std::vector<std::size_t> out;
    out.reserve(volume());
    Coord c = offset;
    while (true) {
        out.push_back(lattice.site(c));
        std::size_t j = 0;
        for (; j < c.size(); ++j) {
            if (++c[j] < offset[j] + lengths[j]) break;
            c[j] = offset[j];
        }
        if (j == c.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Region::covers_lattice(const Lattice& lattice) const {
    return volume() == lattice.site_count();
}

std::uint64_t region_boundary(const Region& region) {
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < region.lengths.size(); ++j) {
        std::uint64_t face = 1;
        for (std::size_t k = 0; k < region.lengths.size(); ++k) {
            if (k != j) face *= region.lengths[k];
        }
        total += face;
    }
    return 2 * total;
}

std::vector<Region> enumerate_cubic_regions(const Lattice& lattice, std::size_t max_volume) {
    if (max_volume == 0) throw std::invalid_argument("max_volume must be >= 1");
    const std::size_t D = lattice.dim();
    const std::size_t L = lattice.side();

    // Per-axis (offset, length) choices, then the cartesian product.
    std::vector<std::pair<std::size_t, std::size_t>> axis_choices;
    for (std::size_t o = 0; o < L; ++o) {
        for (std::size_t l = 1; o + l <= L; ++l) axis_choices.emplace_back(o, l);
    }

    std::vector<Region> out;
    std::vector<std::size_t> pick(D, 0);
    while (true) {
        Region r{Coord(D), Coord(D)};
        std::size_t vol = 1;
        for (std::size_t j = 0; j < D; ++j) {
            r.offset[j] = axis_choices[pick[j]].first;
            r.lengths[j] = axis_choices[pick[j]].second;
            vol *= r.lengths[j];
        }
        if (vol <= max_volume) out.push_back(std::move(r));
        std::size_t j = 0;
        for (; j < D; ++j) {
            if (++pick[j] < axis_choices.size()) break;
            pick[j] = 0;
        }
        if (j == D) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> complement_sites(const Lattice& lattice, std::span<const std::size_t> sites) {
    std::vector<std::size_t> out;
    out.reserve(lattice.site_count() - std::min(sites.size(), lattice.site_count()));
    std::size_t i = 0;
    for (std::size_t s = 0; s < lattice.site_count(); ++s) {
        if (i < sites.size() && sites[i] == s) {
            ++i;
        } else {
            out.push_back(s);
        }
    }
    return out;
}

SitePermutation::SitePermutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto s : image_) {
        if (s >= image_.size() || seen[s]) throw std::invalid_argument("site permutation is not a bijection");
        seen[s] = true;
    }
}

SitePermutation SitePermutation::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t s = 0; s < n; ++s) image[s] = s;
    return SitePermutation(std::move(image));
}

SitePermutation SitePermutation::after(const SitePermutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("permutation sizes differ");
    std::vector<std::size_t> image(size());
    for (std::size_t s = 0; s < size(); ++s) image[s] = image_[other.image_[s]];
    return SitePermutation(std::move(image));
}

SitePermutation SitePermutation::inverse() const {
    std::vector<std::size_t> image(size());
    for (std::size_t s = 0; s < size(); ++s) image[image_[s]] = s;
    return SitePermutation(std::move(image));
}

SitePermutation translation(const Lattice& lattice, std::size_t axis, std::size_t shift) {
    check_axis(lattice, axis);
    const std::size_t L = lattice.side();
    return coordinate_map(lattice, [&](Coord& c) { c[axis] = (c[axis] + shift) % L; });
}

SitePermutation reflection(const Lattice& lattice, std::size_t axis) {
    check_axis(lattice, axis);
    const std::size_t L = lattice.side();
    return coordinate_map(lattice, [&](Coord& c) { c[axis] = L - 1 - c[axis]; });
}

SitePermutation quarter_turn(const Lattice& lattice, std::size_t from_axis, std::size_t to_axis) {
    check_axis(lattice, from_axis);
    check_axis(lattice, to_axis);
    if (from_axis == to_axis) throw std::invalid_argument("quarter turn needs two distinct axes");
    const std::size_t L = lattice.side();
    return coordinate_map(lattice, [&](Coord& c) {
        const std::size_t to = c[to_axis];
        const std::size_t from = c[from_axis];
        c[to_axis] = from;
        c[from_axis] = L - 1 - to;
    });
}

SitePermutation axis_swap(const Lattice& lattice, std::size_t a, std::size_t b) {
    check_axis(lattice, a);
    check_axis(lattice, b);
    return coordinate_map(lattice, [&](Coord& c) { std::swap(c[a], c[b]); });
}

SitePermutation stacking_rotation(const Lattice& lattice, std::size_t axis) {
    check_axis(lattice, axis);
    const std::size_t stack = lattice.dim() - 1;
    if (axis == stack) return SitePermutation::identity(lattice.site_count());
    return quarter_turn(lattice, stack, axis);
}

std::string to_string(const Region& region) {
    std::ostringstream os;
    for (std::size_t j = 0; j < region.offset.size(); ++j) os << (j ? "," : "") << region.offset[j];
    os << ':';
    for (std::size_t j = 0; j < region.lengths.size(); ++j) os << (j ? "," : "") << region.lengths[j];
    return os.str();
}

}  // namespace arealab
