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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace arealab {

using Coord = std::vector<std::size_t>;

/// Raised when a requested computation exceeds a configured size cap.
class InfeasibleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Periodic cubic lattice [L]^D with local dimension d.
///
/// Sites are indexed row-major with axis 0 varying fastest and axis D-1
/// (the hyperplane stacking axis) slowest, so hyperplane k (x_{D-1} = k)
/// is the contiguous index range [k * L^(D-1), (k+1) * L^(D-1)).
class Lattice {
   public:
    Lattice(std::size_t dim, std::size_t side, std::size_t local_dim);

    std::size_t dim() const { return dim_; }
    std::size_t side() const { return side_; }
    std::size_t local_dim() const { return local_dim_; }
    std::size_t site_count() const { return site_count_; }
    /// L^(D-1): number of sites in one hyperplane orthogonal to axis D-1.
    std::size_t hyperplane_size() const { return site_count_ / side_; }

    Coord coord(std::size_t site) const;
    std::size_t site(std::span<const std::size_t> coord) const;

    bool operator==(const Lattice& other) const = default;

   private:
    std::size_t dim_;
    std::size_t side_;
    std::size_t local_dim_;
    std::size_t site_count_;
};

/// Axis-aligned box [offset_j, offset_j + l_j) on every axis. No wrap-around.
struct Region {
    Coord offset;
    Coord lengths;

    std::size_t volume() const;
    /// Throws std::invalid_argument unless the box fits inside the lattice.
    void validate(const Lattice& lattice) const;
    /// Sorted site indices covered by the box.
    std::vector<std::size_t> sites(const Lattice& lattice) const;
    bool covers_lattice(const Lattice& lattice) const;

    auto operator<=>(const Region& other) const = default;
};

/// 2 * sum_j prod_{k != j} l_k. This arithmetic expression is the normative
/// definition of |dA| used throughout the audits; it does not count bonds.
std::uint64_t region_boundary(const Region& region);

/// All boxes of volume <= max_volume, sorted by (offset, lengths).
std::vector<Region> enumerate_cubic_regions(const Lattice& lattice, std::size_t max_volume);

/// Sites of the lattice not in `sites` (which must be sorted).
std::vector<std::size_t> complement_sites(const Lattice& lattice, std::span<const std::size_t> sites);

/// A bijection on lattice sites: site s is moved to image(s).
class SitePermutation {
   public:
    /// Throws std::invalid_argument if `image` is not a bijection on [0, n).
    explicit SitePermutation(std::vector<std::size_t> image);
    static SitePermutation identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t site) const { return image_[site]; }
    const std::vector<std::size_t>& image() const { return image_; }

    /// (this o other)(s) = this(other(s)).
    SitePermutation after(const SitePermutation& other) const;
    SitePermutation inverse() const;

    bool operator==(const SitePermutation& other) const = default;

   private:
    std::vector<std::size_t> image_;
};

/// Cyclic shift x_axis -> x_axis + shift (mod L).
SitePermutation translation(const Lattice& lattice, std::size_t axis, std::size_t shift = 1);
/// x_axis -> L - 1 - x_axis.
SitePermutation reflection(const Lattice& lattice, std::size_t axis);
/// Quarter turn in the (to_axis, from_axis) plane carrying the from_axis
/// direction onto to_axis: x'_to = x_from, x'_from = L - 1 - x_to.
SitePermutation quarter_turn(const Lattice& lattice, std::size_t from_axis, std::size_t to_axis);
/// Swap of two coordinate axes.
SitePermutation axis_swap(const Lattice& lattice, std::size_t a, std::size_t b);
/// Rotation mapping the stacking axis D-1 onto `axis`; identity when axis == D-1.
SitePermutation stacking_rotation(const Lattice& lattice, std::size_t axis);

std::string to_string(const Region& region);

}  // namespace arealab
