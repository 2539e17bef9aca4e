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

#include <cstdint>
#include <random>
#include <vector>

#include "arealab/lattice.hpp"
#include "arealab/sparse_state.hpp"

namespace arealab {

/// Sub-lattice sites above this cannot be enumerated into orbits.
inline constexpr std::size_t kMaxOrbitSites = 24;

/// Which symmetry group the orbits are taken under.
enum class OrbitGroup {
    translations,  ///< cyclic shifts along every sub-lattice axis
    mirror,        ///< shifts plus all reflections and axis permutations
};

/// Orthonormal basis of the symmetric subspace of span{|1>,|2>}^{(x) n} on a
/// periodic (D-1)-dimensional qubit sub-lattice, one state per orbit.
///
/// Qubit strings are packed into masks with site 0 as the most significant
/// bit; a set bit is symbol 2, a clear bit symbol 1, so integer order is the
/// lexicographic order of symbol strings. Each orbit is represented by its
/// smallest mask and its basis state is the uniform superposition over the
/// orbit, normalized by 1/sqrt(orbit size).
class OrbitBasis {
   public:
    /// Throws InfeasibleError if side^sub_dim exceeds kMaxOrbitSites.
    OrbitBasis(std::size_t sub_dim, std::size_t side, OrbitGroup group = OrbitGroup::translations);

    const Lattice& sublattice() const { return sublattice_; }
    OrbitGroup group() const { return group_; }
    std::size_t site_count() const { return sublattice_.site_count(); }
    std::size_t size() const { return representatives_.size(); }
    std::size_t group_order() const { return group_order_; }

    std::uint32_t representative(std::size_t i) const { return representatives_[i]; }
    std::vector<std::uint32_t> orbit(std::size_t i) const;
    SparseState state(std::size_t i) const;
    std::vector<SparseState> states() const;

    /// sum_i coefficients[i] |orbit_i>, not normalized.
    SparseVector combine(const std::vector<Complex>& coefficients) const;
    /// Seeded random unit vector in the span (complex Gaussian coefficients).
    SparseState random_state(std::mt19937_64& rng) const;

    /// size * n >= 2^n for translations; size * 2n * D! >= 2^n for the mirror
    /// group, with D = sub_dim + 1.
    bool satisfies_dimension_bound() const;

    Config mask_to_config(std::uint32_t mask) const;

   private:
    Lattice sublattice_;
    OrbitGroup group_;
    std::size_t group_order_ = 0;
    std::vector<std::uint32_t> representatives_;
    std::vector<std::uint32_t> members_;
    std::vector<std::size_t> offsets_;
};

/// Orbits of {1,2}^n under cyclic shifts of a (sub_dim)-dimensional torus.
inline OrbitBasis ti_basis(std::size_t sub_dim, std::size_t side) {
    return OrbitBasis(sub_dim, side, OrbitGroup::translations);
}
/// Orbits under shifts, reflections and axis permutations.
inline OrbitBasis mirror_ti_basis(std::size_t sub_dim, std::size_t side) {
    return OrbitBasis(sub_dim, side, OrbitGroup::mirror);
}

/// Lattice (D-1, L, 3) that hyperplane states live on.
Lattice hyperplane_lattice(const Lattice& lattice);

/// |0>^{(k-1)L^(D-1)} (x) |phi> (x) |0>^{(L-k)L^(D-1)} with k in [1, L].
/// Throws if phi uses symbol 0, k is out of range or the lattices disagree.
SparseVector embed_hyperplane(const SparseVector& phi, std::size_t k, const Lattice& lattice);

/// L^{-1/2} sum_k embed_hyperplane(phi, k). Linear isometry on vectors.
SparseVector area_law_map(const SparseVector& phi, const Lattice& lattice);
SparseState area_law_state(const SparseState& phi, const Lattice& lattice);

/// R_j |psi_L> for j = 0..D-1, R_j = stacking_rotation(lattice, j).
std::vector<SparseVector> rotated_copies(const SparseState& phi, const Lattice& lattice);

/// Worst fidelity deficit of phi under the sub-lattice point group
/// (reflections and axis swaps). Zero for mirror-symmetric phi.
double mirror_defect(const SparseState& phi);

/// Normalized sum over rotated copies. Throws if phi is not mirror symmetric
/// (mirror_defect > 1e-10) or L < 2.
SparseState isotropic_area_law_state(const SparseState& phi, const Lattice& lattice);

/// (|1...1> + |2...2>)/sqrt(2) on the hyperplane lattice.
SparseState ghz_hyperplane_state(const Lattice& lattice);
/// |1...1> on the hyperplane lattice.
SparseState uniform_hyperplane_state(const Lattice& lattice);

}  // namespace arealab
