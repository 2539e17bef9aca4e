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

#include <Eigen/Dense>
#include <limits>
#include <span>
#include <vector>

#include "arealab/lattice.hpp"
#include "arealab/sparse_state.hpp"

namespace arealab {

/// Relative cutoff separating numerically-zero Schmidt weights from the
/// support: p counts iff p > kRankTolerance * max(p).
inline constexpr double kRankTolerance = 1e-12;

inline constexpr double kInfiniteAlpha = std::numeric_limits<double>::infinity();

/// Squared Schmidt coefficients, descending, floored at zero.
class SchmidtSpectrum {
   public:
    SchmidtSpectrum() = default;
    /// Sorts descending and clamps negative rounding noise to zero. Throws if
    /// an entry is below -1e-10 or the total deviates from 1 by more than 1e-10.
    explicit SchmidtSpectrum(std::vector<double> probabilities);

    const std::vector<double>& probabilities() const { return p_; }
    std::size_t size() const { return p_.size(); }
    /// Number of weights above the relative rank tolerance.
    std::size_t rank() const;

   private:
    std::vector<double> p_;
};

/// Spectrum of rho_A for A = `sites` (sorted). Built from the Gram matrix of
/// the environment vectors attached to each distinct A-restriction of the
/// support; the bipartite support graph is split into connected blocks and
/// each block is diagonalized on its smaller side. Cost depends on the
/// support size, never on d^|A|.
SchmidtSpectrum schmidt_spectrum(const SparseState& state, std::span<const std::size_t> sites);
SchmidtSpectrum schmidt_spectrum(const SparseState& state, const Region& region);

/// Largest Gram block schmidt_spectrum would diagonalize for this cut.
std::size_t schmidt_block_size(const SparseState& state, std::span<const std::size_t> sites);

/// Renyi entropy in bits. alpha = 0 counts the rank, alpha = 1 is the von
/// Neumann limit and alpha = kInfiniteAlpha the min-entropy. For 0 < alpha < 1
/// only weights above the rank tolerance contribute. Throws on negative or
/// NaN alpha.
double renyi_entropy(const SchmidtSpectrum& spectrum, double alpha);

struct DenseLimits {
    /// Cap on d^N for the full dense state vector.
    std::size_t max_state_dim = 59049;  // 3^10
    /// Cap on d^|A| for the reduced density matrix side.
    std::size_t max_region_dim = 729;  // 3^6
};

/// Explicit rho_A = tr_{A-bar} |psi><psi| built from the dense state vector.
/// Rows/columns follow the lexicographic order of the A digits (lowest site
/// most significant). Throws InfeasibleError past either cap.
Eigen::MatrixXcd reduced_density_dense(const SparseState& state, std::span<const std::size_t> sites,
                                       const DenseLimits& limits = {});
Eigen::MatrixXcd reduced_density_dense(const SparseState& state, const Region& region,
                                       const DenseLimits& limits = {});

/// Eigenvalues of a Hermitian matrix, descending.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m);
/// Sum of singular values.
double trace_norm(const Eigen::MatrixXcd& m);
/// (1/2) || rho - I/dim ||_1.
double distance_from_maximally_mixed(const Eigen::MatrixXcd& rho);

}  // namespace arealab
