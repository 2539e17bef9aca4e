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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arealab/lattice.hpp"
#include "arealab/sparse_state.hpp"

namespace arealab {

// ---------------------------------------------------------------------------
// Area-law audit

/// Which Schmidt-rank bound a record is checked against.
enum class RankBound {
    /// 2^{l_1...l_{D-1}} * l_D + 1: one hyperplane family stacked along axis D-1.
    hyperplane,
    /// sum_j (2^{prod_{i != j} l_i} * l_j + 1): superposition of the D rotated
    /// hyperplane families.
    isotropic,
};

struct AreaLawRecord {
    Region region;
    std::size_t schmidt_rank = 0;
    double s0 = 0.0;          ///< bits
    double rank_bound = 0.0;  ///< log2 of the rank bound, bits
    std::uint64_t boundary = 0;
    bool within_rank_bound = true;
    bool within_boundary = true;
    bool skipped = false;
};

struct AreaLawAudit {
    RankBound bound = RankBound::hyperplane;
    std::vector<AreaLawRecord> records;
    /// max over audited regions of s0 / |dA|.
    double minimal_c = 0.0;
    std::vector<std::string> notices;

    bool passed() const;
    /// Regions whose record breaks either inequality.
    std::vector<Region> violations() const;
};

struct AuditOptions {
    RankBound bound = RankBound::hyperplane;
    /// Regions whose largest Gram block would exceed this are skipped with a notice.
    std::size_t max_gram_block = 4096;
};

/// Integer Schmidt rank bound for a region under the given model, saturating
/// at UINT64_MAX.
std::uint64_t rank_bound_value(const Region& region, RankBound bound);

/// Sweeps every cubic region of volume <= max_region_volume. Region sweeps run
/// on parallel_for; records come back in enumeration order.
AreaLawAudit area_law_audit(const SparseState& state, std::size_t max_region_volume, const AuditOptions& options = {});

// ---------------------------------------------------------------------------
// Correlators

struct CorrelatorRecord {
    Coord site_a;
    Coord site_b;
    LocalOperator obs_a;
    LocalOperator obs_b;
    double connected_value = 0.0;
    double imaginary_residue = 0.0;
    /// Periodic minimum-image Chebyshev distance between the two sites.
    std::size_t separation = 0;
    bool within_norm_bound = true;
};

/// <AB> - <A><B> for single-site Hermitian observables on distinct sites.
CorrelatorRecord connected_correlator(const SparseState& state, const LocalOperator& obs_a, std::size_t site_a,
                                      const LocalOperator& obs_b, std::size_t site_b);

std::size_t chebyshev_separation(const Lattice& lattice, std::size_t site_a, std::size_t site_b);

/// Identity plus the d^2 - 1 generalized Gell-Mann matrices. Connected
/// correlators are bilinear, so vanishing on this basis means vanishing for
/// every pair of single-site observables.
std::vector<LocalOperator> hermitian_operator_basis(std::size_t d);

struct CorrelatorSweep {
    std::size_t pairs = 0;
    std::size_t evaluations = 0;
    double max_abs_connected = 0.0;
    double max_imaginary_residue = 0.0;
    std::size_t worst_site_a = 0;
    std::size_t worst_site_b = 0;
};

/// Every unordered pair of distinct sites, every (A, B) from `observables`.
CorrelatorSweep correlator_sweep(const SparseState& state, const std::vector<LocalOperator>& observables);

// ---------------------------------------------------------------------------
// Decay profiles

using StateFamily = std::function<SparseState(std::size_t side)>;
using SitePattern = std::function<std::pair<Coord, Coord>(std::size_t side)>;

/// psi_L built from the GHZ hyperplane state (|1..1> + |2..2>)/sqrt(2).
StateFamily ghz_area_law_family(std::size_t dim);
/// |0...0> on (dim, L, 3); every connected correlator vanishes.
StateFamily product_family(std::size_t dim);
/// Origin and (floor(L/2), 0, ..., 0): same hyperplane.
SitePattern same_row_pattern(std::size_t dim);
/// Origin and (0, ..., 0, floor(L/2)): different hyperplanes.
SitePattern different_row_pattern(std::size_t dim);

struct DecayPoint {
    std::size_t side = 0;
    double value = 0.0;
    std::size_t separation = 0;
};

struct DecayProfile {
    std::vector<DecayPoint> points;
    /// Least-squares slope of log|value| against log L; empty when fewer than
    /// two points have |value| above 1e-14.
    std::optional<double> fitted_exponent;
    double max_scaled = 0.0;  ///< max_L L * |value|
};

DecayProfile decay_profile(const StateFamily& family, const LocalOperator& obs_a, const LocalOperator& obs_b,
                           const SitePattern& pattern, const std::vector<std::size_t>& sides);

/// Least-squares slope of y against x.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// Rotated cross terms

/// || tr_{A-bar}(R_j |psi_L><psi_L| R_k^dagger) ||_1 with psi_L =
/// area_law_state(phi). Axes are 0-based; R_j maps the stacking axis onto
/// axis j. Throws if j == k or the region is the whole lattice.
double cross_term_check(const SparseState& phi, const Lattice& lattice, std::size_t j, std::size_t k,
                        const Region& region);

// ---------------------------------------------------------------------------
// Counting

struct CountingReport {
    double q = 0.0;
    double epsilon = 0.0;
    std::uint64_t budget_bits = 0;
    /// q * log2(1/epsilon): log2 of the epsilon-net size with its Omega
    /// constant set to 1.
    double net_exponent_bits = 0.0;
    double describable_exponent_bits = 0.0;
    bool net_exceeds_budget = false;
    std::string constant_convention = "Omega/O constants normalized to 1";
};

/// Throws std::invalid_argument unless q >= 2, 0 < epsilon < 1, budget >= 1.
CountingReport counting_report(double q, double epsilon, std::uint64_t budget_bits);

/// ceil(2^n / n) with n = L^(D-1).
struct DimensionBound {
    std::size_t sites = 0;
    std::optional<std::uint64_t> exact;
    double q = 0.0;
    double log2_q = 0.0;
};
DimensionBound ti_dimension_lower_bound(std::size_t side, std::size_t dim);

// ---------------------------------------------------------------------------
// Invariance

enum InvarianceGroup : unsigned {
    kTranslations = 1u << 0,
    kRotations = 1u << 1,
    kReflections = 1u << 2,
};

/// Generators of the selected groups: unit shifts along each axis, quarter
/// turns in each coordinate plane, and single-axis reflections.
std::vector<SitePermutation> symmetry_generators(const Lattice& lattice, unsigned groups);

/// max over generators U of 1 - |<psi|U psi>|^2.
double invariance_check(const SparseState& state, unsigned groups);

}  // namespace arealab
