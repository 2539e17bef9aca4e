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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arealab/lattice.hpp"

namespace arealab {

using Complex = std::complex<double>;

/// Basis configuration: one base-d digit per site, site 0 first. Ordering of
/// configurations is lexicographic on the digit string.
using Config = std::vector<std::uint8_t>;

/// Amplitudes with magnitude below this are dropped on canonicalization.
inline constexpr double kAmplitudeFloor = 1e-14;
/// Allowed deviation of sum |amp|^2 from 1 for a SparseState.
inline constexpr double kNormTolerance = 1e-12;

struct Term {
    Config config;
    Complex amplitude;
};

std::string config_to_string(const Config& config);
Config config_from_string(const std::string& digits);

/// A vector in (C^d)^{(x) L^D} stored as canonical (sorted, merged, floored)
/// terms. No normalization is implied; this is the carrier for linear maps.
class SparseVector {
   public:
    explicit SparseVector(Lattice lattice) : lattice_(std::move(lattice)) {}
    /// Sorts, merges duplicate configurations and drops amplitudes below the
    /// floor. Throws std::invalid_argument on a malformed configuration.
    SparseVector(Lattice lattice, std::vector<Term> terms);

    static SparseVector basis(Lattice lattice, Config config, Complex amplitude = 1.0);

    const Lattice& lattice() const { return lattice_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    double norm_squared() const;
    double norm() const;
    /// Amplitude of a configuration (zero if absent).
    Complex amplitude(const Config& config) const;

    SparseVector& operator+=(const SparseVector& other);
    SparseVector& operator*=(Complex scale);
    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator*(Complex s, SparseVector v) { return v *= s; }

   private:
    Lattice lattice_;
    std::vector<Term> terms_;
};

/// Unit-norm canonical SparseVector. Immutable once built.
class SparseState {
   public:
    /// Throws std::invalid_argument if |norm^2 - 1| > kNormTolerance.
    explicit SparseState(SparseVector vector);
    SparseState(Lattice lattice, std::vector<Term> terms);

    /// Rescales to unit norm; throws on the zero vector.
    static SparseState normalized(SparseVector vector);
    static SparseState basis(Lattice lattice, Config config);
    /// |0...0>.
    static SparseState vacuum(const Lattice& lattice);

    const Lattice& lattice() const { return vector_.lattice(); }
    const std::vector<Term>& terms() const { return vector_.terms(); }
    std::size_t support_size() const { return vector_.support_size(); }
    const SparseVector& vector() const { return vector_; }
    operator const SparseVector&() const { return vector_; }

   private:
    SparseVector vector_;
};

/// <a|b>, merging sorted term lists. Throws on lattice mismatch.
Complex inner_product(const SparseVector& a, const SparseVector& b);
/// |<a|b>|^2.
double fidelity(const SparseVector& a, const SparseVector& b);

/// Re-indexes configurations: the digit at site s moves to site perm(s).
SparseVector apply_permutation(const SparseVector& v, const SitePermutation& perm);
SparseState apply_lattice_symmetry(const SparseState& state, const SitePermutation& perm);

/// Single-site operator as a dense d x d row-major matrix.
struct LocalOperator {
    std::size_t dim = 0;
    std::vector<Complex> entries;

    Complex operator()(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
    bool is_hermitian(double tol = 1e-12) const;
    /// Largest |eigenvalue| for Hermitian operators.
    double operator_norm() const;
};

LocalOperator projector(std::size_t dim, std::size_t level);
LocalOperator identity_operator(std::size_t dim);

/// O_site |v>.
SparseVector apply_local(const SparseVector& v, std::size_t site, const LocalOperator& op);
/// <v| O_site |v>.
Complex local_expectation(const SparseVector& v, std::size_t site, const LocalOperator& op);

/// Embeds a vector on `sites` (site i of the source goes to sites[i]) of a
/// larger lattice whose other sites hold `fill`.
SparseVector embed_sites(const SparseVector& v, const Lattice& target, std::span<const std::size_t> sites,
                         std::uint8_t fill = 0, std::span<const std::uint8_t> digit_map = {});

/// Dense amplitude vector in the lexicographic basis; throws InfeasibleError
/// past `max_dim` entries.
std::vector<Complex> to_dense(const SparseVector& v, std::size_t max_dim);

}  // namespace arealab
