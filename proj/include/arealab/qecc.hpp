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

#include <random>
#include <string>
#include <vector>

#include "arealab/lattice.hpp"
#include "arealab/sparse_state.hpp"

namespace arealab {

/// Pauli string over {I, X, Y, Z}, one letter per qubit, e.g. "XZZXI".
class PauliString {
   public:
    explicit PauliString(std::string letters);

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool commutes_with(const PauliString& other) const;

    bool operator==(const PauliString& other) const = default;

   private:
    std::string letters_;
};

/// P|v> for a vector on a qubit lattice (local dimension 2).
SparseVector apply_pauli(const SparseVector& v, const PauliString& pauli);

/// Stabilizer code with explicit logical basis codewords.
struct StabilizerCode {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t distance = 0;
    std::vector<PauliString> generators;
    std::vector<PauliString> logical_x;
    std::vector<PauliString> logical_z;
    /// 2^k codewords on Lattice(1, n, 2).
    std::vector<SparseState> codewords;

    Lattice qubit_lattice() const { return Lattice(1, n, 2); }
};

/// The five-qubit perfect code [[5,1,3]] with generators XZZXI and its cyclic
/// shifts. Codewords are obtained by projecting |00000> and |11111> with
/// prod_g (I + g)/2 and renormalizing.
StabilizerCode build_513();

/// sum_i logical[i] |codeword_i>. Throws if logical is not a unit vector of
/// dimension 2^k (tolerance 1e-12).
SparseState encode_logical(const StabilizerCode& code, const std::vector<Complex>& logical);

/// Seeded Haar-like random code-space state (normalized complex Gaussian
/// logical vector).
SparseState random_code_state(const StabilizerCode& code, std::mt19937_64& rng);

struct CodeCheck {
    bool generators_commute = false;
    double worst_stabilizer_residual = 0.0;  ///< max || g|c> - |c> ||
    double worst_codeword_overlap = 0.0;     ///< max |<c_i|c_j> - delta_ij|
    bool ok(double tol = 1e-12) const {
        return generators_commute && worst_stabilizer_residual <= tol && worst_codeword_overlap <= tol;
    }
};

CodeCheck check_code(const StabilizerCode& code);

/// Largest trace distance from the maximally mixed state over every subset
/// of at most `max_subset` qubits of `state`.
double worst_marginal_mixedness(const SparseState& state, std::size_t max_subset);

struct QeccAreaState {
    SparseState state;
    /// True when the codeword is shorter than the hyperplane and the remaining
    /// top-hyperplane sites were filled with |0>.
    bool padded = false;
};

/// |C> (x) |0>^{(L-1)L^(D-1)}: the n-qubit codeword occupies the first
/// hyperplane with qubit symbols 0 -> |1>, 1 -> |2>. Throws on size mismatch
/// unless allow_padding is set and n < L^(D-1).
QeccAreaState qecc_area_state(const SparseState& codeword, const Lattice& lattice, bool allow_padding = false);

}  // namespace arealab
