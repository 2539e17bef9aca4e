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

#include "arealab/qecc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "arealab/spectrum.hpp"

namespace arealab {

namespace {

SparseVector project_onto_code(SparseVector v, const std::vector<PauliString>& generators) {
    for (const auto& g : generators) {
        SparseVector gv = apply_pauli(v, g);
        v += gv;
        v *= 0.5;
    }
    return v;
}

// Visits every k-subset of [0, n) in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

PauliString::PauliString(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("Pauli string may only contain I, X, Y, Z");
        }
    }
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (other.size() != size()) throw std::invalid_argument("Pauli strings differ in length");
    std::size_t anticommuting = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        const char a = letters_[i];
        const char b = other.letters_[i];
        if (a != 'I' && b != 'I' && a != b) ++anticommuting;
    }
    return anticommuting % 2 == 0;
}

SparseVector apply_pauli(const SparseVector& v, const PauliString& pauli) {
    const auto& lat = v.lattice();
    if (lat.local_dim() != 2) throw std::invalid_argument("Pauli strings act on qubit lattices");
    if (pauli.size() != lat.site_count()) throw std::invalid_argument("Pauli string length does not match qubit count");
    const Complex i_unit(0.0, 1.0);
    std::vector<Term> terms;
    terms.reserve(v.support_size());
    for (const auto& t : v.terms()) {
        Config c = t.config;
        Complex amp = t.amplitude;
        for (std::size_t q = 0; q < c.size(); ++q) {
            switch (pauli.letters()[q]) {
                case 'X':
                    c[q] ^= 1;
                    break;
                case 'Z':
                    if (c[q]) amp = -amp;
                    break;
                case 'Y':
                    amp *= c[q] ? -i_unit : i_unit;
                    c[q] ^= 1;
                    break;
                default:
                    break;
            }
        }
        terms.push_back({std::move(c), amp});
    }
    return SparseVector(lat, std::move(terms));
}

StabilizerCode build_513() {
    StabilizerCode code;
    code.n = 5;
    code.k = 1;
    code.distance = 3;
    for (const char* g : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) code.generators.emplace_back(g);
    code.logical_x.emplace_back("XXXXX");
    code.logical_z.emplace_back("ZZZZZ");

    const Lattice lat = code.qubit_lattice();
    for (std::uint8_t bit : {0, 1}) {
        SparseVector seed = SparseVector::basis(lat, Config(code.n, bit));
        code.codewords.push_back(SparseState::normalized(project_onto_code(std::move(seed), code.generators)));
    }
    return code;
}

SparseState encode_logical(const StabilizerCode& code, const std::vector<Complex>& logical) {
    if (logical.size() != code.codewords.size()) throw std::invalid_argument("logical vector has wrong dimension");
    double n2 = 0.0;
    for (auto c : logical) n2 += std::norm(c);
    if (std::abs(n2 - 1.0) > 1e-12) throw std::invalid_argument("logical vector is not normalized");
    SparseVector out(code.qubit_lattice());
    for (std::size_t i = 0; i < logical.size(); ++i) {
        if (logical[i] != Complex{0.0}) out += logical[i] * code.codewords[i].vector();
    }
    return SparseState(std::move(out));
}

SparseState random_code_state(const StabilizerCode& code, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    std::vector<Complex> logical(code.codewords.size());
    double n2 = 0.0;
    for (auto& c : logical) {
        const double re = normal(rng);
        const double im = normal(rng);
        c = {re, im};
        n2 += std::norm(c);
    }
    for (auto& c : logical) c /= std::sqrt(n2);
    return encode_logical(code, logical);
}

CodeCheck check_code(const StabilizerCode& code) {
    CodeCheck check;
    check.generators_commute = true;
    for (std::size_t a = 0; a < code.generators.size(); ++a) {
        for (std::size_t b = a + 1; b < code.generators.size(); ++b) {
            if (!code.generators[a].commutes_with(code.generators[b])) check.generators_commute = false;
        }
    }
    for (const auto& c : code.codewords) {
        for (const auto& g : code.generators) {
            SparseVector diff = apply_pauli(c.vector(), g);
            diff += Complex{-1.0} * c.vector();
            check.worst_stabilizer_residual = std::max(check.worst_stabilizer_residual, diff.norm());
        }
    }
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
        for (std::size_t j = 0; j < code.codewords.size(); ++j) {
            const Complex expected = i == j ? 1.0 : 0.0;
            check.worst_codeword_overlap =
                std::max(check.worst_codeword_overlap,
                         std::abs(inner_product(code.codewords[i], code.codewords[j]) - expected));
        }
    }
    return check;
}

double worst_marginal_mixedness(const SparseState& state, std::size_t max_subset) {
    const std::size_t n = state.lattice().site_count();
    double worst = 0.0;
    for (std::size_t size = 1; size <= std::min(max_subset, n); ++size) {
        for_each_subset(n, size, [&](const std::vector<std::size_t>& sites) {
            worst = std::max(worst, distance_from_maximally_mixed(reduced_density_dense(state, sites)));
        });
    }
    return worst;
}

QeccAreaState qecc_area_state(const SparseState& codeword, const Lattice& lattice, bool allow_padding) {
    if (lattice.local_dim() != 3) throw std::invalid_argument("qecc lattice needs local dimension 3");
    if (codeword.lattice().local_dim() != 2) throw std::invalid_argument("codeword must be a qubit state");
    const std::size_t n = codeword.lattice().site_count();
    const std::size_t plane = lattice.hyperplane_size();
    if (n > plane || (n < plane && !allow_padding)) {
        throw std::invalid_argument("codeword has " + std::to_string(n) + " qubits but the hyperplane has " +
                                    std::to_string(plane) + " sites");
    }
    std::vector<std::size_t> sites(n);
    std::iota(sites.begin(), sites.end(), 0);
    const std::uint8_t qubit_to_qutrit[] = {1, 2};
    return {SparseState(embed_sites(codeword.vector(), lattice, sites, 0, qubit_to_qutrit)), n < plane};
}

}  // namespace arealab
