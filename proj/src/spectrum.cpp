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

#include "arealab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace arealab {

namespace {

class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

   private:
    std::vector<std::size_t> parent_;
};

// Support of a state viewed as a sparse matrix M[a][b] = <a, b|psi>, with
// rows indexed by distinct A-restrictions and columns by A-bar restrictions.
struct Bipartition {
    std::size_t rows = 0;
    std::size_t cols = 0;
    struct Entry {
        std::size_t row;
        std::size_t col;
        Complex value;
    };
    std::vector<Entry> entries;
};

Bipartition split_support(const SparseState& state, std::span<const std::size_t> sites) {
    const auto& lat = state.lattice();
    if (!std::is_sorted(sites.begin(), sites.end()) ||
        std::adjacent_find(sites.begin(), sites.end()) != sites.end()) {
        throw std::invalid_argument("region sites must be sorted and distinct");
    }
    if (!sites.empty() && sites.back() >= lat.site_count()) throw std::invalid_argument("region site out of range");
    const auto rest = complement_sites(lat, sites);

    std::map<Config, std::size_t> row_ids;
    std::map<Config, std::size_t> col_ids;
    Bipartition bp;
    bp.entries.reserve(state.support_size());
    Config a(sites.size());
    Config b(rest.size());
    for (const auto& t : state.terms()) {
        for (std::size_t i = 0; i < sites.size(); ++i) a[i] = t.config[sites[i]];
        for (std::size_t i = 0; i < rest.size(); ++i) b[i] = t.config[rest[i]];
        auto [ra, inserted_a] = row_ids.try_emplace(a, row_ids.size());
        auto [cb, inserted_b] = col_ids.try_emplace(b, col_ids.size());
        bp.entries.push_back({ra->second, cb->second, t.amplitude});
    }
    bp.rows = row_ids.size();
    bp.cols = col_ids.size();
    return bp;
}

struct Block {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    std::vector<std::size_t> entries;
};

std::vector<Block> connected_blocks(const Bipartition& bp) {
    DisjointSets sets(bp.rows + bp.cols);
    for (const auto& e : bp.entries) sets.unite(e.row, bp.rows + e.col);

    std::map<std::size_t, std::size_t> block_of_root;
    std::vector<Block> blocks;
    auto block_for = [&](std::size_t node) -> Block& {
        auto [it, inserted] = block_of_root.try_emplace(sets.find(node), blocks.size());
        if (inserted) blocks.emplace_back();
        return blocks[it->second];
    };
    for (std::size_t r = 0; r < bp.rows; ++r) block_for(r).rows.push_back(r);
    for (std::size_t c = 0; c < bp.cols; ++c) block_for(bp.rows + c).cols.push_back(c);
    for (std::size_t i = 0; i < bp.entries.size(); ++i) block_for(bp.entries[i].row).entries.push_back(i);
    return blocks;
}

std::size_t digit_power(std::size_t d, std::size_t count, std::size_t cap, const char* what) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < count; ++i) {
        if (dim > cap / d) {
            throw InfeasibleError(std::string(what) + " exceeds dense cap " + std::to_string(cap));
        }
        dim *= d;
    }
    return dim;
}

}  // namespace

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    double total = 0.0;
    for (auto& p : p_) {
        if (!(p >= -1e-10)) throw std::invalid_argument("spectrum entry is negative or NaN");
        p = std::max(p, 0.0);
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw std::invalid_argument("spectrum does not sum to 1 (sum = " + std::to_string(total) + ")");
    }
    std::sort(p_.begin(), p_.end(), std::greater<>());
}

std::size_t SchmidtSpectrum::rank() const {
    if (p_.empty()) return 0;
    const double cut = kRankTolerance * p_.front();
    return static_cast<std::size_t>(std::count_if(p_.begin(), p_.end(), [&](double p) { return p > cut; }));
}

SchmidtSpectrum schmidt_spectrum(const SparseState& state, std::span<const std::size_t> sites) {
    const Bipartition bp = split_support(state, sites);
    std::vector<double> eigenvalues;
    for (const auto& block : connected_blocks(bp)) {
        // The environment Gram matrix G = M M^dagger shares its nonzero
        // spectrum with M^dagger M; diagonalize whichever side is smaller.
        const bool by_rows = block.rows.size() <= block.cols.size();
        std::map<std::size_t, std::size_t> local_row;
        std::map<std::size_t, std::size_t> local_col;
        for (auto r : block.rows) local_row.emplace(r, local_row.size());
        for (auto c : block.cols) local_col.emplace(c, local_col.size());
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(block.rows.size(), block.cols.size());
        for (auto i : block.entries) {
            const auto& e = bp.entries[i];
            m(local_row[e.row], local_col[e.col]) = e.value;
        }
        if (m.rows() == 1 || m.cols() == 1) {
            eigenvalues.push_back(m.squaredNorm());
            continue;
        }
        const Eigen::MatrixXcd gram = by_rows ? Eigen::MatrixXcd(m * m.adjoint()) : Eigen::MatrixXcd(m.adjoint() * m);
        for (double ev : hermitian_eigenvalues(gram)) eigenvalues.push_back(std::max(ev, 0.0));
    }
    return SchmidtSpectrum(std::move(eigenvalues));
}

SchmidtSpectrum schmidt_spectrum(const SparseState& state, const Region& region) {
    const auto sites = region.sites(state.lattice());
    return schmidt_spectrum(state, sites);
}

std::size_t schmidt_block_size(const SparseState& state, std::span<const std::size_t> sites) {
    const Bipartition bp = split_support(state, sites);
    std::size_t largest = 0;
    for (const auto& block : connected_blocks(bp)) {
        largest = std::max(largest, std::min(block.rows.size(), block.cols.size()));
    }
    return largest;
}

double renyi_entropy(const SchmidtSpectrum& spectrum, double alpha) {
    if (std::isnan(alpha) || alpha < 0.0) throw std::invalid_argument("Renyi index alpha must be >= 0");
    const auto& p = spectrum.probabilities();
    if (p.empty()) return 0.0;
    const double cut = kRankTolerance * p.front();

    if (alpha == 0.0) return std::log2(static_cast<double>(spectrum.rank()));
    if (std::isinf(alpha)) return -std::log2(p.front());
    if (alpha == 1.0) {
        double s = 0.0;
        for (double x : p) {
            if (x > 0.0) s -= x * std::log2(x);
        }
        return s;
    }
    double trace = 0.0;
    for (double x : p) {
        if (alpha < 1.0 ? x > cut : x > 0.0) trace += std::pow(x, alpha);
    }
    return std::log2(trace) / (1.0 - alpha);
}

Eigen::MatrixXcd reduced_density_dense(const SparseState& state, std::span<const std::size_t> sites,
                                       const DenseLimits& limits) {
    const auto& lat = state.lattice();
    const std::size_t d = lat.local_dim();
    const std::size_t n = lat.site_count();
    if (!std::is_sorted(sites.begin(), sites.end())) throw std::invalid_argument("region sites must be sorted");
    if (!sites.empty() && sites.back() >= n) throw std::invalid_argument("region site out of range");
    const std::size_t dim_a = digit_power(d, sites.size(), limits.max_region_dim, "d^|A|");
    digit_power(d, n, limits.max_state_dim, "d^N");

    const std::vector<Complex> psi = to_dense(state.vector(), limits.max_state_dim);
    const std::size_t dim_b = psi.size() / dim_a;

    std::vector<bool> in_a(n, false);
    for (auto s : sites) in_a[s] = true;

    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim_a, dim_b);
    std::vector<std::size_t> digits(n);
    for (std::size_t index = 0; index < psi.size(); ++index) {
        std::size_t rem = index;
        for (std::size_t s = n; s-- > 0;) {
            digits[s] = rem % d;
            rem /= d;
        }
        std::size_t a = 0;
        std::size_t b = 0;
        for (std::size_t s = 0; s < n; ++s) {
            if (in_a[s]) {
                a = a * d + digits[s];
            } else {
                b = b * d + digits[s];
            }
        }
        mat(a, b) = psi[index];
    }
    return mat * mat.adjoint();
}

Eigen::MatrixXcd reduced_density_dense(const SparseState& state, const Region& region, const DenseLimits& limits) {
    const auto sites = region.sites(state.lattice());
    return reduced_density_dense(state, sites, limits);
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed to converge");
    const auto& ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double trace_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().sum();
}

double distance_from_maximally_mixed(const Eigen::MatrixXcd& rho) {
    const auto dim = rho.rows();
    const Eigen::MatrixXcd diff = rho - Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
    double total = 0.0;
    for (double ev : hermitian_eigenvalues(diff)) total += std::abs(ev);
    return 0.5 * total;
}

}  // namespace arealab
