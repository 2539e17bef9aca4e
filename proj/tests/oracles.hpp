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

// Test-side reference computations. Nothing here calls into the library's
// algorithms; they share only the data types.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arealab/sparse_state.hpp"

namespace oracle {

/// Orbits of binary strings of length n under rotation, by canonicalizing
/// every string to its lexicographically smallest rotation.
inline std::size_t brute_force_necklaces(std::size_t n) {
    std::set<std::string> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? '1' : '0';
        std::string best = s;
        for (std::size_t r = 1; r < n; ++r) best = std::min(best, s.substr(r) + s.substr(0, r));
        seen.insert(best);
    }
    return seen.size();
}

/// (1/n) sum_{d | n} phi(d) 2^{n/d}.
inline std::uint64_t burnside_necklaces(std::uint64_t n) {
    auto phi = [](std::uint64_t k) {
        std::uint64_t count = 0;
        for (std::uint64_t i = 1; i <= k; ++i) count += std::gcd(i, k) == 1;
        return count;
    };
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) total += phi(d) * (std::uint64_t{1} << (n / d));
    }
    return total / n;
}

/// Orbits of binary L x L grids under the 2-torus shift group.
inline std::size_t brute_force_torus_orbits(std::size_t side) {
    const std::size_t n = side * side;
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::uint64_t best = mask;
        for (std::size_t dx = 0; dx < side; ++dx) {
            for (std::size_t dy = 0; dy < side; ++dy) {
                std::uint64_t shifted = 0;
                for (std::size_t x = 0; x < side; ++x) {
                    for (std::size_t y = 0; y < side; ++y) {
                        if ((mask >> (y * side + x)) & 1) shifted |= std::uint64_t{1} << (((y + dy) % side) * side + (x + dx) % side);
                    }
                }
                best = std::min(best, shifted);
            }
        }
        seen.insert(best);
    }
    return seen.size();
}

/// Squared singular values of the |A| x |A-bar| amplitude matrix, descending,
/// padded with zeros to d^|A|. Requires small lattices.
inline std::vector<double> svd_spectrum(const arealab::SparseVector& v, const std::vector<std::size_t>& region) {
    const auto& lat = v.lattice();
    const std::size_t d = lat.local_dim();
    std::vector<bool> in_a(lat.site_count(), false);
    for (auto s : region) in_a[s] = true;
    std::size_t rows = 1;
    std::size_t cols = 1;
    for (std::size_t s = 0; s < lat.site_count(); ++s) (in_a[s] ? rows : cols) *= d;
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (const auto& t : v.terms()) {
        std::size_t r = 0;
        std::size_t c = 0;
        for (std::size_t s = 0; s < lat.site_count(); ++s) {
            if (in_a[s]) {
                r = r * d + t.config[s];
            } else {
                c = c * d + t.config[s];
            }
        }
        psi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += t.amplitude;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(psi);
    std::vector<double> out(rows, 0.0);
    const auto& sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size(); ++i) out[static_cast<std::size_t>(i)] = sv(i) * sv(i);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Renyi entropy in bits straight from the definition.
inline double renyi_bits(std::vector<double> p, double alpha) {
    p.erase(std::remove_if(p.begin(), p.end(), [](double x) { return x <= 1e-15; }), p.end());
    if (alpha == 0.0) return std::log2(static_cast<double>(p.size()));
    if (alpha == 1.0) {
        double s = 0.0;
        for (double x : p) s -= x * std::log2(x);
        return s;
    }
    if (std::isinf(alpha)) return -std::log2(*std::max_element(p.begin(), p.end()));
    double s = 0.0;
    for (double x : p) s += std::pow(x, alpha);
    return std::log2(s) / (1.0 - alpha);
}

/// Same-row GHZ-family correlator of the level-1 projectors.
inline double ghz_same_row(double side) { return 1.0 / (2.0 * side) - 1.0 / (4.0 * side * side); }
/// Different-row GHZ-family correlator of the level-1 projectors.
inline double ghz_different_row(double side) { return -1.0 / (4.0 * side * side); }

/// Random sparse state with `support` distinct configurations.
inline arealab::SparseState random_sparse_state(const arealab::Lattice& lattice, std::size_t support,
                                                std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(0, static_cast<int>(lattice.local_dim()) - 1);
    std::normal_distribution<double> normal;
    std::vector<arealab::Term> terms;
    for (std::size_t i = 0; i < support; ++i) {
        arealab::Config c(lattice.site_count());
        for (auto& x : c) x = static_cast<std::uint8_t>(digit(rng));
        const double re = normal(rng);
        const double im = normal(rng);
        terms.push_back({c, {re, im}});
    }
    return arealab::SparseState::normalized(arealab::SparseVector(lattice, std::move(terms)));
}

}  // namespace oracle
