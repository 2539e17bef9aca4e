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

#include "arealab/sparse_state.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arealab {

namespace {

void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.config < b.config; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Term merged = std::move(terms[i]);
        std::size_t j = i + 1;
        for (; j < terms.size() && terms[j].config == merged.config; ++j) merged.amplitude += terms[j].amplitude;
        if (std::abs(merged.amplitude) >= kAmplitudeFloor) terms[out++] = std::move(merged);
        i = j;
    }
    terms.resize(out);
}

void check_lattices(const SparseVector& a, const SparseVector& b) {
    if (!(a.lattice() == b.lattice())) throw std::invalid_argument("states live on different lattices");
}

}  // namespace

std::string config_to_string(const Config& config) {
    std::string s(config.size(), '0');
    for (std::size_t i = 0; i < config.size(); ++i) s[i] = static_cast<char>('0' + config[i]);
    return s;
}

Config config_from_string(const std::string& digits) {
    Config c(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < '0' || digits[i] > '9') throw std::invalid_argument("configuration must be a digit string");
        c[i] = static_cast<std::uint8_t>(digits[i] - '0');
    }
    return c;
}

SparseVector::SparseVector(Lattice lattice, std::vector<Term> terms)
    : lattice_(std::move(lattice)), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (t.config.size() != lattice_.site_count()) {
            throw std::invalid_argument("configuration length " + std::to_string(t.config.size()) +
                                        " does not match site count " + std::to_string(lattice_.site_count()));
        }
        for (auto digit : t.config) {
            if (digit >= lattice_.local_dim()) throw std::invalid_argument("configuration digit exceeds local dimension");
        }
        if (!std::isfinite(t.amplitude.real()) || !std::isfinite(t.amplitude.imag())) {
            throw std::invalid_argument("non-finite amplitude");
        }
    }
    canonicalize(terms_);
}

SparseVector SparseVector::basis(Lattice lattice, Config config, Complex amplitude) {
    std::vector<Term> terms;
    terms.push_back({std::move(config), amplitude});
    return SparseVector(std::move(lattice), std::move(terms));
}

double SparseVector::norm_squared() const {
    double total = 0.0;
    for (const auto& t : terms_) total += std::norm(t.amplitude);
    return total;
}

double SparseVector::norm() const { return std::sqrt(norm_squared()); }

Complex SparseVector::amplitude(const Config& config) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), config,
                               [](const Term& t, const Config& c) { return t.config < c; });
    if (it != terms_.end() && it->config == config) return it->amplitude;
    return 0.0;
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
    check_lattices(*this, other);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->config < b->config)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->config < a->config) {
            merged.push_back(*b++);
        } else {
            Complex sum = a->amplitude + b->amplitude;
            if (std::abs(sum) >= kAmplitudeFloor) merged.push_back({std::move(a->config), sum});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

SparseVector& SparseVector::operator*=(Complex scale) {
    for (auto& t : terms_) t.amplitude *= scale;
    std::erase_if(terms_, [](const Term& t) { return std::abs(t.amplitude) < kAmplitudeFloor; });
    return *this;
}

SparseState::SparseState(SparseVector vector) : vector_(std::move(vector)) {
    const double n2 = vector_.norm_squared();
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state is not normalized (norm^2 = " + std::to_string(n2) + ")");
    }
}

SparseState::SparseState(Lattice lattice, std::vector<Term> terms)
    : SparseState(SparseVector(std::move(lattice), std::move(terms))) {}

SparseState SparseState::normalized(SparseVector vector) {
    const double n = vector.norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    vector *= 1.0 / n;
    return SparseState(std::move(vector));
}

SparseState SparseState::basis(Lattice lattice, Config config) {
    return SparseState(SparseVector::basis(std::move(lattice), std::move(config)));
}

SparseState SparseState::vacuum(const Lattice& lattice) {
    return basis(lattice, Config(lattice.site_count(), 0));
}

Complex inner_product(const SparseVector& a, const SparseVector& b) {
    check_lattices(a, b);
    Complex total = 0.0;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->config < ib->config) {
            ++ia;
        } else if (ib->config < ia->config) {
            ++ib;
        } else {
            total += std::conj(ia->amplitude) * ib->amplitude;
            ++ia;
            ++ib;
        }
    }
    return total;
}

double fidelity(const SparseVector& a, const SparseVector& b) { return std::norm(inner_product(a, b)); }

SparseVector apply_permutation(const SparseVector& v, const SitePermutation& perm) {
    if (perm.size() != v.lattice().site_count()) throw std::invalid_argument("permutation size does not match lattice");
    std::vector<Term> terms;
    terms.reserve(v.support_size());
    for (const auto& t : v.terms()) {
        Config c(t.config.size());
        for (std::size_t s = 0; s < c.size(); ++s) c[perm(s)] = t.config[s];
        terms.push_back({std::move(c), t.amplitude});
    }
    return SparseVector(v.lattice(), std::move(terms));
}

SparseState apply_lattice_symmetry(const SparseState& state, const SitePermutation& perm) {
    // A permutation only relabels configurations, so the norm is untouched.
    return SparseState(apply_permutation(state.vector(), perm));
}

bool LocalOperator::is_hermitian(double tol) const {
    if (entries.size() != dim * dim) return false;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
        }
    }
    return true;
}

double LocalOperator::operator_norm() const {
    Eigen::MatrixXcd m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = (*this)(r, c);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

LocalOperator projector(std::size_t dim, std::size_t level) {
    if (level >= dim) throw std::invalid_argument("projector level out of range");
    LocalOperator op{dim, std::vector<Complex>(dim * dim, 0.0)};
    op.entries[level * dim + level] = 1.0;
    return op;
}

LocalOperator identity_operator(std::size_t dim) {
    LocalOperator op{dim, std::vector<Complex>(dim * dim, 0.0)};
    for (std::size_t i = 0; i < dim; ++i) op.entries[i * dim + i] = 1.0;
    return op;
}

SparseVector apply_local(const SparseVector& v, std::size_t site, const LocalOperator& op) {
    const auto& lat = v.lattice();
    if (site >= lat.site_count()) throw std::invalid_argument("site out of range");
    if (op.dim != lat.local_dim() || op.entries.size() != op.dim * op.dim) {
        throw std::invalid_argument("operator dimension does not match local dimension");
    }
    std::vector<Term> terms;
    terms.reserve(v.support_size() * op.dim);
    for (const auto& t : v.terms()) {
        const std::size_t in = t.config[site];
        for (std::size_t out = 0; out < op.dim; ++out) {
            const Complex m = op(out, in);
            if (m == Complex{0.0}) continue;
            Config c = t.config;
            c[site] = static_cast<std::uint8_t>(out);
            terms.push_back({std::move(c), m * t.amplitude});
        }
    }
    return SparseVector(lat, std::move(terms));
}

Complex local_expectation(const SparseVector& v, std::size_t site, const LocalOperator& op) {
    return inner_product(v, apply_local(v, site, op));
}

SparseVector embed_sites(const SparseVector& v, const Lattice& target, std::span<const std::size_t> sites,
                         std::uint8_t fill, std::span<const std::uint8_t> digit_map) {
    if (sites.size() != v.lattice().site_count()) throw std::invalid_argument("embedding site list has wrong size");
    if (fill >= target.local_dim()) throw std::invalid_argument("fill digit exceeds target local dimension");
    std::vector<Term> terms;
    terms.reserve(v.support_size());
    for (const auto& t : v.terms()) {
        Config c(target.site_count(), fill);
        for (std::size_t i = 0; i < sites.size(); ++i) {
            std::uint8_t digit = t.config[i];
            if (!digit_map.empty()) {
                if (digit >= digit_map.size()) throw std::invalid_argument("digit map too short");
                digit = digit_map[digit];
            }
            if (sites[i] >= c.size()) throw std::invalid_argument("embedding site out of range");
            c[sites[i]] = digit;
        }
        terms.push_back({std::move(c), t.amplitude});
    }
    return SparseVector(target, std::move(terms));
}

std::vector<Complex> to_dense(const SparseVector& v, std::size_t max_dim) {
    const auto& lat = v.lattice();
    std::size_t dim = 1;
    for (std::size_t s = 0; s < lat.site_count(); ++s) {
        if (dim > max_dim / lat.local_dim()) {
            throw InfeasibleError("dense vector would exceed " + std::to_string(max_dim) + " entries");
        }
        dim *= lat.local_dim();
    }
    std::vector<Complex> dense(dim, 0.0);
    for (const auto& t : v.terms()) {
        std::size_t index = 0;
        for (auto digit : t.config) index = index * lat.local_dim() + digit;
        dense[index] = t.amplitude;
    }
    return dense;
}

}  // namespace arealab
