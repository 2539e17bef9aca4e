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

#include "arealab/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace arealab {

namespace {

constexpr std::size_t kMaxCodeAttempts = 64;
constexpr std::size_t kMaxFingerprintQubits = 20;
constexpr std::uint64_t kPerturbStream = 0x70657274ULL;

std::vector<std::uint64_t> pack(const BitString& x, std::size_t words) {
    std::vector<std::uint64_t> out(words, 0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] > 1) throw std::invalid_argument("bit strings may only hold 0 and 1");
        if (x[j]) out[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return out;
}

void require_length(const BitString& x, std::size_t n) {
    if (x.size() != n) {
        throw std::invalid_argument("bit string has length " + std::to_string(x.size()) + ", code expects " +
                                    std::to_string(n));
    }
}

void require_same_register(const SparseState& a, const SparseState& b) {
    if (a.lattice() != b.lattice()) throw std::invalid_argument("swap test needs registers of equal size");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (std::uint64_t{out[0]} << 32) | out[1];
}

FingerprintCode::FingerprintCode(std::size_t n, std::uint64_t seed, std::size_t expansion, std::size_t sample_pairs)
    : n_(n), m_(n * expansion), seed_(seed), words_((n + 63) / 64) {
    if (n == 0) throw std::invalid_argument("fingerprint code needs n >= 1");
    if (expansion == 0) throw std::invalid_argument("fingerprint code needs expansion >= 1");
    if (sample_pairs == 0) throw std::invalid_argument("fingerprint code needs at least one sampled pair");
    if (fingerprint_qubits(m_) > kMaxFingerprintQubits) {
        throw InfeasibleError("fingerprint register would exceed " + std::to_string(kMaxFingerprintQubits) + " qubits");
    }
    const std::uint64_t tail_mask = n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;
    for (attempts_ = 1; attempts_ <= kMaxCodeAttempts; ++attempts_) {
        effective_seed_ = derive_seed(seed, attempts_ - 1);
        std::mt19937_64 rng(effective_seed_);
        rows_.assign(m_ * words_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t w = 0; w < words_; ++w) rows_[i * words_ + w] = rng();
            rows_[i * words_ + words_ - 1] &= tail_mask;
        }
        min_rel_ = 1.0;
        max_rel_ = 0.0;
        for (std::size_t p = 0; p < sample_pairs; ++p) {
            BitString x = random_bits(n, rng);
            BitString y = random_bits(n, rng);
            while (x == y) y = random_bits(n, rng);
            const double rel = static_cast<double>(hamming_distance(encode(x), encode(y))) / static_cast<double>(m_);
            min_rel_ = std::min(min_rel_, rel);
            max_rel_ = std::max(max_rel_, rel);
        }
        if (min_rel_ >= kMinRelativeDistance && max_rel_ <= kMaxRelativeDistance) return;
    }
    throw std::runtime_error("no code with sampled relative distance in [0.25, 0.75] after " +
                             std::to_string(kMaxCodeAttempts) + " draws");
}

double FingerprintCode::measured_overlap_max() const {
    return std::max(std::abs(1.0 - 2.0 * min_rel_), std::abs(1.0 - 2.0 * max_rel_));
}

bool FingerprintCode::entry(std::size_t row, std::size_t col) const {
    if (row >= m_ || col >= n_) throw std::out_of_range("code matrix index out of range");
    return (rows_[row * words_ + col / 64] >> (col % 64)) & 1;
}

BitString FingerprintCode::encode(const BitString& x) const {
    require_length(x, n_);
    const auto packed = pack(x, words_);
    BitString out(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        unsigned parity = 0;
        for (std::size_t w = 0; w < words_; ++w) parity ^= std::popcount(rows_[i * words_ + w] & packed[w]) & 1u;
        out[i] = static_cast<std::uint8_t>(parity);
    }
    return out;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw std::invalid_argument("bit strings differ in length");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

BitString xor_bits(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw std::invalid_argument("bit strings differ in length");
    BitString out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

BitString random_bits(std::size_t n, std::mt19937_64& rng) {
    BitString out(n);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) word = rng();
        out[i] = (word >> (i % 64)) & 1;
    }
    return out;
}

std::size_t fingerprint_qubits(std::size_t m) {
    if (m == 0) throw std::invalid_argument("fingerprint needs m >= 1");
    return static_cast<std::size_t>(std::bit_width(m - 1)) + 1;
}

SparseState build_fingerprint(const BitString& x, const FingerprintCode& code) {
    const BitString e = code.encode(x);
    const std::size_t m = code.m();
    const std::size_t q = fingerprint_qubits(m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<Term> terms;
    terms.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Config c(q, 0);
        for (std::size_t b = 0; b + 1 < q; ++b) c[b] = (i >> (q - 2 - b)) & 1;
        terms.push_back({std::move(c), Complex(e[i] ? -scale : scale)});
    }
    return SparseState::normalized(SparseVector(Lattice(1, q, 2), std::move(terms)));
}

double swap_test_accept(const SparseState& sigma, const SparseState& tau) {
    require_same_register(sigma, tau);
    // Dividing by the computed norms makes identical registers accept with
    // probability exactly 1 instead of 1 - ulp.
    const double overlap = std::norm(inner_product(sigma, tau));
    const double norms = inner_product(sigma, sigma).real() * inner_product(tau, tau).real();
    return 0.5 + 0.5 * std::clamp(overlap / norms, 0.0, 1.0);
}

double swap_test_circuit_probability(const SparseState& sigma, const SparseState& tau) {
    require_same_register(sigma, tau);
    const std::size_t q = sigma.lattice().site_count();
    const Lattice reg(1, 2 * q + 1, 2);

    std::vector<Term> terms;
    terms.reserve(sigma.support_size() * tau.support_size());
    for (const auto& a : sigma.terms()) {
        for (const auto& b : tau.terms()) {
            Config c;
            c.reserve(2 * q + 1);
            c.push_back(0);
            c.insert(c.end(), a.config.begin(), a.config.end());
            c.insert(c.end(), b.config.begin(), b.config.end());
            terms.push_back({std::move(c), a.amplitude * b.amplitude});
        }
    }
    SparseVector v(reg, std::move(terms));

    const double h = 1.0 / std::sqrt(2.0);
    const LocalOperator hadamard{2, {h, h, h, -h}};
    v = apply_local(v, 0, hadamard);

    std::vector<Term> swapped;
    swapped.reserve(v.support_size());
    for (const auto& t : v.terms()) {
        Config c = t.config;
        if (c[0] == 1) std::swap_ranges(c.begin() + 1, c.begin() + 1 + q, c.begin() + 1 + q);
        swapped.push_back({std::move(c), t.amplitude});
    }
    v = apply_local(SparseVector(reg, std::move(swapped)), 0, hadamard);

    double accept = 0.0;
    for (const auto& t : v.terms()) {
        if (t.config[0] == 0) accept += std::norm(t.amplitude);
    }
    return std::clamp(accept, 0.0, 1.0);
}

std::uint64_t sample_swap_test(const SparseState& sigma, const SparseState& tau, std::uint64_t shots,
                               std::mt19937_64& rng) {
    const double p = swap_test_circuit_probability(sigma, tau);
    std::binomial_distribution<std::uint64_t> outcomes(shots, p);
    return outcomes(rng);
}

double default_threshold(std::size_t repetitions) {
    const double worst = std::pow(0.5 + 0.5 * kOverlapBound * kOverlapBound, static_cast<double>(repetitions));
    return 0.5 * (1.0 + worst);
}

std::size_t minimal_repetitions(double omega_max, double delta) {
    if (!(omega_max >= 0.0 && omega_max < 1.0)) throw std::invalid_argument("overlap bound must lie in [0, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
    const double per_test = 0.5 + 0.5 * omega_max * omega_max;
    std::size_t r = static_cast<std::size_t>(std::ceil(std::log(delta) / std::log(per_test)));
    r = std::max<std::size_t>(r, 1);
    // Guard the ceil against rounding on exact powers.
    while (r > 1 && std::pow(per_test, static_cast<double>(r - 1)) <= delta) --r;
    while (std::pow(per_test, static_cast<double>(r)) > delta) ++r;
    return r;
}

namespace {

ProtocolOutcome run_protocol(const SparseState& hx, const SparseState& hy, const ProtocolOptions& options,
                             double overlap_bound) {
    if (options.repetitions == 0) throw std::invalid_argument("protocol needs repetitions >= 1");
    ProtocolOutcome out;
    out.repetitions = options.repetitions;
    out.mode = options.mode;
    out.qubits_used = options.repetitions * hx.lattice().site_count();
    out.threshold = options.threshold.value_or(default_threshold(options.repetitions));
    if (!(out.threshold > 0.0 && out.threshold <= 1.0)) throw std::invalid_argument("threshold must lie in (0, 1]");

    const double r = static_cast<double>(options.repetitions);
    out.accept_probability = swap_test_accept(hx, hy);
    out.joint_accept_probability = std::pow(out.accept_probability, r);
    out.error_bound = std::pow(0.5 + 0.5 * overlap_bound * overlap_bound, r);

    if (options.mode == ProtocolMode::analytic) {
        out.equal = out.joint_accept_probability >= out.threshold;
        return out;
    }
    for (std::size_t t = 0; t < options.repetitions; ++t) {
        std::mt19937_64 rng(derive_seed(options.seed, t));
        std::bernoulli_distribution accept(out.accept_probability);
        if (accept(rng)) ++out.accepted_tests;
    }
    out.equal = out.accepted_tests == options.repetitions;
    return out;
}

}  // namespace

ProtocolOutcome equality_protocol(const BitString& x, const BitString& y, const FingerprintCode& code,
                                  const ProtocolOptions& options) {
    require_length(x, code.n());
    require_length(y, code.n());
    return run_protocol(build_fingerprint(x, code), build_fingerprint(y, code), options, kOverlapBound);
}

SparseState perturb_state(const SparseState& h, double epsilon, std::mt19937_64& rng) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1)");
    const Lattice& lat = h.lattice();
    const std::size_t n = lat.site_count();
    const std::size_t d = lat.local_dim();
    const std::size_t dim = static_cast<std::size_t>(std::pow(static_cast<double>(d), static_cast<double>(n)) + 0.5);
    if (dim > (std::size_t{1} << kMaxFingerprintQubits)) throw InfeasibleError("register too large to perturb");

    std::normal_distribution<double> normal;
    std::vector<Term> terms;
    terms.reserve(dim);
    Config c(n, 0);
    for (std::size_t k = 0; k < dim; ++k) {
        const double re = normal(rng);
        const double im = normal(rng);
        terms.push_back({c, Complex(re, im)});
        for (std::size_t s = n; s-- > 0;) {
            if (++c[s] < d) break;
            c[s] = 0;
        }
    }
    SparseVector w(lat, std::move(terms));
    w += -inner_product(h, w) * h.vector();
    w *= 1.0 / w.norm();

    SparseVector mixed = std::sqrt(1.0 - epsilon * epsilon) * h.vector();
    mixed += Complex(epsilon) * w;
    return SparseState(std::move(mixed));
}

ProtocolOutcome perturbed_protocol(const BitString& x, const BitString& y, const FingerprintCode& code, double epsilon,
                                   const ProtocolOptions& options) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1)");
    require_length(x, code.n());
    require_length(y, code.n());
    std::mt19937_64 rng(derive_seed(options.seed, kPerturbStream));
    const SparseState hx = perturb_state(build_fingerprint(x, code), epsilon, rng);
    const SparseState hy = perturb_state(build_fingerprint(y, code), epsilon, rng);
    // |<h'x|h'y>| <= |<hx|hy>| + |h'x - hx| + |h'y - hy|, each shift being
    // sqrt(2 - 2 sqrt(1 - eps^2)).
    const double shift = std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(1.0 - epsilon * epsilon)));
    ProtocolOutcome out = run_protocol(hx, hy, options, std::min(1.0, kOverlapBound + 2.0 * shift));
    out.epsilon = epsilon;
    return out;
}

EpsilonScan tolerated_epsilon(const FingerprintCode& code, std::size_t repetitions, std::size_t pairs,
                              std::uint64_t seed, const std::vector<double>& grid) {
    if (grid.empty() || !std::is_sorted(grid.begin(), grid.end())) {
        throw std::invalid_argument("epsilon grid must be non-empty and ascending");
    }
    EpsilonScan scan;
    scan.grid = grid;
    scan.pairs = pairs;
    std::mt19937_64 rng(derive_seed(seed, 0));
    std::vector<std::pair<BitString, BitString>> inputs;
    for (std::size_t p = 0; p < pairs; ++p) {
        BitString x = random_bits(code.n(), rng);
        BitString y = random_bits(code.n(), rng);
        while (x == y) y = random_bits(code.n(), rng);
        inputs.emplace_back(x, y);
    }
    for (double eps : grid) {
        bool ok = true;
        for (std::size_t p = 0; p < inputs.size() && ok; ++p) {
            ProtocolOptions options;
            options.repetitions = repetitions;
            options.seed = derive_seed(seed, p + 1);
            const auto& [x, y] = inputs[p];
            ok = perturbed_protocol(x, x, code, eps, options).equal && !perturbed_protocol(x, y, code, eps, options).equal;
        }
        if (!ok) {
            scan.first_failure = eps;
            break;
        }
        scan.tolerated = eps;
    }
    return scan;
}

CostReport cost_report(std::uint64_t n, std::size_t repetitions) {
    if (n < 2) throw std::invalid_argument("cost report needs n >= 2");
    CostReport rep;
    rep.n = n;
    rep.m = 8 * n;
    rep.repetitions = repetitions == 0 ? minimal_repetitions(kOverlapBound, kDefaultDelta) : repetitions;
    rep.qubits_per_fingerprint = fingerprint_qubits(rep.m);
    rep.quantum_qubits = rep.repetitions * rep.qubits_per_fingerprint;
    rep.classical_reference_bits = std::sqrt(static_cast<double>(n));
    const double q = static_cast<double>(rep.qubits_per_fingerprint);
    rep.description_bits = q * q;
    rep.quantum_to_classical_ratio = static_cast<double>(rep.quantum_qubits) / rep.classical_reference_bits;
    rep.description_beats_classical_bound = rep.description_bits < rep.classical_reference_bits;
    return rep;
}

}  // namespace arealab
