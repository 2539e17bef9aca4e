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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arealab/sparse_state.hpp"

namespace arealab {

/// One bit per entry, values 0 or 1.
using BitString = std::vector<std::uint8_t>;

/// Accepted codes keep every sampled relative distance in this window, which
/// bounds |<h(x)|h(y)>| by 0.5 on the sampled pairs.
inline constexpr double kMinRelativeDistance = 0.25;
inline constexpr double kMaxRelativeDistance = 0.75;
inline constexpr double kOverlapBound = 0.5;
/// Target false-"equal" probability used when no repetition count is given.
inline constexpr double kDefaultDelta = 1e-3;

/// Random binary linear code E: {0,1}^n -> {0,1}^m, m = expansion * n.
class FingerprintCode {
   public:
    /// Draws generator matrices from seeds derived from `seed` until one
    /// keeps the sampled relative distances of E(x) xor E(y) within
    /// [0.25, 0.75]; throws std::runtime_error after 64 rejected draws.
    FingerprintCode(std::size_t n, std::uint64_t seed, std::size_t expansion = 8, std::size_t sample_pairs = 256);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    std::uint64_t seed() const { return seed_; }
    /// Seed of the accepted draw, derive_seed(seed(), attempts() - 1).
    std::uint64_t effective_seed() const { return effective_seed_; }
    /// Attempts needed before a matrix passed the distance screen (>= 1).
    std::size_t attempts() const { return attempts_; }
    double min_relative_distance() const { return min_rel_; }
    double max_relative_distance() const { return max_rel_; }
    /// max |1 - 2 delta_rel| over the sampled pairs.
    double measured_overlap_max() const;

    bool entry(std::size_t row, std::size_t col) const;
    BitString encode(const BitString& x) const;

   private:
    std::size_t n_;
    std::size_t m_;
    std::uint64_t seed_;
    std::uint64_t effective_seed_ = 0;
    std::size_t attempts_ = 0;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
    double min_rel_ = 0.0;
    double max_rel_ = 0.0;
};

std::size_t hamming_distance(const BitString& a, const BitString& b);
BitString xor_bits(const BitString& a, const BitString& b);
BitString random_bits(std::size_t n, std::mt19937_64& rng);
/// Independent seed for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// ceil(log2 m) index qubits plus one flag qubit.
std::size_t fingerprint_qubits(std::size_t m);

/// |h(x)> = m^{-1/2} sum_i (-1)^{E(x)_i} |i>|0>, on fingerprint_qubits(m)
/// qubits with the index register most significant first. Overlaps satisfy
/// <h(x)|h(y)> = 1 - 2 hamming(E(x), E(y)) / m.
SparseState build_fingerprint(const BitString& x, const FingerprintCode& code);

/// Born-rule accept probability of the controlled-swap test:
/// 1/2 + |<sigma|tau>|^2 / 2.
double swap_test_accept(const SparseState& sigma, const SparseState& tau);

/// Accept probability read off a simulated Hadamard / controlled-swap /
/// Hadamard circuit on |0>|sigma>|tau>. Independent of the closed form above.
double swap_test_circuit_probability(const SparseState& sigma, const SparseState& tau);

/// Shots of the simulated circuit; returns the number of accepting outcomes.
std::uint64_t sample_swap_test(const SparseState& sigma, const SparseState& tau, std::uint64_t shots,
                               std::mt19937_64& rng);

enum class ProtocolMode { analytic, sampling };

struct ProtocolOptions {
    std::size_t repetitions = 1;
    /// Decision threshold on the joint accept probability; defaults to the
    /// midpoint between 1 and ((1 + kOverlapBound^2)/2)^repetitions.
    std::optional<double> threshold;
    ProtocolMode mode = ProtocolMode::analytic;
    std::uint64_t seed = 0;
};

struct ProtocolOutcome {
    bool equal = false;
    /// Single swap-test accept probability, in [1/2, 1].
    double accept_probability = 0.0;
    /// accept_probability^repetitions.
    double joint_accept_probability = 0.0;
    double threshold = 0.0;
    std::size_t qubits_used = 0;
    std::size_t repetitions = 0;
    ProtocolMode mode = ProtocolMode::analytic;
    /// Sampling mode only: how many of the swap tests accepted.
    std::size_t accepted_tests = 0;
    /// Perturbed runs only.
    double epsilon = 0.0;
    /// Upper bound on the false-"equal" probability for unequal inputs.
    double error_bound = 0.0;
};

double default_threshold(std::size_t repetitions);

/// Repeated swap tests on the two fingerprints. Analytic mode decides
/// "equal" iff the joint accept probability reaches the threshold; sampling
/// mode draws each test and decides "equal" iff all accept.
ProtocolOutcome equality_protocol(const BitString& x, const BitString& y, const FingerprintCode& code,
                                  const ProtocolOptions& options = {});

/// Smallest r with ((1 + omega^2)/2)^r <= delta.
std::size_t minimal_repetitions(double omega_max, double delta);

/// sqrt(1 - eps^2) |h> + eps |w> with w a seeded random unit vector
/// orthogonal to h; exactly eps from h in trace distance.
SparseState perturb_state(const SparseState& h, double epsilon, std::mt19937_64& rng);

/// Runs the protocol on independently perturbed fingerprints. Throws unless
/// 0 <= epsilon < 1.
ProtocolOutcome perturbed_protocol(const BitString& x, const BitString& y, const FingerprintCode& code, double epsilon,
                                   const ProtocolOptions& options = {});

struct EpsilonScan {
    std::vector<double> grid;
    std::size_t pairs = 0;
    /// Largest grid value below the first one at which some sampled pair was
    /// decided wrongly; the full grid maximum if none was.
    double tolerated = 0.0;
    std::optional<double> first_failure;
};

/// Empirical robustness: runs the analytic perturbed protocol on `pairs`
/// seeded equal pairs and as many unequal pairs for each epsilon of the
/// ascending grid.
EpsilonScan tolerated_epsilon(const FingerprintCode& code, std::size_t repetitions, std::size_t pairs,
                              std::uint64_t seed, const std::vector<double>& grid);

struct CostReport {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::size_t repetitions = 0;
    std::size_t qubits_per_fingerprint = 0;
    /// repetitions * qubits_per_fingerprint.
    std::size_t quantum_qubits = 0;
    /// sqrt(n), the classical lower-bound scaling with its constant set to 1.
    double classical_reference_bits = 0.0;
    /// qubits_per_fingerprint^2: a degree-2 polynomial description of each
    /// fingerprint, constant 1.
    double description_bits = 0.0;
    double quantum_to_classical_ratio = 0.0;
    bool description_beats_classical_bound = false;
    std::string constant_convention = "Omega constant of sqrt(n) and polynomial constant normalized to 1";
};

/// Throws std::invalid_argument if n < 2. repetitions = 0 picks
/// minimal_repetitions(kOverlapBound, kDefaultDelta).
CostReport cost_report(std::uint64_t n, std::size_t repetitions = 0);

}  // namespace arealab
