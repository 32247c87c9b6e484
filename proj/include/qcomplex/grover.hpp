// Copyright 2026 The qcomplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcomplex/core.hpp"

namespace qcomplex::grover {

/// How a run decides it has found the target.
enum class SuccessCriterion {
    /// |beta|^2 >= threshold (default 0.5).
    probability,
    /// |beta| exceeds the largest off-target modulus by at least 1/sqrt(N).
    rough_jump,
};

struct GroverConfig {
    int n = 1;
    std::size_t target = 0;
    /// Empty means the optimal count floor(pi / (4 arcsin(2^{-n/2}))).
    std::optional<int> iterations;
    /// Amplitudes with modulus strictly below this are dropped after each iteration; 0 disables.
    double eps_min = 0.0;
    SuccessCriterion criterion = SuccessCriterion::probability;
    double success_threshold = 0.5;
    /// Relative multiplicative amplitude noise applied after each iteration; 0 disables.
    double jitter = 0.0;
    std::uint64_t jitter_seed = 0;
};

struct IterationRecord {
    int iter = 0;
    Complex beta;               ///< target amplitude
    double alpha_modulus = 0;   ///< largest off-target modulus
    std::size_t support_size = 0;
    std::size_t dropped = 0;    ///< components zeroed by truncation in this iteration
    bool renormalized = false;
    bool success = false;
};

struct RunRecord {
    GroverConfig config;
    int iterations = 0;
    std::vector<IterationRecord> steps;  ///< steps[0] is the initial uniform state
    double final_success_probability = 0.0;
    std::optional<int> iterations_to_success;
    bool all_dropped = false;
    std::optional<int> all_dropped_at;
};

struct TruncationResult {
    StateVector state;       ///< renormalized, or the input unchanged when everything was dropped
    std::size_t dropped = 0; ///< nonzero components that were zeroed
    bool all_dropped = false;
};

[[nodiscard]] int optimal_iterations(int n);
/// t0 = arcsin(2^{-n/2}).
[[nodiscard]] double base_angle(int n);

/// cos(t)/sqrt(N-1) on every non-target basis state, sin(t) on the target.
[[nodiscard]] StateVector build_gsa_state(int n, std::size_t target, double t);

/// Oracle phase flip on the target followed by inversion about the mean.
[[nodiscard]] StateVector gsa_step(const StateVector& psi, std::size_t target);

[[nodiscard]] TruncationResult truncate_renormalize(const StateVector& psi, double eps_min);

inline constexpr int kMaxGroverQubits = 20;

[[nodiscard]] RunRecord run_gsa(const GroverConfig& cfg);

struct QEstimateRow {
    int n = 0;
    double uniform_amplitude = 0.0;   ///< 2^{-n/2}
    bool predicted_breakdown = false; ///< uniform amplitude < eps_min
    int iterations = 0;
    std::optional<int> truncated_success_iter;
    std::optional<int> untruncated_success_iter;
    double truncated_final_probability = 0.0;
    double untruncated_final_probability = 0.0;
    bool all_dropped = false;
    /// Truncated run differs from the untruncated one (success iteration, outcome or final probability).
    bool deviates = false;
};

struct QEstimate {
    double eps_min = 0.0;
    std::vector<QEstimateRow> rows;
    /// Smallest n in range whose uniform amplitude falls below eps_min.
    std::optional<int> q_hat;
    /// -2 log2(eps_min), the Q for which eps_min = 2^{-Q/2}.
    std::optional<double> q_from_eps;
};

struct EstimateOptions {
    SuccessCriterion criterion = SuccessCriterion::probability;
    double success_threshold = 0.5;
    std::size_t target = 0;
};

[[nodiscard]] QEstimate estimate_q(int n_min, int n_max, double eps_min, EstimateOptions opts = {});

}  // namespace qcomplex::grover
