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
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qcomplex/core.hpp"

namespace qcomplex {

/// Partition of an n-qubit register into independent blocks.
///
/// For Hamiltonians each block carries a factor operator with
/// H = sum_b factor_b embedded on its qubits; for states each block carries a
/// factor state with psi = tensor product of factors, up to qubit reordering.
/// Blocks are sorted by their smallest qubit and list qubits ascending.
struct BlockDecomposition {
    int n_qubits = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<OperatorMatrix> operator_factors;
    std::vector<StateVector> state_factors;

    /// Size of the largest block; the naive complexity.
    [[nodiscard]] int nu() const;
    /// The largest block (first one among equally sized).
    [[nodiscard]] const std::vector<int>& kernel() const;
};

/// Trace-split factors of a reducible Hamiltonian: H = h1 (x) I + I (x) h2,
/// h1 acting on the `part` qubits (ascending), h2 on the complement.
struct HamiltonianSplit {
    OperatorMatrix h1;
    OperatorMatrix h2;
    double residual = 0.0;
};

/// Residual of the trace split even when it fails, for diagnostics.
[[nodiscard]] HamiltonianSplit trace_split(const OperatorMatrix& h, QubitSubset part);
[[nodiscard]] std::optional<HamiltonianSplit> is_reducible_h(const OperatorMatrix& h, QubitSubset part,
                                                             double tol = kDefaultTol);
[[nodiscard]] BlockDecomposition finest_blocks_h(const OperatorMatrix& h, double tol = kDefaultTol);
/// Sum of the block factors embedded back on the full register.
[[nodiscard]] OperatorMatrix reassemble_h(const BlockDecomposition& d);

struct StateSplit {
    StateVector psi1;  ///< on the `part` qubits
    StateVector psi2;  ///< on the complement
    double second_singular_value = 0.0;
};

[[nodiscard]] std::optional<StateSplit> factor_state(const StateVector& psi, QubitSubset part,
                                                     double tol = kDefaultTol);

struct NaiveComplexity {
    int nu = 0;
    BlockDecomposition decomposition;
};

[[nodiscard]] NaiveComplexity naive_complexity_state(const StateVector& psi, double tol = kDefaultTol);
[[nodiscard]] StateVector reassemble_state(const BlockDecomposition& d);

/// Naive complexity of a Hamiltonian: size of its kernel.
[[nodiscard]] int naive_complexity_h(const OperatorMatrix& h, double tol = kDefaultTol);

enum class SearchStrategy { exhaustive, heuristic_library };

[[nodiscard]] std::string_view to_string(SearchStrategy s) noexcept;
[[nodiscard]] SearchStrategy parse_strategy(std::string_view s);

/// Configuration of the heuristic permutation library: CNOT circuits
/// (every ordered control/target pair) up to `max_depth` gates. Qubit
/// relabellings are not enumerated since they leave nu unchanged. Depth -1 means "n".
struct HeuristicOptions {
    int max_depth = -1;
    /// Distinct circuits kept per depth once the frontier grows beyond this.
    std::size_t beam_width = 2048;
};

struct ComplexityReport {
    int naive = 0;
    int quantum = 0;
    Permutation witness;
    SearchStrategy strategy = SearchStrategy::exhaustive;
    bool certified = false;
    std::size_t candidates_evaluated = 0;
};

inline constexpr std::size_t kMaxExhaustiveDim = 8;

[[nodiscard]] ComplexityReport quantum_complexity_state(const StateVector& psi, SearchStrategy strategy,
                                                        double tol = kDefaultTol, HeuristicOptions opts = {});
[[nodiscard]] ComplexityReport quantum_complexity_h(const OperatorMatrix& h, SearchStrategy strategy,
                                                    double tol = kDefaultTol, HeuristicOptions opts = {});

/// Largest accuracy A with C * A <= Q.
[[nodiscard]] long long accuracy_budget(long long complexity, long long q);
/// Smallest nonzero amplitude 2^{-Q/2}.
[[nodiscard]] double epsilon_from_q(int q);
/// Number of coherently describable basis states 1/eps^2.
[[nodiscard]] double coherent_state_count(double epsilon);

/// Worker count for parallel searches: QCOMPLEX_THREADS if set, else hardware concurrency.
[[nodiscard]] unsigned worker_count();

}  // namespace qcomplex
