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

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qcomplex/core.hpp"

namespace qcomplex {

/// Qubit permutations commuting with a Hamiltonian, listed in lexicographic order.
struct CommutantGroup {
    int n_qubits = 0;
    std::vector<Permutation> members;      ///< qubit permutations eta
    std::vector<Permutation> basis_maps;   ///< induced basis permutations, same order

    [[nodiscard]] std::size_t order() const noexcept { return members.size(); }
    [[nodiscard]] bool contains(const Permutation& eta) const;
    /// Closure under composition and inverse.
    [[nodiscard]] bool is_group() const;
    /// Basis indices reachable from `index` under the group, ascending.
    [[nodiscard]] std::vector<std::size_t> orbit(std::size_t index) const;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

struct ConnectivityReport {
    bool connected = false;
    std::vector<std::size_t> support;
    /// For each ordered support pair (i, j): a commutant member eta with eta(i) = j.
    std::map<IndexPair, Permutation> witness;
    bool h_psi_nonzero = false;
    /// First ordered pair with no connecting permutation, if any.
    std::optional<IndexPair> missing_pair;
};

struct LemmaReport {
    bool ok = false;
    /// For each ordered support pair (j1, j2): basis reordering r with M(r(i), j2) = M(i, j1).
    std::map<IndexPair, Permutation> reorderings;
    std::optional<IndexPair> failing_pair;
    double max_deviation = 0.0;
};

[[nodiscard]] std::vector<double> column_cross_norms(const OperatorMatrix& a);

[[nodiscard]] bool is_equilibrium(const StateVector& psi, const OperatorMatrix& a, double tol = kDefaultTol,
                                  double support_threshold = kSupportThreshold);

inline constexpr int kMaxCommutantQubits = 8;

[[nodiscard]] CommutantGroup commutant(const OperatorMatrix& h, int n, double tol = kDefaultTol);

[[nodiscard]] ConnectivityReport is_connected(const StateVector& psi, const OperatorMatrix& h,
                                              double tol = kDefaultTol);
[[nodiscard]] ConnectivityReport is_connected(const StateVector& psi, const OperatorMatrix& h,
                                              const CommutantGroup& group, double tol = kDefaultTol);

/// Checks that the support columns of `m` are reorderings of one another via the
/// commutant of `h`. `m` is H itself or exp(-iHt/hbar). Throws `not_connected`
/// when psi is not connected with respect to `h`.
[[nodiscard]] LemmaReport lemma_column_permutation_check(const StateVector& psi, const OperatorMatrix& h,
                                                         const OperatorMatrix& m, double tol = kDefaultTol);

/// Equal-modulus state on the commutant orbit of `seed`. `pattern` gives the
/// phase of each orbit element in ascending index order, each from {+1,-1,+i,-i};
/// an empty pattern means all +1. Throws `h_psi_zero` only for a fixed-point
/// seed annihilated by H.
[[nodiscard]] StateVector build_connected_state(const OperatorMatrix& h, int n, std::size_t seed,
                                                const std::vector<Complex>& pattern = {},
                                                double tol = kDefaultTol);

}  // namespace qcomplex
