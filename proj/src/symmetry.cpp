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

#include "qcomplex/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qcomplex {

namespace {

/// H commutes with basis permutation P iff H(p(i), p(j)) == H(i, j) for all i, j.
bool commutes(const Matrix& h, const Permutation& p, double tol) {
    const auto d = h.rows();
    for (Eigen::Index j = 0; j < d; ++j) {
        const auto pj = static_cast<Eigen::Index>(p[static_cast<std::size_t>(j)]);
        for (Eigen::Index i = 0; i < d; ++i) {
            const auto pi = static_cast<Eigen::Index>(p[static_cast<std::size_t>(i)]);
            if (std::abs(h(pi, pj) - h(i, j)) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_unit_phase(Complex z) {
    return z == Complex(1, 0) || z == Complex(-1, 0) || z == Complex(0, 1) || z == Complex(0, -1);
}

}  // namespace

bool CommutantGroup::contains(const Permutation& eta) const {
    return std::binary_search(members.begin(), members.end(), eta);
}

bool CommutantGroup::is_group() const {
    if (members.empty()) {
        return false;
    }
    for (const auto& a : members) {
        if (!contains(inverse(a))) {
            return false;
        }
        for (const auto& b : members) {
            if (!contains(compose(a, b))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> CommutantGroup::orbit(std::size_t index) const {
    std::set<std::size_t> out;
    for (const auto& m : basis_maps) {
        out.insert(m[index]);
    }
    return {out.begin(), out.end()};
}

std::vector<double> column_cross_norms(const OperatorMatrix& a) {
    std::vector<double> out(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        out[j] = vector_cross_norm(a.entries().col(static_cast<Eigen::Index>(j)));
    }
    return out;
}

bool is_equilibrium(const StateVector& psi, const OperatorMatrix& a, double tol, double support_threshold) {
    if (psi.dim() != a.dim()) {
        throw Error("dimension_mismatch", "state and operator dimensions differ");
    }
    const auto norms = column_cross_norms(a);
    std::optional<double> ref;
    for (std::size_t j : psi.support(support_threshold)) {
        if (!ref) {
            ref = norms[j];
        } else if (std::abs(norms[j] - *ref) > tol) {
            return false;
        }
    }
    return true;
}

CommutantGroup commutant(const OperatorMatrix& h, int n, double tol) {
    if (n < 1 || n > kMaxCommutantQubits) {
        throw Error("too_many_qubits", "commutant enumeration supports 1 <= n <= " +
                                           std::to_string(kMaxCommutantQubits) + ", got " + std::to_string(n));
    }
    if (h.dim() != (std::size_t{1} << n)) {
        throw Error("dimension_mismatch", "operator is not a " + std::to_string(n) + "-qubit matrix");
    }
    CommutantGroup g;
    g.n_qubits = n;
    Permutation eta = identity_permutation(static_cast<std::size_t>(n));
    do {
        Permutation map = qubit_permutation_basis_map(eta, n);
        if (commutes(h.entries(), map, tol)) {
            g.members.push_back(eta);
            g.basis_maps.push_back(std::move(map));
        }
    } while (std::next_permutation(eta.begin(), eta.end()));
    return g;
}

ConnectivityReport is_connected(const StateVector& psi, const OperatorMatrix& h, double tol) {
    const int n = h.n_qubits();
    if (n <= 0) {
        throw Error("not_qubit_structured", "connectivity requires a qubit-structured Hamiltonian");
    }
    return is_connected(psi, h, commutant(h, n, tol), tol);
}

ConnectivityReport is_connected(const StateVector& psi, const OperatorMatrix& h, const CommutantGroup& group,
                                double tol) {
    if (psi.dim() != h.dim()) {
        throw Error("dimension_mismatch", "state and Hamiltonian dimensions differ");
    }
    ConnectivityReport r;
    r.support = psi.support();
    bool all_pairs = true;
    for (std::size_t i : r.support) {
        for (std::size_t j : r.support) {
            bool found = false;
            for (std::size_t k = 0; k < group.order(); ++k) {
                if (group.basis_maps[k][i] == j) {
                    r.witness.emplace(IndexPair{i, j}, group.members[k]);
                    found = true;
                    break;
                }
            }
            if (!found && all_pairs) {
                r.missing_pair = IndexPair{i, j};
                all_pairs = false;
            }
        }
    }
    r.h_psi_nonzero = apply(h, psi).norm() > tol;
    r.connected = all_pairs && r.h_psi_nonzero && !r.support.empty();
    return r;
}

LemmaReport lemma_column_permutation_check(const StateVector& psi, const OperatorMatrix& h,
                                           const OperatorMatrix& m, double tol) {
    if (m.dim() != h.dim()) {
        throw Error("dimension_mismatch", "matrix and Hamiltonian dimensions differ");
    }
    const int n = h.n_qubits();
    const ConnectivityReport conn = is_connected(psi, h, tol);
    if (!conn.connected) {
        std::string ctx;
        if (conn.missing_pair) {
            ctx = "(" + std::to_string(conn.missing_pair->first) + "," + std::to_string(conn.missing_pair->second) + ")";
        }
        throw Error("not_connected", "state is not connected with respect to the Hamiltonian", ctx);
    }
    LemmaReport report;
    report.ok = true;
    const Matrix& e = m.entries();
    for (const auto& [pair, eta] : conn.witness) {
        const auto [j1, j2] = pair;
        Permutation reorder = qubit_permutation_basis_map(eta, n);
        double dev = 0.0;
        for (std::size_t i = 0; i < m.dim(); ++i) {
            dev = std::max(dev, std::abs(e(static_cast<Eigen::Index>(reorder[i]), static_cast<Eigen::Index>(j2)) -
                                         e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j1))));
        }
        report.max_deviation = std::max(report.max_deviation, dev);
        if (dev > tol && report.ok) {
            report.ok = false;
            report.failing_pair = pair;
        }
        report.reorderings.emplace(pair, std::move(reorder));
    }
    return report;
}

StateVector build_connected_state(const OperatorMatrix& h, int n, std::size_t seed,
                                  const std::vector<Complex>& pattern, double tol) {
    const CommutantGroup g = commutant(h, n, tol);
    if (seed >= h.dim()) {
        throw Error("index_out_of_range", "seed index outside the basis");
    }
    const auto orbit = g.orbit(seed);
    if (!pattern.empty() && pattern.size() != orbit.size()) {
        throw Error("invalid_argument", "pattern length " + std::to_string(pattern.size()) +
                                            " does not match orbit size " + std::to_string(orbit.size()));
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(h.dim()));
    const double amp = 1.0 / std::sqrt(static_cast<double>(orbit.size()));
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        const Complex phase = pattern.empty() ? Complex(1.0) : pattern[k];
        if (!is_unit_phase(phase)) {
            throw Error("invalid_argument", "pattern entries must be one of +1, -1, +i, -i");
        }
        v(static_cast<Eigen::Index>(orbit[k])) = amp * phase;
    }
    StateVector psi(std::move(v), n);
    // Larger orbits can still give H|psi> = 0 for some patterns (the singlet of
    // sx(x)I + I(x)sx); such states are returned and is_connected reports them.
    if (orbit.size() == 1 && apply(h, psi).norm() <= tol) {
        throw Error("h_psi_zero", "seed is a fixed point annihilated by H");
    }
    return psi;
}

}  // namespace qcomplex
