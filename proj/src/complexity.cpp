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

#include "qcomplex/complexity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <thread>

#include <Eigen/SVD>

namespace qcomplex {

namespace {

/// Splits full-register basis indices into (part bits, complement bits), each
/// read MSB-first in ascending qubit order.
struct IndexSplit {
    int n = 0;
    std::size_t d1 = 1;
    std::size_t d2 = 1;
    std::vector<std::size_t> a;  // part coordinate of each full index
    std::vector<std::size_t> b;  // complement coordinate of each full index

    IndexSplit(int n_qubits, QubitSubset part) : n(n_qubits) {
        const std::size_t dim = std::size_t{1} << n;
        d1 = std::size_t{1} << part.size();
        d2 = dim / d1;
        a.resize(dim);
        b.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            std::size_t aj = 0;
            std::size_t bj = 0;
            for (int q = 0; q < n; ++q) {
                const auto bit = static_cast<std::size_t>(bit_of(j, q, n));
                if (part.contains(q)) {
                    aj = (aj << 1) | bit;
                } else {
                    bj = (bj << 1) | bit;
                }
            }
            a[j] = aj;
            b[j] = bj;
        }
    }

    [[nodiscard]] std::size_t dim() const { return a.size(); }
};

void require_qubits(int n, const char* what) {
    if (n <= 0) {
        throw Error("not_qubit_structured", std::string(what) + " requires a qubit-structured input");
    }
}

void require_proper(QubitSubset part, int n) {
    if (!part.is_proper(n)) {
        throw Error("invalid_partition", "qubit subset must be a proper non-empty subset of the register");
    }
}

/// Masks with popcount 1..m/2 in increasing size then increasing value; at
/// exactly half size only masks containing local qubit 0 so each bipartition appears once.
std::vector<std::uint32_t> bipartition_masks(int m) {
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (1U << m) - 1U;
    const std::uint32_t first = 1U << (m - 1);  // local qubit 0 is the MSB position in mask bit order
    for (int s = 1; 2 * s <= m; ++s) {
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            if (std::popcount(mask) != s) {
                continue;
            }
            if (2 * s == m && !(mask & first)) {
                continue;
            }
            out.push_back(mask);
        }
    }
    return out;
}

/// Local qubit q is mask bit (m-1-q) so that numeric order tracks lexicographic subset order.
QubitSubset subset_from_local_mask(std::uint32_t mask, int m) {
    QubitSubset s;
    for (int q = 0; q < m; ++q) {
        if ((mask >> (m - 1 - q)) & 1U) {
            s.mask |= 1U << q;
        }
    }
    return s;
}

std::vector<int> select(const std::vector<int>& labels, QubitSubset part, bool inside) {
    std::vector<int> out;
    for (std::size_t q = 0; q < labels.size(); ++q) {
        if (part.contains(static_cast<int>(q)) == inside) {
            out.push_back(labels[q]);
        }
    }
    return out;
}

void sort_blocks(BlockDecomposition& d) {
    std::vector<std::size_t> order(d.blocks.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        order[k] = k;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d.blocks[x] < d.blocks[y]; });
    BlockDecomposition sorted;
    sorted.n_qubits = d.n_qubits;
    for (std::size_t k : order) {
        sorted.blocks.push_back(d.blocks[k]);
        if (!d.operator_factors.empty()) {
            sorted.operator_factors.push_back(d.operator_factors[k]);
        }
        if (!d.state_factors.empty()) {
            sorted.state_factors.push_back(d.state_factors[k]);
        }
    }
    d = std::move(sorted);
}

void split_h_recursive(const OperatorMatrix& h, const std::vector<int>& labels, double tol, BlockDecomposition& out) {
    const int m = static_cast<int>(labels.size());
    if (m > 1) {
        for (std::uint32_t mask : bipartition_masks(m)) {
            const QubitSubset part = subset_from_local_mask(mask, m);
            if (auto split = is_reducible_h(h, part, tol)) {
                split_h_recursive(split->h1, select(labels, part, true), tol, out);
                split_h_recursive(split->h2, select(labels, part, false), tol, out);
                return;
            }
        }
    }
    out.blocks.push_back(labels);
    out.operator_factors.push_back(h);
}

void split_state_recursive(const StateVector& psi, const std::vector<int>& labels, double tol,
                           BlockDecomposition& out) {
    const int m = static_cast<int>(labels.size());
    if (m > 1) {
        for (std::uint32_t mask : bipartition_masks(m)) {
            const QubitSubset part = subset_from_local_mask(mask, m);
            if (auto split = factor_state(psi, part, tol)) {
                split_state_recursive(split->psi1, select(labels, part, true), tol, out);
                split_state_recursive(split->psi2, select(labels, part, false), tol, out);
                return;
            }
        }
    }
    out.blocks.push_back(labels);
    out.state_factors.push_back(psi);
}

QubitSubset subset_of(const std::vector<int>& qubits) {
    QubitSubset s;
    for (int q : qubits) {
        s.mask |= 1U << q;
    }
    return s;
}

/// Secondary ranking within equal nu: more blocks is better.
struct Score {
    int nu = std::numeric_limits<int>::max();
    int blocks = 0;

    [[nodiscard]] bool better_than(const Score& o) const {
        return nu != o.nu ? nu < o.nu : blocks > o.blocks;
    }
};

using Objective = std::function<Score(const Permutation&)>;

struct Best {
    int nu = std::numeric_limits<int>::max();
    Permutation perm;

    void offer(int candidate_nu, const Permutation& p) {
        if (candidate_nu < nu || (candidate_nu == nu && p < perm)) {
            nu = candidate_nu;
            perm = p;
        }
    }
};

/// Enumerates all dim! permutations; each worker handles a contiguous
/// lexicographic slice (fixed first element), so the lexicographically first
/// minimizer of each slice is found and the combine is schedule-independent.
ComplexityReport exhaustive_search(std::size_t dim, const Objective& objective) {
    if (dim > kMaxExhaustiveDim) {
        throw Error("search_too_large", "exhaustive permutation search is limited to dim <= " +
                                            std::to_string(kMaxExhaustiveDim) + ", got " + std::to_string(dim));
    }
    std::vector<Best> slice_best(dim);
    std::vector<std::size_t> slice_count(dim, 0);
    std::atomic<std::size_t> next{0};
    // Smallest slice index known to reach nu == 1; later slices cannot win.
    std::atomic<std::size_t> floor_slice{dim};

    auto worker = [&] {
        for (std::size_t f = next++; f < dim; f = next++) {
            if (f > floor_slice.load()) {
                continue;
            }
            Permutation p(dim);
            p[0] = f;
            for (std::size_t k = 1, v = 0; k < dim; ++v) {
                if (v != f) {
                    p[k++] = v;
                }
            }
            Best& best = slice_best[f];
            do {
                ++slice_count[f];
                const int nu = objective(p).nu;
                best.offer(nu, p);
                if (nu == 1) {
                    std::size_t cur = floor_slice.load();
                    while (f < cur && !floor_slice.compare_exchange_weak(cur, f)) {
                    }
                    break;
                }
            } while (std::next_permutation(p.begin() + 1, p.end()) && f <= floor_slice.load());
        }
    };

    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(dim));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }

    Best overall;
    ComplexityReport report;
    for (std::size_t f = 0; f < dim; ++f) {
        report.candidates_evaluated += slice_count[f];
        if (!slice_best[f].perm.empty()) {
            overall.offer(slice_best[f].nu, slice_best[f].perm);
        }
    }
    report.quantum = overall.nu;
    report.witness = overall.perm;
    report.strategy = SearchStrategy::exhaustive;
    report.certified = true;
    return report;
}

/// Beam search over CNOT circuits. Qubit relabelling leaves nu unchanged and a
/// CNOT circuit conjugated by a qubit permutation is again a CNOT circuit, so
/// this covers the compositions of both families.
ComplexityReport heuristic_search(int n, const Objective& objective, HeuristicOptions opts) {
    const std::size_t dim = std::size_t{1} << n;
    const int depth = opts.max_depth < 0 ? n : opts.max_depth;

    std::vector<Permutation> gates;
    for (int c = 0; c < n; ++c) {
        for (int t = 0; t < n; ++t) {
            if (c != t) {
                gates.push_back(gates::cnot_map(c, t, n));
            }
        }
    }

    ComplexityReport report;
    report.strategy = SearchStrategy::heuristic_library;
    report.certified = false;

    Best best;
    const Permutation start = identity_permutation(dim);
    best.offer(objective(start).nu, start);
    report.candidates_evaluated = 1;

    std::set<Permutation> visited{start};
    std::vector<Permutation> frontier{start};
    for (int level = 0; level < depth && best.nu > 1 && !frontier.empty(); ++level) {
        std::vector<std::pair<Score, Permutation>> layer;
        for (const auto& p : frontier) {
            for (const auto& g : gates) {
                Permutation q = compose(g, p);
                if (!visited.insert(q).second) {
                    continue;
                }
                const Score s = objective(q);
                ++report.candidates_evaluated;
                best.offer(s.nu, q);
                layer.emplace_back(s, std::move(q));
            }
        }
        std::sort(layer.begin(), layer.end(), [](const auto& x, const auto& y) {
            if (x.first.better_than(y.first)) return true;
            if (y.first.better_than(x.first)) return false;
            return x.second < y.second;
        });
        if (layer.size() > opts.beam_width) {
            layer.resize(opts.beam_width);
        }
        frontier.clear();
        for (auto& [score, perm] : layer) {
            frontier.push_back(std::move(perm));
        }
    }
    report.quantum = best.nu;
    report.witness = best.perm;
    return report;
}

}  // namespace

int BlockDecomposition::nu() const {
    int nu = 0;
    for (const auto& b : blocks) {
        nu = std::max(nu, static_cast<int>(b.size()));
    }
    return nu;
}

const std::vector<int>& BlockDecomposition::kernel() const {
    if (blocks.empty()) {
        throw Error("empty_decomposition", "decomposition has no blocks");
    }
    const std::vector<int>* best = &blocks.front();
    for (const auto& b : blocks) {
        if (b.size() > best->size()) {
            best = &b;
        }
    }
    return *best;
}

HamiltonianSplit trace_split(const OperatorMatrix& h, QubitSubset part) {
    const int n = h.n_qubits();
    require_qubits(n, "reducibility test");
    require_proper(part, n);
    const IndexSplit split(n, part);
    const auto d1 = static_cast<Eigen::Index>(split.d1);
    const auto d2 = static_cast<Eigen::Index>(split.d2);
    const Matrix& m = h.entries();

    Matrix t1 = Matrix::Zero(d1, d1);
    Matrix t2 = Matrix::Zero(d2, d2);
    const std::size_t dim = split.dim();
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            const Complex v = m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
            if (split.b[j] == split.b[k]) {
                t1(static_cast<Eigen::Index>(split.a[j]), static_cast<Eigen::Index>(split.a[k])) += v;
            }
            if (split.a[j] == split.a[k]) {
                t2(static_cast<Eigen::Index>(split.b[j]), static_cast<Eigen::Index>(split.b[k])) += v;
            }
        }
    }
    const Complex shift = m.trace() / (2.0 * static_cast<double>(dim));
    Matrix h1 = t1 / static_cast<double>(d2) - shift * Matrix::Identity(d1, d1);
    Matrix h2 = t2 / static_cast<double>(d1) - shift * Matrix::Identity(d2, d2);

    double residual = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            Complex r = m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
            if (split.b[j] == split.b[k]) {
                r -= h1(static_cast<Eigen::Index>(split.a[j]), static_cast<Eigen::Index>(split.a[k]));
            }
            if (split.a[j] == split.a[k]) {
                r -= h2(static_cast<Eigen::Index>(split.b[j]), static_cast<Eigen::Index>(split.b[k]));
            }
            residual = std::max(residual, std::abs(r));
        }
    }
    return {OperatorMatrix(std::move(h1), part.size()), OperatorMatrix(std::move(h2), n - part.size()), residual};
}

std::optional<HamiltonianSplit> is_reducible_h(const OperatorMatrix& h, QubitSubset part, double tol) {
    HamiltonianSplit s = trace_split(h, part);
    if (s.residual <= tol) {
        return s;
    }
    return std::nullopt;
}

BlockDecomposition finest_blocks_h(const OperatorMatrix& h, double tol) {
    const int n = h.n_qubits();
    require_qubits(n, "block decomposition");
    BlockDecomposition out;
    out.n_qubits = n;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        labels[static_cast<std::size_t>(q)] = q;
    }
    split_h_recursive(h, labels, tol, out);
    sort_blocks(out);
    return out;
}

int naive_complexity_h(const OperatorMatrix& h, double tol) { return finest_blocks_h(h, tol).nu(); }

OperatorMatrix reassemble_h(const BlockDecomposition& d) {
    const std::size_t dim = std::size_t{1} << d.n_qubits;
    Matrix total = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < d.blocks.size(); ++k) {
        const QubitSubset part = subset_of(d.blocks[k]);
        const Matrix& f = d.operator_factors[k].entries();
        if (part.size() == d.n_qubits) {
            total += f;
            continue;
        }
        const IndexSplit split(d.n_qubits, part);
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t l = 0; l < dim; ++l) {
                if (split.b[j] == split.b[l]) {
                    total(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) +=
                        f(static_cast<Eigen::Index>(split.a[j]), static_cast<Eigen::Index>(split.a[l]));
                }
            }
        }
    }
    return OperatorMatrix(std::move(total), d.n_qubits);
}

std::optional<StateSplit> factor_state(const StateVector& psi, QubitSubset part, double tol) {
    const int n = psi.n_qubits();
    require_qubits(n, "state factorization");
    require_proper(part, n);
    const IndexSplit split(n, part);
    const auto d1 = static_cast<Eigen::Index>(split.d1);
    const auto d2 = static_cast<Eigen::Index>(split.d2);
    Matrix m(d1, d2);
    for (std::size_t j = 0; j < split.dim(); ++j) {
        m(static_cast<Eigen::Index>(split.a[j]), static_cast<Eigen::Index>(split.b[j])) = psi[j];
    }
    const Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double s1 = sv(0);
    const double s2 = sv.size() > 1 ? sv(1) : 0.0;
    if (s1 == 0.0 || s2 > tol * s1) {
        return std::nullopt;
    }
    Vector u = svd.matrixU().col(0);
    Vector v = svd.matrixV().col(0).conjugate() * s1;
    Eigen::Index lead = 0;
    for (Eigen::Index k = 1; k < u.size(); ++k) {
        if (std::abs(u(k)) > std::abs(u(lead))) {
            lead = k;
        }
    }
    const Complex phase = u(lead) / std::abs(u(lead));
    u /= phase;
    v *= phase;
    return StateSplit{StateVector(std::move(u), part.size()), StateVector(std::move(v), n - part.size()), s2};
}

NaiveComplexity naive_complexity_state(const StateVector& psi, double tol) {
    const int n = psi.n_qubits();
    require_qubits(n, "naive complexity");
    NaiveComplexity out;
    out.decomposition.n_qubits = n;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        labels[static_cast<std::size_t>(q)] = q;
    }
    split_state_recursive(psi, labels, tol, out.decomposition);
    sort_blocks(out.decomposition);
    out.nu = out.decomposition.nu();
    return out;
}

StateVector reassemble_state(const BlockDecomposition& d) {
    const std::size_t dim = std::size_t{1} << d.n_qubits;
    Vector v(static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        Complex amp = 1.0;
        for (std::size_t k = 0; k < d.blocks.size(); ++k) {
            std::size_t local = 0;
            for (int q : d.blocks[k]) {
                local = (local << 1) | static_cast<std::size_t>(bit_of(j, q, d.n_qubits));
            }
            amp *= d.state_factors[k][local];
        }
        v(static_cast<Eigen::Index>(j)) = amp;
    }
    return StateVector(std::move(v), d.n_qubits);
}

std::string_view to_string(SearchStrategy s) noexcept {
    return s == SearchStrategy::exhaustive ? "exhaustive" : "heuristic";
}

SearchStrategy parse_strategy(std::string_view s) {
    if (s == "exhaustive") {
        return SearchStrategy::exhaustive;
    }
    if (s == "heuristic" || s == "heuristic_library") {
        return SearchStrategy::heuristic_library;
    }
    throw Error("invalid_argument", "unknown search strategy '" + std::string(s) + "'");
}

ComplexityReport quantum_complexity_state(const StateVector& psi, SearchStrategy strategy, double tol,
                                          HeuristicOptions opts) {
    const int n = psi.n_qubits();
    require_qubits(n, "quantum complexity");
    const Objective objective = [&](const Permutation& p) {
        const auto nc = naive_complexity_state(permute_state(psi, p), tol);
        return Score{nc.nu, static_cast<int>(nc.decomposition.blocks.size())};
    };
    ComplexityReport report = strategy == SearchStrategy::exhaustive ? exhaustive_search(psi.dim(), objective)
                                                                     : heuristic_search(n, objective, opts);
    report.naive = naive_complexity_state(psi, tol).nu;
    return report;
}

ComplexityReport quantum_complexity_h(const OperatorMatrix& h, SearchStrategy strategy, double tol,
                                      HeuristicOptions opts) {
    const int n = h.n_qubits();
    require_qubits(n, "quantum complexity");
    const Objective objective = [&](const Permutation& p) {
        const auto d = finest_blocks_h(conjugate_by_permutation(h, p), tol);
        return Score{d.nu(), static_cast<int>(d.blocks.size())};
    };
    ComplexityReport report = strategy == SearchStrategy::exhaustive ? exhaustive_search(h.dim(), objective)
                                                                     : heuristic_search(n, objective, opts);
    report.naive = naive_complexity_h(h, tol);
    return report;
}

long long accuracy_budget(long long complexity, long long q) {
    if (complexity < 1 || q < 1) {
        throw Error("invalid_argument", "accuracy budget requires C >= 1 and Q >= 1");
    }
    return q / complexity;
}

double epsilon_from_q(int q) {
    if (q < 1) {
        throw Error("invalid_argument", "Q must be >= 1");
    }
    return std::exp2(-0.5 * q);
}

double coherent_state_count(double epsilon) {
    if (!(epsilon > 0.0)) {
        throw Error("invalid_argument", "epsilon must be positive");
    }
    return std::round(1.0 / (epsilon * epsilon));
}

unsigned worker_count() {
    if (const char* env = std::getenv("QCOMPLEX_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace qcomplex
