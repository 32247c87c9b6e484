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

#include "qcomplex/ampquant.hpp"

#include <array>
#include <cmath>
#include <map>
#include <tuple>

#include "qcomplex/symmetry.hpp"

namespace qcomplex {

namespace {

struct Occurrence {
    std::uint32_t row = 0;
    AmplitudeType type = AmplitudeType::plus_one;
};

AmplitudeType real_type(int sign) { return sign > 0 ? AmplitudeType::plus_one : AmplitudeType::minus_one; }
AmplitudeType imag_type(int sign) { return sign > 0 ? AmplitudeType::plus_i : AmplitudeType::minus_i; }

/// Column occurrence list Z_j ordered by row ascending, real before imaginary.
std::vector<Occurrence> column_occurrences(const MatrixGrid& grid, std::size_t j) {
    std::vector<Occurrence> z;
    for (std::size_t i = 0; i < grid.dim; ++i) {
        const GridEntry& e = grid.at(i, j);
        z.insert(z.end(), e.re_count, Occurrence{static_cast<std::uint32_t>(i), real_type(e.sign_re)});
        z.insert(z.end(), e.im_count, Occurrence{static_cast<std::uint32_t>(i), imag_type(e.sign_im)});
    }
    return z;
}

/// Integer tallies of quanta per basis index and type, so cancellation is exact.
using Tally = std::vector<std::array<std::int64_t, 4>>;

Vector from_tally(const Tally& tally, double size) {
    Vector v(static_cast<Eigen::Index>(tally.size()));
    for (std::size_t k = 0; k < tally.size(); ++k) {
        const auto& c = tally[k];
        const double re = static_cast<double>(c[0] - c[2]);
        const double im = static_cast<double>(c[1] - c[3]);
        v(static_cast<Eigen::Index>(k)) = size * Complex(re, im);
    }
    return v;
}

}  // namespace

Complex to_complex(AmplitudeType t) noexcept {
    switch (t) {
        case AmplitudeType::plus_one: return {1, 0};
        case AmplitudeType::plus_i: return {0, 1};
        case AmplitudeType::minus_one: return {-1, 0};
        case AmplitudeType::minus_i: return {0, -1};
    }
    return {};
}

std::string_view to_string(AmplitudeType t) noexcept {
    switch (t) {
        case AmplitudeType::plus_one: return "+1";
        case AmplitudeType::plus_i: return "+i";
        case AmplitudeType::minus_one: return "-1";
        case AmplitudeType::minus_i: return "-i";
    }
    return "?";
}

AmplitudeType parse_amplitude_type(std::string_view s) {
    if (s == "+1") return AmplitudeType::plus_one;
    if (s == "-1") return AmplitudeType::minus_one;
    if (s == "+i") return AmplitudeType::plus_i;
    if (s == "-i") return AmplitudeType::minus_i;
    throw Error("schema", "unknown amplitude type '" + std::string(s) + "'");
}

GridEntry grid_entry(Complex z, double eps) {
    // std::round rounds half away from zero.
    GridEntry e;
    e.re_count = static_cast<std::uint64_t>(std::round(std::abs(z.real()) / eps));
    e.im_count = static_cast<std::uint64_t>(std::round(std::abs(z.imag()) / eps));
    e.sign_re = (e.re_count > 0 && z.real() < 0) ? -1 : 1;
    e.sign_im = (e.im_count > 0 && z.imag() < 0) ? -1 : 1;
    return e;
}

Vector StateGrid::values() const {
    Vector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t j = 0; j < entries.size(); ++j) {
        v(static_cast<Eigen::Index>(j)) = entries[j].value(epsilon);
    }
    return v;
}

Matrix MatrixGrid::values() const {
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix m(d, d);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = at(i, j).value(epsilon);
        }
    }
    return m;
}

StateGrid grid_approx_state(const StateVector& psi, double eps) {
    if (!(eps > 0.0)) {
        throw Error("invalid_argument", "grid epsilon must be positive");
    }
    StateGrid g;
    g.epsilon = eps;
    g.entries.reserve(psi.dim());
    for (std::size_t j = 0; j < psi.dim(); ++j) {
        g.entries.push_back(grid_entry(psi[j], eps));
    }
    return g;
}

MatrixGrid grid_approx_matrix(const OperatorMatrix& a, double eps) {
    if (!(eps > 0.0)) {
        throw Error("invalid_argument", "grid epsilon must be positive");
    }
    MatrixGrid g;
    g.epsilon = eps;
    g.dim = a.dim();
    g.entries.reserve(g.dim * g.dim);
    for (std::size_t i = 0; i < g.dim; ++i) {
        for (std::size_t j = 0; j < g.dim; ++j) {
            g.entries.push_back(grid_entry(a(i, j), eps));
        }
    }
    return g;
}

std::uint64_t column_weight(const MatrixGrid& grid, std::size_t j) {
    std::uint64_t nu = 0;
    for (std::size_t i = 0; i < grid.dim; ++i) {
        nu += grid.at(i, j).re_count + grid.at(i, j).im_count;
    }
    return nu;
}

Quantization quantize(const StateVector& psi, const OperatorMatrix& a, double eps, double tol) {
    if (psi.dim() != a.dim()) {
        throw Error("dimension_mismatch", "state and operator dimensions differ");
    }
    if (!is_equilibrium(psi, a, tol)) {
        throw Error("not_equilibrium", "state is not an equilibrium state with respect to the operator");
    }
    const StateGrid sg = grid_approx_state(psi, eps);
    const MatrixGrid mg = grid_approx_matrix(a, eps);

    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < psi.dim(); ++j) {
        if (sg.entries[j].re_count + sg.entries[j].im_count > 0) {
            support.push_back(j);
        }
    }
    if (support.empty()) {
        throw Error("vanishing_state", "every amplitude rounds to zero at this grid size; use a finer epsilon");
    }
    const std::uint64_t nu = column_weight(mg, support.front());
    for (std::size_t j : support) {
        const std::uint64_t w = column_weight(mg, j);
        if (w != nu) {
            throw Error("unequal_column_weights",
                        "support columns have different grid weights; use a finer epsilon",
                        "column " + std::to_string(support.front()) + " weight " + std::to_string(nu) + ", column " +
                            std::to_string(j) + " weight " + std::to_string(w));
        }
    }
    if (nu == 0) {
        throw Error("zero_weight", "operator rounds to zero on the support columns; take c(eps) = 0");
    }

    Quantization theta;
    theta.dim = psi.dim();
    theta.n_qubits = psi.n_qubits();
    theta.epsilon = eps;
    theta.nu = nu;
    theta.c_of_eps = eps * static_cast<double>(nu);

    std::uint64_t total = 0;
    for (std::size_t j : support) {
        total += (sg.entries[j].re_count + sg.entries[j].im_count) * nu;
    }
    theta.quanta.reserve(total);

    std::uint64_t id = 0;
    for (std::size_t j : support) {
        const std::vector<Occurrence> z = column_occurrences(mg, j);
        const GridEntry& lam = sg.entries[j];
        auto emit = [&](std::uint64_t count, AmplitudeType type) {
            for (std::uint64_t s = 0; s < count; ++s) {
                // descendant r of this occurrence is bound to the r-th occurrence of column j
                for (const Occurrence& occ : z) {
                    theta.quanta.push_back({id++, static_cast<std::uint32_t>(j), occ.row, type, type * occ.type});
                }
            }
        };
        emit(lam.re_count, real_type(lam.sign_re));
        emit(lam.im_count, imag_type(lam.sign_im));
    }
    return theta;
}

ThetaStates theta_states(const Quantization& theta) {
    if (theta.quanta.empty()) {
        throw Error("empty_quantization", "quantization has no quanta");
    }
    Tally in(theta.dim, {0, 0, 0, 0});
    Tally fin(theta.dim, {0, 0, 0, 0});
    for (const auto& q : theta.quanta) {
        ++in[q.b_in][static_cast<std::size_t>(q.t_in)];
        ++fin[q.b_fin][static_cast<std::size_t>(q.t_fin)];
    }
    const double size = theta.quantum_size();
    Vector fin_unnorm = from_tally(fin, size);
    const double norm = fin_unnorm.norm();
    if (norm == 0.0) {
        throw Error("total_cancellation", "final amplitudes cancel completely");
    }
    const int n = theta.n_qubits > 0 ? theta.n_qubits : 0;
    return {StateVector(from_tally(in, size), n), StateVector(fin_unnorm / norm, n), std::move(fin_unnorm)};
}

ConditionQResult check_condition_q(std::span<const AmplitudeQuantum> quanta) {
    // first quantum seen per (b_in, b_fin, t_in, t_fin) and per (b_in, t_in)
    std::map<std::tuple<std::uint32_t, std::uint32_t, AmplitudeType, AmplitudeType>, std::uint64_t> transitions;
    std::map<std::pair<std::uint32_t, AmplitudeType>, std::uint64_t> initials;
    for (const auto& q : quanta) {
        if (auto it = transitions.find({q.b_in, q.b_fin, q.t_in, -q.t_fin}); it != transitions.end()) {
            return {false, std::pair{it->second, q.id}};
        }
        if (auto it = initials.find({q.b_in, -q.t_in}); it != initials.end()) {
            return {false, std::pair{it->second, q.id}};
        }
        transitions.try_emplace({q.b_in, q.b_fin, q.t_in, q.t_fin}, q.id);
        initials.try_emplace({q.b_in, q.t_in}, q.id);
    }
    return {};
}

double consistency_error(const Quantization& theta, const OperatorMatrix& a) {
    if (a.dim() != theta.dim) {
        throw Error("dimension_mismatch", "operator and quantization dimensions differ");
    }
    const ThetaStates s = theta_states(theta);
    const Vector diff = theta.c_of_eps * s.theta_fin_unnormalized - a.entries() * s.theta_in.amps();
    return diff.cwiseAbs().sum();
}

double consistency_error(const StateVector& psi, const OperatorMatrix& a, double eps, double tol) {
    return consistency_error(quantize(psi, a, eps, tol), a);
}

TrajectoryRecord trace_quantum(const Quantization& theta, std::uint64_t id) {
    if (id >= theta.quanta.size()) {
        throw Error("unknown_id", "no amplitude quantum with id " + std::to_string(id));
    }
    return theta.quanta[id];
}

bool ids_unique(const Quantization& theta) {
    for (std::size_t k = 0; k < theta.quanta.size(); ++k) {
        if (theta.quanta[k].id != k) {
            return false;
        }
    }
    return true;
}

}  // namespace qcomplex
