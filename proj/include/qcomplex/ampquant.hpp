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

// Amplitude quantization of an equilibrium state under a single application
// of an operator A.
//
// The state and the matrix are first rounded onto an eps grid. Each eps
// occurrence in the state is refined into nu smaller quanta of size eps/nu,
// where nu is the (common) number of eps occurrences per support column of A.
// The nu descendants of an occurrence are then bound one-to-one to the nu
// occurrences of that column, which fixes every quantum's landing basis state
// and final type. No two quanta produced this way can cancel each other within
// a transition or in the initial record.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcomplex/core.hpp"

namespace qcomplex {

/// One of the four unit amplitudes.
enum class AmplitudeType : std::uint8_t { plus_one = 0, plus_i = 1, minus_one = 2, minus_i = 3 };

// The encoding is the exponent k of i^k, so products add exponents mod 4.
[[nodiscard]] constexpr AmplitudeType operator*(AmplitudeType a, AmplitudeType b) noexcept {
    return static_cast<AmplitudeType>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 3U);
}
[[nodiscard]] constexpr AmplitudeType operator-(AmplitudeType a) noexcept {
    return a * AmplitudeType::minus_one;
}
[[nodiscard]] Complex to_complex(AmplitudeType t) noexcept;
[[nodiscard]] std::string_view to_string(AmplitudeType t) noexcept;
[[nodiscard]] AmplitudeType parse_amplitude_type(std::string_view s);

struct AmplitudeQuantum {
    std::uint64_t id = 0;
    std::uint32_t b_in = 0;
    std::uint32_t b_fin = 0;
    AmplitudeType t_in = AmplitudeType::plus_one;
    AmplitudeType t_fin = AmplitudeType::plus_one;

    friend bool operator==(const AmplitudeQuantum&, const AmplitudeQuantum&) = default;
};

/// Best eps-grid approximation of one complex value: sign_re*eps*re_count + i*sign_im*eps*im_count.
/// A zero count carries sign +1.
struct GridEntry {
    int sign_re = 1;
    std::uint64_t re_count = 0;
    int sign_im = 1;
    std::uint64_t im_count = 0;

    [[nodiscard]] Complex value(double eps) const noexcept {
        return {sign_re * eps * static_cast<double>(re_count), sign_im * eps * static_cast<double>(im_count)};
    }
};

[[nodiscard]] GridEntry grid_entry(Complex z, double eps);

struct StateGrid {
    double epsilon = 0.0;
    std::vector<GridEntry> entries;  ///< per basis index: M_j (re_count), N_j (im_count)

    [[nodiscard]] Vector values() const;
};

struct MatrixGrid {
    double epsilon = 0.0;
    std::size_t dim = 0;
    std::vector<GridEntry> entries;  ///< row-major: R_ij (re_count), I_ij (im_count)

    [[nodiscard]] const GridEntry& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
    [[nodiscard]] Matrix values() const;
};

[[nodiscard]] StateGrid grid_approx_state(const StateVector& psi, double eps);
[[nodiscard]] MatrixGrid grid_approx_matrix(const OperatorMatrix& a, double eps);

/// Number of eps occurrences in column j: sum_i (R_ij + I_ij).
[[nodiscard]] std::uint64_t column_weight(const MatrixGrid& grid, std::size_t j);

struct Quantization {
    std::size_t dim = 0;
    int n_qubits = 0;
    double epsilon = 0.0;      ///< grid size of the source approximation
    std::uint64_t nu = 0;      ///< common column weight
    double c_of_eps = 0.0;     ///< epsilon * nu
    std::vector<AmplitudeQuantum> quanta;  ///< quanta[k].id == k

    [[nodiscard]] double quantum_size() const noexcept { return epsilon / static_cast<double>(nu); }
};

[[nodiscard]] Quantization quantize(const StateVector& psi, const OperatorMatrix& a, double eps,
                                    double tol = kDefaultTol);

struct ThetaStates {
    StateVector theta_in;   ///< unnormalized: quantum size times summed initial types
    StateVector theta_fin;  ///< normalized
    Vector theta_fin_unnormalized;  ///< quantum size times summed final types
};

[[nodiscard]] ThetaStates theta_states(const Quantization& theta);

struct ConditionQResult {
    bool ok = true;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> violating_pair;
};

[[nodiscard]] ConditionQResult check_condition_q(std::span<const AmplitudeQuantum> quanta);

/// || c(eps) * theta_fin_unnormalized - A * theta_in ||_1.
[[nodiscard]] double consistency_error(const StateVector& psi, const OperatorMatrix& a, double eps,
                                       double tol = kDefaultTol);
[[nodiscard]] double consistency_error(const Quantization& theta, const OperatorMatrix& a);

using TrajectoryRecord = AmplitudeQuantum;

[[nodiscard]] TrajectoryRecord trace_quantum(const Quantization& theta, std::uint64_t id);

/// True when every id appears once and ids run 0..size-1.
[[nodiscard]] bool ids_unique(const Quantization& theta);

}  // namespace qcomplex
