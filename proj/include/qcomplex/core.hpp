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

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcomplex {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// A permutation of {0..size-1}, stored as its image sequence: p[j] is where j goes.
using Permutation = std::vector<std::size_t>;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kSupportThreshold = 1e-12;

/// Every failure raised by the library carries a short machine-readable code
/// (e.g. "dimension_mismatch") next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

    [[nodiscard]] const std::string& code() const noexcept { return code_; }
    [[nodiscard]] const std::string& context() const noexcept { return context_; }

private:
    std::string code_;
    std::string context_;
};

/// Dense amplitude vector. `n_qubits == 0` marks a general (non-qubit) basis.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(Vector amps, int n_qubits = -1);

    /// Builds from a dimension alone; n_qubits is inferred when dim is a power of two.
    static StateVector zero(std::size_t dim, int n_qubits = -1);
    static StateVector basis(std::size_t dim, std::size_t index, int n_qubits = -1);

    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] bool qubit_structured() const noexcept { return n_qubits_ > 0; }
    [[nodiscard]] const Vector& amps() const noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t j) const { return amps_(static_cast<Eigen::Index>(j)); }

    [[nodiscard]] double norm() const { return amps_.norm(); }
    [[nodiscard]] bool is_normalized(double tol = kDefaultTol) const;
    [[nodiscard]] StateVector normalized() const;

    /// Indices whose amplitude modulus exceeds `threshold`.
    [[nodiscard]] std::vector<std::size_t> support(double threshold = kSupportThreshold) const;

private:
    Vector amps_;
    int n_qubits_ = 0;
};

/// Dense square operator. Structural properties are checked on demand.
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(Matrix entries, int n_qubits = -1);

    static OperatorMatrix identity(std::size_t dim, int n_qubits = -1);

    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] bool qubit_structured() const noexcept { return n_qubits_ > 0; }
    [[nodiscard]] const Matrix& entries() const noexcept { return entries_; }
    [[nodiscard]] Complex operator()(std::size_t i, std::size_t j) const {
        return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

    [[nodiscard]] bool is_hermitian(double tol = kDefaultTol) const;
    [[nodiscard]] bool is_unitary(double tol = kDefaultTol) const;

    [[nodiscard]] OperatorMatrix adjoint() const { return OperatorMatrix(entries_.adjoint(), n_qubits_); }
    [[nodiscard]] OperatorMatrix operator*(const OperatorMatrix& rhs) const;
    [[nodiscard]] OperatorMatrix operator+(const OperatorMatrix& rhs) const;

private:
    Matrix entries_;
    int n_qubits_ = 0;
};

/// Bitmask over qubit positions; bit k set means qubit k belongs to the subset.
struct QubitSubset {
    std::uint32_t mask = 0;

    [[nodiscard]] static QubitSubset of(std::initializer_list<int> qubits);
    [[nodiscard]] bool contains(int q) const noexcept { return (mask >> q) & 1U; }
    [[nodiscard]] int size() const noexcept { return std::popcount(mask); }
    [[nodiscard]] QubitSubset complement(int n) const noexcept {
        return {~mask & ((n >= 32) ? ~0U : ((1U << n) - 1U))};
    }
    [[nodiscard]] std::vector<int> qubits(int n) const;
    /// True when the subset is non-empty and leaves a non-empty complement among n qubits.
    [[nodiscard]] bool is_proper(int n) const noexcept { return size() > 0 && size() < n; }
};

// Qubit 0 is the most significant bit of a basis index.
[[nodiscard]] inline int bit_of(std::size_t index, int qubit, int n) noexcept {
    return static_cast<int>((index >> (n - 1 - qubit)) & 1U);
}

/// Returns log2(dim) when dim is a power of two, otherwise 0.
[[nodiscard]] int qubits_for_dim(std::size_t dim) noexcept;

[[nodiscard]] StateVector apply(const OperatorMatrix& a, const StateVector& psi);

/// {z} = |Re z| + |Im z|.
[[nodiscard]] inline double cross_norm(Complex z) noexcept { return std::abs(z.real()) + std::abs(z.imag()); }
[[nodiscard]] double state_cross_norm(const StateVector& psi) noexcept;
[[nodiscard]] double vector_cross_norm(const Vector& v) noexcept;

[[nodiscard]] bool is_bijection(std::span<const std::size_t> perm) noexcept;
[[nodiscard]] Permutation identity_permutation(std::size_t size);
[[nodiscard]] Permutation inverse(std::span<const std::size_t> perm);
/// (a ∘ b)(j) = a(b(j)).
[[nodiscard]] Permutation compose(std::span<const std::size_t> a, std::span<const std::size_t> b);

/// Matrix P with P|j> = |perm[j]>.
[[nodiscard]] OperatorMatrix permutation_operator(std::span<const std::size_t> perm, int n_qubits = -1);

/// Basis permutation induced by moving the bit of qubit k to position eta[k].
[[nodiscard]] Permutation qubit_permutation_basis_map(std::span<const std::size_t> eta, int n);
[[nodiscard]] OperatorMatrix qubit_permutation_operator(std::span<const std::size_t> eta, int n);

/// Permutes amplitudes: result[perm[j]] = psi[j].
[[nodiscard]] StateVector permute_state(const StateVector& psi, std::span<const std::size_t> perm);
/// P^{-1} H P for the basis permutation P.
[[nodiscard]] OperatorMatrix conjugate_by_permutation(const OperatorMatrix& h, std::span<const std::size_t> perm);

[[nodiscard]] OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);
[[nodiscard]] StateVector kron(const StateVector& a, const StateVector& b);

/// exp(-i H t / hbar) for hermitian H via eigendecomposition.
[[nodiscard]] OperatorMatrix evolution_operator(const OperatorMatrix& h, double t, double hbar = 1.0);

[[nodiscard]] double max_abs_diff(const Matrix& a, const Matrix& b);

namespace gates {
[[nodiscard]] OperatorMatrix pauli_x();
[[nodiscard]] OperatorMatrix pauli_y();
[[nodiscard]] OperatorMatrix pauli_z();
[[nodiscard]] OperatorMatrix hadamard();
/// CNOT with control qubit 0 and target qubit 1 on two qubits: swaps |10> and |11>.
[[nodiscard]] OperatorMatrix cnot();
/// Basis map of CNOT(control, target) on n qubits.
[[nodiscard]] Permutation cnot_map(int control, int target, int n);
/// Single-qubit operator `op` acting on qubit q of an n-qubit register.
[[nodiscard]] OperatorMatrix on_qubit(const OperatorMatrix& op, int q, int n);
}  // namespace gates

namespace examples {
/// The 4x4 Hamiltonian whose CNOT conjugate is sigma_x (x) I + I (x) sigma_x.
[[nodiscard]] OperatorMatrix h4();
/// sigma_x (x) I + I (x) sigma_x.
[[nodiscard]] OperatorMatrix hq();
[[nodiscard]] StateVector ghz(int n);
/// Uniform superposition over 2^n basis states.
[[nodiscard]] StateVector uniform(int n);
}  // namespace examples

/// Tavis-Cummings Hamiltonian in the rotating-wave approximation.
///
/// Basis |n>_ph (x) |m_1 ... m_k>_at with n = 0..n_max, photon number most significant
/// and atom 1 the most significant atomic bit. The photon ladder is truncated at n_max,
/// so a^+ acting on |n_max> gives zero. The coupling terms carry no factor of hbar.
[[nodiscard]] OperatorMatrix build_tavis_cummings(int k, int n_max, double omega, std::span<const double> g,
                                                  double hbar = 1.0);

/// Basis index of |photons>_ph |atoms>_at, with `atoms` a k-bit string (atom 1 = MSB).
[[nodiscard]] inline std::size_t tavis_cummings_index(int photons, std::size_t atoms, int k) noexcept {
    return (static_cast<std::size_t>(photons) << k) | atoms;
}

}  // namespace qcomplex
