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

#include "qcomplex/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qcomplex {

namespace {

int resolve_qubits(std::size_t dim, int requested) {
    if (requested < 0) {
        return qubits_for_dim(dim);
    }
    if (requested > 0 && (std::size_t{1} << requested) != dim) {
        throw Error("dimension_mismatch", "dim " + std::to_string(dim) + " is not 2^" + std::to_string(requested));
    }
    return requested;
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
    if (!m.allFinite()) {
        throw Error("non_finite", std::string(what) + " contains NaN or Inf");
    }
}

}  // namespace

int qubits_for_dim(std::size_t dim) noexcept {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        return 0;
    }
    return std::countr_zero(dim);
}

StateVector::StateVector(Vector amps, int n_qubits) : amps_(std::move(amps)) {
    if (amps_.size() == 0) {
        throw Error("invalid_state", "state vector must have positive dimension");
    }
    require_finite(amps_, "state vector");
    n_qubits_ = resolve_qubits(dim(), n_qubits);
}

StateVector StateVector::zero(std::size_t dim, int n_qubits) {
    return StateVector(Vector::Zero(static_cast<Eigen::Index>(dim)), n_qubits);
}

StateVector StateVector::basis(std::size_t dim, std::size_t index, int n_qubits) {
    if (index >= dim) {
        throw Error("index_out_of_range", "basis index " + std::to_string(index) + " outside dim " + std::to_string(dim));
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v), n_qubits);
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(amps_.squaredNorm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw Error("zero_norm", "cannot normalize the zero vector");
    }
    return StateVector(amps_ / n, n_qubits_);
}

std::vector<std::size_t> StateVector::support(double threshold) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < dim(); ++j) {
        if (std::abs((*this)[j]) > threshold) {
            out.push_back(j);
        }
    }
    return out;
}

OperatorMatrix::OperatorMatrix(Matrix entries, int n_qubits) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw Error("invalid_matrix", "operator matrix must be square with positive dimension");
    }
    require_finite(entries_, "operator matrix");
    n_qubits_ = resolve_qubits(dim(), n_qubits);
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim, int n_qubits) {
    const auto d = static_cast<Eigen::Index>(dim);
    return OperatorMatrix(Matrix::Identity(d, d), n_qubits);
}

bool OperatorMatrix::is_hermitian(double tol) const {
    return max_abs_diff(entries_, entries_.adjoint()) <= tol;
}

bool OperatorMatrix::is_unitary(double tol) const {
    const auto d = entries_.rows();
    return max_abs_diff(entries_.adjoint() * entries_, Matrix::Identity(d, d)) <= tol;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
    if (dim() != rhs.dim()) {
        throw Error("dimension_mismatch", "operator product of dim " + std::to_string(dim()) + " and " +
                                              std::to_string(rhs.dim()));
    }
    return OperatorMatrix(entries_ * rhs.entries_, n_qubits_);
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
    if (dim() != rhs.dim()) {
        throw Error("dimension_mismatch", "operator sum of dim " + std::to_string(dim()) + " and " +
                                              std::to_string(rhs.dim()));
    }
    return OperatorMatrix(entries_ + rhs.entries_, n_qubits_);
}

QubitSubset QubitSubset::of(std::initializer_list<int> qubits) {
    QubitSubset s;
    for (int q : qubits) {
        s.mask |= 1U << q;
    }
    return s;
}

std::vector<int> QubitSubset::qubits(int n) const {
    std::vector<int> out;
    for (int q = 0; q < n; ++q) {
        if (contains(q)) {
            out.push_back(q);
        }
    }
    return out;
}

StateVector apply(const OperatorMatrix& a, const StateVector& psi) {
    if (a.dim() != psi.dim()) {
        throw Error("dimension_mismatch", "operator dim " + std::to_string(a.dim()) + " vs state dim " +
                                              std::to_string(psi.dim()));
    }
    return StateVector(a.entries() * psi.amps(), psi.n_qubits());
}

double vector_cross_norm(const Vector& v) noexcept {
    double s = 0.0;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        s += cross_norm(v(j));
    }
    return s;
}

double state_cross_norm(const StateVector& psi) noexcept { return vector_cross_norm(psi.amps()); }

bool is_bijection(std::span<const std::size_t> perm) noexcept {
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t p : perm) {
        if (p >= perm.size() || seen[p]) {
            return false;
        }
        seen[p] = true;
    }
    return true;
}

Permutation identity_permutation(std::size_t size) {
    Permutation p(size);
    for (std::size_t j = 0; j < size; ++j) {
        p[j] = j;
    }
    return p;
}

Permutation inverse(std::span<const std::size_t> perm) {
    Permutation inv(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        inv[perm[j]] = j;
    }
    return inv;
}

Permutation compose(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    Permutation out(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        out[j] = a[b[j]];
    }
    return out;
}

OperatorMatrix permutation_operator(std::span<const std::size_t> perm, int n_qubits) {
    if (!is_bijection(perm)) {
        throw Error("not_a_bijection", "permutation is not a bijection on its index set");
    }
    const auto d = static_cast<Eigen::Index>(perm.size());
    Matrix p = Matrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        p(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(j)]), j) = 1.0;
    }
    return OperatorMatrix(std::move(p), n_qubits);
}

Permutation qubit_permutation_basis_map(std::span<const std::size_t> eta, int n) {
    if (static_cast<int>(eta.size()) != n || !is_bijection(eta)) {
        throw Error("not_a_bijection", "qubit permutation must be a bijection on 0..n-1");
    }
    const std::size_t dim = std::size_t{1} << n;
    Permutation map(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::size_t image = 0;
        for (int k = 0; k < n; ++k) {
            if (bit_of(j, k, n)) {
                image |= std::size_t{1} << (n - 1 - static_cast<int>(eta[static_cast<std::size_t>(k)]));
            }
        }
        map[j] = image;
    }
    return map;
}

OperatorMatrix qubit_permutation_operator(std::span<const std::size_t> eta, int n) {
    return permutation_operator(qubit_permutation_basis_map(eta, n), n);
}

StateVector permute_state(const StateVector& psi, std::span<const std::size_t> perm) {
    Vector out(psi.amps().size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        out(static_cast<Eigen::Index>(perm[j])) = psi[j];
    }
    return StateVector(std::move(out), psi.n_qubits());
}

OperatorMatrix conjugate_by_permutation(const OperatorMatrix& h, std::span<const std::size_t> perm) {
    // (P^{-1} H P)_{ij} = H_{perm(i), perm(j)}
    const auto d = static_cast<Eigen::Index>(h.dim());
    Matrix out(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            out(i, j) = h.entries()(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)]),
                                    static_cast<Eigen::Index>(perm[static_cast<std::size_t>(j)]));
        }
    }
    return OperatorMatrix(std::move(out), h.n_qubits());
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
    const auto da = a.entries().rows();
    const auto db = b.entries().rows();
    Matrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            out.block(i * db, j * db, db, db) = a.entries()(i, j) * b.entries();
        }
    }
    const int n = (a.qubit_structured() && b.qubit_structured()) ? a.n_qubits() + b.n_qubits() : -1;
    return OperatorMatrix(std::move(out), n);
}

StateVector kron(const StateVector& a, const StateVector& b) {
    const auto da = a.amps().size();
    const auto db = b.amps().size();
    Vector out(da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        out.segment(i * db, db) = a.amps()(i) * b.amps();
    }
    const int n = (a.qubit_structured() && b.qubit_structured()) ? a.n_qubits() + b.n_qubits() : -1;
    return StateVector(std::move(out), n);
}

OperatorMatrix evolution_operator(const OperatorMatrix& h, double t, double hbar) {
    if (!h.is_hermitian()) {
        throw Error("not_hermitian", "evolution operator requires a hermitian generator");
    }
    const Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
    const Vector phases = (es.eigenvalues().cast<Complex>() * Complex(0.0, -t / hbar)).array().exp();
    Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return OperatorMatrix(std::move(u), h.n_qubits());
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

namespace gates {

OperatorMatrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return OperatorMatrix(m, 1);
}

OperatorMatrix pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return OperatorMatrix(m, 1);
}

OperatorMatrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return OperatorMatrix(m, 1);
}

OperatorMatrix hadamard() {
    Matrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return OperatorMatrix(m, 1);
}

OperatorMatrix cnot() { return permutation_operator(cnot_map(0, 1, 2), 2); }

Permutation cnot_map(int control, int target, int n) {
    const std::size_t dim = std::size_t{1} << n;
    Permutation map(dim);
    const std::size_t target_bit = std::size_t{1} << (n - 1 - target);
    for (std::size_t j = 0; j < dim; ++j) {
        map[j] = bit_of(j, control, n) ? (j ^ target_bit) : j;
    }
    return map;
}

OperatorMatrix on_qubit(const OperatorMatrix& op, int q, int n) {
    OperatorMatrix out = (q == 0) ? op : OperatorMatrix::identity(2, 1);
    for (int k = 1; k < n; ++k) {
        out = kron(out, k == q ? op : OperatorMatrix::identity(2, 1));
    }
    return out;
}

}  // namespace gates

namespace examples {

OperatorMatrix h4() {
    Matrix m(4, 4);
    m << 0, 1, 0, 1,  //
        1, 0, 1, 0,   //
        0, 1, 0, 1,   //
        1, 0, 1, 0;
    return OperatorMatrix(m, 2);
}

OperatorMatrix hq() {
    return gates::on_qubit(gates::pauli_x(), 0, 2) + gates::on_qubit(gates::pauli_x(), 1, 2);
}

StateVector ghz(int n) {
    const std::size_t dim = std::size_t{1} << n;
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(0) = v(static_cast<Eigen::Index>(dim - 1)) = 1.0 / std::sqrt(2.0);
    return StateVector(std::move(v), n);
}

StateVector uniform(int n) {
    const std::size_t dim = std::size_t{1} << n;
    const auto d = static_cast<Eigen::Index>(dim);
    return StateVector(Vector::Constant(d, 1.0 / std::sqrt(static_cast<double>(dim))), n);
}

}  // namespace examples

OperatorMatrix build_tavis_cummings(int k, int n_max, double omega, std::span<const double> g, double hbar) {
    if (k < 1 || n_max < 1) {
        throw Error("invalid_argument", "Tavis-Cummings requires k >= 1 and n_max >= 1");
    }
    if (static_cast<int>(g.size()) != k) {
        throw Error("invalid_argument", "expected " + std::to_string(k) + " couplings, got " + std::to_string(g.size()));
    }
    const std::size_t atom_states = std::size_t{1} << k;
    const std::size_t dim = static_cast<std::size_t>(n_max + 1) * atom_states;
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix h = Matrix::Zero(d, d);
    for (int n = 0; n <= n_max; ++n) {
        for (std::size_t atoms = 0; atoms < atom_states; ++atoms) {
            const auto col = static_cast<Eigen::Index>(tavis_cummings_index(n, atoms, k));
            h(col, col) = hbar * omega * (n + std::popcount(atoms));
            for (int a = 0; a < k; ++a) {
                const std::size_t bit = std::size_t{1} << (k - 1 - a);
                const double ga = g[static_cast<std::size_t>(a)];
                if ((atoms & bit) && n < n_max) {
                    // a^+ sigma_a: atom relaxes, photon created
                    const auto row = static_cast<Eigen::Index>(tavis_cummings_index(n + 1, atoms ^ bit, k));
                    h(row, col) += ga * std::sqrt(static_cast<double>(n + 1));
                }
                if (!(atoms & bit) && n > 0) {
                    // a sigma_a^+: photon absorbed, atom excited
                    const auto row = static_cast<Eigen::Index>(tavis_cummings_index(n - 1, atoms | bit, k));
                    h(row, col) += ga * std::sqrt(static_cast<double>(n));
                }
            }
        }
    }
    return OperatorMatrix(std::move(h), -1);
}

}  // namespace qcomplex
