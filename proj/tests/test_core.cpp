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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace qcomplex;

TEST(core, apply_identity_and_h4) {
    std::mt19937_64 rng(1);
    const StateVector psi = fixtures::random_state(rng, 2);
    EXPECT_LE(max_abs_diff(apply(OperatorMatrix::identity(4), psi).amps(), psi.amps()), 0.0);

    const StateVector col0 = apply(examples::h4(), StateVector::basis(4, 0));
    Vector expected(4);
    expected << 0, 1, 0, 1;
    EXPECT_EQ(col0.amps(), expected);

    const StateVector flipped = apply(gates::pauli_x(), StateVector::basis(2, 0));
    EXPECT_EQ(flipped.amps(), StateVector::basis(2, 1).amps());
}

TEST(core, apply_dimension_mismatch) {
    try {
        (void)apply(OperatorMatrix::identity(4), StateVector::basis(2, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "dimension_mismatch");
    }
}

TEST(core, apply_is_linear) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 1 + rng() % 16;
        const OperatorMatrix a(fixtures::random_matrix(rng, dim));
        const StateVector x(fixtures::random_vector(rng, dim));
        const StateVector y(fixtures::random_vector(rng, dim));
        const Complex alpha(0.3, -1.2);
        const Complex beta(-0.7, 0.4);
        const StateVector combo(alpha * x.amps() + beta * y.amps());
        const Vector lhs = apply(a, combo).amps();
        const Vector rhs = alpha * apply(a, x).amps() + beta * apply(a, y).amps();
        EXPECT_LE(max_abs_diff(lhs, rhs), 1e-9);
    }
}

TEST(core, cross_norm_examples) {
    EXPECT_DOUBLE_EQ(cross_norm({3, -4}), 7.0);
    EXPECT_DOUBLE_EQ(cross_norm({0, 0}), 0.0);
    EXPECT_DOUBLE_EQ(cross_norm({0, 1}), 1.0);

    EXPECT_DOUBLE_EQ(state_cross_norm(StateVector::basis(2, 0)), 1.0);
    EXPECT_NEAR(state_cross_norm(examples::uniform(1)), std::sqrt(2.0), 1e-15);
    EXPECT_DOUBLE_EQ(state_cross_norm(StateVector::zero(4)), 0.0);
}

TEST(core, cross_norm_submultiplicative_and_triangle) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 1000; ++trial) {
        const Complex z(g(rng), g(rng));
        const Complex w(g(rng), g(rng));
        EXPECT_LE(cross_norm(z * w), cross_norm(z) * cross_norm(w) + 1e-12);
        EXPECT_LE(cross_norm(z + w), cross_norm(z) + cross_norm(w) + 1e-12);
    }
}

TEST(core, permutation_operator_examples) {
    EXPECT_EQ(permutation_operator(identity_permutation(4)).entries(), Matrix::Identity(4, 4));
    EXPECT_EQ(permutation_operator(Permutation{0, 1, 3, 2}).entries(), gates::cnot().entries());
    EXPECT_EQ(permutation_operator(Permutation{1, 0}).entries(), gates::pauli_x().entries());
    EXPECT_TRUE(permutation_operator(Permutation{2, 0, 3, 1}).is_unitary());
}

TEST(core, permutation_operator_rejects_non_bijection) {
    try {
        (void)permutation_operator(Permutation{0, 0, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "not_a_bijection");
    }
}

TEST(core, permutation_times_inverse_is_identity) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 1 + rng() % 16;
        const Permutation p = fixtures::random_permutation(rng, dim);
        const Matrix prod = permutation_operator(p).entries() * permutation_operator(inverse(p)).entries();
        EXPECT_EQ(prod, Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
    }
}

TEST(core, qubit_permutation_operator_examples) {
    const Permutation id2{0, 1};
    EXPECT_EQ(qubit_permutation_operator(id2, 2).entries(), Matrix::Identity(4, 4));

    const Permutation swap{1, 0};
    EXPECT_EQ(qubit_permutation_basis_map(swap, 2), (Permutation{0, 2, 1, 3}));

    const StateVector ghz = examples::ghz(2);
    EXPECT_EQ(apply(qubit_permutation_operator(swap, 2), ghz).amps(), ghz.amps());
}

TEST(core, qubit_permutation_relocates_bits) {
    // qubit 0 -> position 2, 1 -> 0, 2 -> 1 on three qubits: |100> (qubit 0 set) goes to |001>
    const Permutation eta{2, 0, 1};
    const Permutation map = qubit_permutation_basis_map(eta, 3);
    EXPECT_EQ(map[0b100], 0b001U);
    EXPECT_EQ(map[0b010], 0b100U);
    EXPECT_EQ(map[0b001], 0b010U);
}

TEST(core, cnot_conjugation_reproduces_h4) {
    const Matrix lhs = gates::cnot().entries() * examples::hq().entries() * gates::cnot().entries();
    EXPECT_EQ(lhs, examples::h4().entries());
}

TEST(core, tavis_cummings_single_atom_coupling) {
    const std::vector<double> g{0.37};
    const OperatorMatrix h = build_tavis_cummings(1, 1, 2.0, g);
    const std::size_t photon0_atom1 = tavis_cummings_index(0, 1, 1);
    const std::size_t photon1_atom0 = tavis_cummings_index(1, 0, 1);
    EXPECT_DOUBLE_EQ(h(photon0_atom1, photon1_atom0).real(), 0.37);
    EXPECT_DOUBLE_EQ(h(photon1_atom0, photon0_atom1).real(), 0.37);
    EXPECT_TRUE(h.is_hermitian(1e-12));
    EXPECT_EQ(h.n_qubits(), 2);
}

TEST(core, tavis_cummings_free_hamiltonian_is_diagonal) {
    const std::vector<double> g{0.0, 0.0};
    const double omega = 1.5;
    const double hbar = 0.5;
    const OperatorMatrix h = build_tavis_cummings(2, 2, omega, g, hbar);
    ASSERT_EQ(h.dim(), 12U);
    for (int n = 0; n <= 2; ++n) {
        for (std::size_t atoms = 0; atoms < 4; ++atoms) {
            const std::size_t j = tavis_cummings_index(n, atoms, 2);
            EXPECT_DOUBLE_EQ(h(j, j).real(), hbar * omega * (n + std::popcount(atoms)));
        }
    }
    Matrix off = h.entries();
    off.diagonal().setZero();
    EXPECT_EQ(off.cwiseAbs().maxCoeff(), 0.0);
}

TEST(core, tavis_cummings_equal_couplings_commute_with_atom_swap) {
    const std::vector<double> g{0.2, 0.2};
    const OperatorMatrix h = build_tavis_cummings(2, 1, 1.0, g);
    const Permutation swap_atoms{0, 2, 1};
    const Matrix p = qubit_permutation_operator(swap_atoms, 3).entries();
    EXPECT_LE(max_abs_diff(h.entries() * p, p * h.entries()), 1e-12);

    const std::vector<double> unequal{0.2, 0.3};
    const OperatorMatrix h2 = build_tavis_cummings(2, 1, 1.0, unequal);
    EXPECT_GT(max_abs_diff(h2.entries() * p, p * h2.entries()), 1e-3);
}

TEST(core, tavis_cummings_hermitian_property) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const int n_max = 1 + static_cast<int>(rng() % 4);
        std::vector<double> g(static_cast<std::size_t>(k));
        for (auto& x : g) {
            x = u(rng);
        }
        EXPECT_TRUE(build_tavis_cummings(k, n_max, u(rng), g).is_hermitian(1e-12));
    }
}

TEST(core, tavis_cummings_photon_truncation_ladder) {
    // a^+ sigma on |n_max, 1> has nowhere to go; the conjugate term on |n_max, 0> does.
    const std::vector<double> g{1.0};
    const OperatorMatrix h = build_tavis_cummings(1, 2, 0.0, g);
    const std::size_t top_excited = tavis_cummings_index(2, 1, 1);
    const Vector col = h.entries().col(static_cast<Eigen::Index>(top_excited));
    EXPECT_EQ(col.cwiseAbs().sum(), 0.0);
    const std::size_t top_ground = tavis_cummings_index(2, 0, 1);
    EXPECT_NEAR(h(tavis_cummings_index(1, 1, 1), top_ground).real(), std::sqrt(2.0), 1e-15);
}

TEST(core, tavis_cummings_rejects_bad_arguments) {
    const std::vector<double> g{1.0};
    EXPECT_THROW((void)build_tavis_cummings(1, 0, 1.0, g), Error);
    EXPECT_THROW((void)build_tavis_cummings(2, 1, 1.0, g), Error);
}

TEST(core, evolution_operator_is_unitary_and_matches_series) {
    std::mt19937_64 rng(9);
    const OperatorMatrix h = fixtures::random_hermitian(rng, 2);
    const double t = 0.3;
    const OperatorMatrix u = evolution_operator(h, t);
    EXPECT_TRUE(u.is_unitary(1e-12));
    // Taylor series oracle
    Matrix term = Matrix::Identity(4, 4);
    Matrix sum = term;
    for (int k = 1; k < 40; ++k) {
        term = term * h.entries() * Complex(0, -t) / static_cast<double>(k);
        sum += term;
    }
    EXPECT_LE(max_abs_diff(u.entries(), sum), 1e-12);
}

TEST(core, state_construction_validates) {
    Vector bad(2);
    bad << std::nan(""), 0;
    EXPECT_THROW(StateVector{bad}, Error);
    EXPECT_THROW(StateVector(Vector::Zero(3), 2), Error);
    EXPECT_EQ(StateVector(Vector::Zero(3)).n_qubits(), 0);
    EXPECT_EQ(StateVector(Vector::Zero(8)).n_qubits(), 3);
}
