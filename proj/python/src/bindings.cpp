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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcomplex/ampquant.hpp"
#include "qcomplex/complexity.hpp"
#include "qcomplex/core.hpp"
#include "qcomplex/grover.hpp"
#include "qcomplex/symmetry.hpp"

namespace py = pybind11;
using namespace qcomplex;

namespace {

// States cross the boundary as 1-D complex arrays and operators as 2-D ones.

StateVector state(const Vector& amps) { return StateVector(amps); }
OperatorMatrix op(const Matrix& m) { return OperatorMatrix(m); }

py::dict report_dict(const ComplexityReport& r) {
    py::dict d;
    d["naive"] = r.naive;
    d["quantum"] = r.quantum;
    d["witness"] = r.witness;
    d["strategy"] = std::string(to_string(r.strategy));
    d["certified"] = r.certified;
    d["candidates_evaluated"] = r.candidates_evaluated;
    return d;
}

grover::SuccessCriterion criterion(const std::string& s) {
    if (s == "probability") return grover::SuccessCriterion::probability;
    if (s == "rough_jump") return grover::SuccessCriterion::rough_jump;
    throw Error("invalid_argument", "unknown success criterion '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_qcomplex, m) {
    m.doc() = "Native core of the qcomplex package";

    static py::exception<Error> error(m, "QcomplexError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            py::object err = error;
            PyErr_SetObject(err.ptr(), py::make_tuple(e.code(), e.what(), e.context()).ptr());
        }
    });

    // core
    m.def("ghz", [](int n) { return examples::ghz(n).amps(); }, py::arg("n"));
    m.def("uniform", [](int n) { return examples::uniform(n).amps(); }, py::arg("n"));
    m.def("h4", [] { return examples::h4().entries(); });
    m.def("hq", [] { return examples::hq().entries(); });
    m.def("cnot", [] { return gates::cnot().entries(); });
    m.def(
        "tavis_cummings",
        [](int k, int n_max, double omega, const std::vector<double>& g, double hbar) {
            return build_tavis_cummings(k, n_max, omega, g, hbar).entries();
        },
        py::arg("k"), py::arg("n_max"), py::arg("omega"), py::arg("g"), py::arg("hbar") = 1.0);
    m.def(
        "evolution_operator",
        [](const Matrix& h, double t, double hbar) { return evolution_operator(op(h), t, hbar).entries(); },
        py::arg("h"), py::arg("t"), py::arg("hbar") = 1.0);
    m.def("cross_norm", [](const Vector& v) { return state_cross_norm(state(v)); }, py::arg("psi"));
    m.def(
        "permute_state", [](const Vector& v, const Permutation& p) { return permute_state(state(v), p).amps(); },
        py::arg("psi"), py::arg("perm"));

    // complexity
    m.def(
        "naive_complexity_state",
        [](const Vector& v, double tol) {
            const NaiveComplexity nc = naive_complexity_state(state(v), tol);
            py::dict d;
            d["nu"] = nc.nu;
            d["blocks"] = nc.decomposition.blocks;
            return d;
        },
        py::arg("psi"), py::arg("tol") = kDefaultTol);
    m.def(
        "naive_complexity_h", [](const Matrix& h, double tol) { return naive_complexity_h(op(h), tol); },
        py::arg("h"), py::arg("tol") = kDefaultTol);
    m.def(
        "quantum_complexity_state",
        [](const Vector& v, const std::string& strategy, double tol) {
            return report_dict(quantum_complexity_state(state(v), parse_strategy(strategy), tol));
        },
        py::arg("psi"), py::arg("strategy") = "exhaustive", py::arg("tol") = kDefaultTol);
    m.def(
        "quantum_complexity_h",
        [](const Matrix& h, const std::string& strategy, double tol) {
            return report_dict(quantum_complexity_h(op(h), parse_strategy(strategy), tol));
        },
        py::arg("h"), py::arg("strategy") = "exhaustive", py::arg("tol") = kDefaultTol);
    m.def("accuracy_budget", &accuracy_budget, py::arg("complexity"), py::arg("q"));
    m.def("epsilon_from_q", &epsilon_from_q, py::arg("q"));

    // symmetry
    m.def(
        "commutant",
        [](const Matrix& h, double tol) {
            const OperatorMatrix a = op(h);
            return commutant(a, a.n_qubits(), tol).members;
        },
        py::arg("h"), py::arg("tol") = kDefaultTol);
    m.def(
        "is_equilibrium", [](const Vector& v, const Matrix& a, double tol) { return is_equilibrium(state(v), op(a), tol); },
        py::arg("psi"), py::arg("a"), py::arg("tol") = kDefaultTol);
    m.def(
        "is_connected",
        [](const Vector& v, const Matrix& h, double tol) { return is_connected(state(v), op(h), tol).connected; },
        py::arg("psi"), py::arg("h"), py::arg("tol") = kDefaultTol);
    m.def(
        "lemma_check",
        [](const Vector& v, const Matrix& h, const Matrix& mat, double tol) {
            return lemma_column_permutation_check(state(v), op(h), op(mat), tol).ok;
        },
        py::arg("psi"), py::arg("h"), py::arg("m"), py::arg("tol") = kDefaultTol);
    m.def(
        "build_connected_state",
        [](const Matrix& h, std::size_t seed, const std::vector<Complex>& pattern) {
            const OperatorMatrix a = op(h);
            return build_connected_state(a, a.n_qubits(), seed, pattern).amps();
        },
        py::arg("h"), py::arg("seed"), py::arg("pattern") = std::vector<Complex>{});

    // ampquant
    m.def(
        "quantize",
        [](const Vector& v, const Matrix& a, double eps) {
            const Quantization theta = quantize(state(v), op(a), eps);
            py::list quanta;
            for (const auto& q : theta.quanta) {
                quanta.append(py::make_tuple(q.id, q.b_in, q.b_fin, std::string(to_string(q.t_in)),
                                             std::string(to_string(q.t_fin))));
            }
            py::dict d;
            d["epsilon"] = theta.epsilon;
            d["nu"] = theta.nu;
            d["c"] = theta.c_of_eps;
            d["condition_q"] = check_condition_q(theta.quanta).ok;
            d["quanta"] = quanta;
            return d;
        },
        py::arg("psi"), py::arg("a"), py::arg("eps"));
    m.def(
        "consistency_error",
        [](const Vector& v, const Matrix& a, double eps) { return consistency_error(state(v), op(a), eps); },
        py::arg("psi"), py::arg("a"), py::arg("eps"));

    // grover
    m.def(
        "gsa_state", [](int n, std::size_t target, double t) { return grover::build_gsa_state(n, target, t).amps(); },
        py::arg("n"), py::arg("target"), py::arg("t"));
    m.def("optimal_iterations", &grover::optimal_iterations, py::arg("n"));
    m.def(
        "run_gsa",
        [](int n, std::size_t target, double eps_min, std::optional<int> iterations, const std::string& crit) {
            grover::GroverConfig cfg;
            cfg.n = n;
            cfg.target = target;
            cfg.eps_min = eps_min;
            cfg.iterations = iterations;
            cfg.criterion = criterion(crit);
            const grover::RunRecord r = grover::run_gsa(cfg);
            py::list beta;
            py::list support;
            for (const auto& s : r.steps) {
                beta.append(s.beta);
                support.append(s.support_size);
            }
            py::dict d;
            d["iterations"] = r.iterations;
            d["beta"] = beta;
            d["support_size"] = support;
            d["final_success_probability"] = r.final_success_probability;
            d["iterations_to_success"] = r.iterations_to_success;
            d["all_dropped"] = r.all_dropped;
            return d;
        },
        py::arg("n"), py::arg("target") = 0, py::arg("eps_min") = 0.0, py::arg("iterations") = py::none(),
        py::arg("criterion") = "probability");
    m.def(
        "estimate_q",
        [](int n_min, int n_max, double eps_min) {
            const grover::QEstimate q = grover::estimate_q(n_min, n_max, eps_min);
            py::dict d;
            d["q_hat"] = q.q_hat;
            d["q_from_eps"] = q.q_from_eps;
            py::list rows;
            for (const auto& row : q.rows) {
                py::dict r;
                r["n"] = row.n;
                r["predicted_breakdown"] = row.predicted_breakdown;
                r["deviates"] = row.deviates;
                r["all_dropped"] = row.all_dropped;
                rows.append(r);
            }
            d["rows"] = rows;
            return d;
        },
        py::arg("n_min"), py::arg("n_max"), py::arg("eps_min"));
}
