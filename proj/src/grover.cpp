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

#include "qcomplex/grover.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "qcomplex/complexity.hpp"

namespace qcomplex::grover {

namespace {

void validate(int n, std::size_t target) {
    if (n < 1 || n > kMaxGroverQubits) {
        throw Error("invalid_argument", "Grover simulation supports 1 <= n <= " + std::to_string(kMaxGroverQubits));
    }
    if (target >= (std::size_t{1} << n)) {
        throw Error("invalid_argument", "target " + std::to_string(target) + " outside 2^" + std::to_string(n));
    }
}

IterationRecord observe(const StateVector& psi, std::size_t target, int iter, const GroverConfig& cfg) {
    IterationRecord r;
    r.iter = iter;
    r.beta = psi[target];
    for (std::size_t j = 0; j < psi.dim(); ++j) {
        const double m = std::abs(psi[j]);
        if (m > 0.0) {
            ++r.support_size;
        }
        if (j != target) {
            r.alpha_modulus = std::max(r.alpha_modulus, m);
        }
    }
    const double beta_mod = std::abs(r.beta);
    if (cfg.criterion == SuccessCriterion::probability) {
        r.success = beta_mod * beta_mod >= cfg.success_threshold;
    } else {
        r.success = beta_mod - r.alpha_modulus >= 1.0 / std::sqrt(static_cast<double>(psi.dim()));
    }
    return r;
}

}  // namespace

double base_angle(int n) { return std::asin(std::exp2(-0.5 * n)); }

int optimal_iterations(int n) {
    return static_cast<int>(std::floor(std::numbers::pi / (4.0 * base_angle(n))));
}

StateVector build_gsa_state(int n, std::size_t target, double t) {
    validate(n, target);
    const std::size_t dim = std::size_t{1} << n;
    const double alpha = std::cos(t) / std::sqrt(static_cast<double>(dim - 1));
    Vector v = Vector::Constant(static_cast<Eigen::Index>(dim), alpha);
    v(static_cast<Eigen::Index>(target)) = std::sin(t);
    return StateVector(std::move(v), n);
}

StateVector gsa_step(const StateVector& psi, std::size_t target) {
    if (target >= psi.dim()) {
        throw Error("invalid_argument", "target outside the state dimension");
    }
    Vector v = psi.amps();
    v(static_cast<Eigen::Index>(target)) *= -1.0;
    const Complex mean = v.mean();
    v = (2.0 * mean) - v.array();
    return StateVector(std::move(v), psi.n_qubits());
}

TruncationResult truncate_renormalize(const StateVector& psi, double eps_min) {
    if (eps_min < 0.0) {
        throw Error("invalid_argument", "eps_min must be non-negative");
    }
    if (eps_min == 0.0) {
        return {psi, 0, false};
    }
    Vector v = psi.amps();
    std::size_t dropped = 0;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        const double m = std::abs(v(j));
        if (m > 0.0 && m < eps_min) {
            v(j) = 0.0;
            ++dropped;
        }
    }
    const double norm = v.norm();
    if (norm == 0.0) {
        return {psi, dropped, true};
    }
    if (dropped == 0) {
        return {psi, 0, false};
    }
    return {StateVector(v / norm, psi.n_qubits()), dropped, false};
}

RunRecord run_gsa(const GroverConfig& cfg) {
    validate(cfg.n, cfg.target);
    if (cfg.eps_min < 0.0 || cfg.jitter < 0.0) {
        throw Error("invalid_argument", "eps_min and jitter must be non-negative");
    }
    RunRecord rec;
    rec.config = cfg;
    rec.iterations = cfg.iterations.value_or(optimal_iterations(cfg.n));
    if (rec.iterations < 0) {
        throw Error("invalid_argument", "iteration count must be non-negative");
    }

    std::mt19937_64 rng(cfg.jitter_seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    StateVector psi = examples::uniform(cfg.n);
    rec.steps.push_back(observe(psi, cfg.target, 0, cfg));
    for (int k = 1; k <= rec.iterations; ++k) {
        psi = gsa_step(psi, cfg.target);
        if (cfg.jitter > 0.0) {
            Vector v = psi.amps();
            for (Eigen::Index j = 0; j < v.size(); ++j) {
                v(j) *= 1.0 + cfg.jitter * unit(rng);
            }
            psi = StateVector(v / v.norm(), psi.n_qubits());
        }
        std::size_t dropped = 0;
        if (cfg.eps_min > 0.0) {
            TruncationResult t = truncate_renormalize(psi, cfg.eps_min);
            if (t.all_dropped) {
                rec.all_dropped = true;
                rec.all_dropped_at = k;
                break;
            }
            dropped = t.dropped;
            psi = std::move(t.state);
        }
        IterationRecord r = observe(psi, cfg.target, k, cfg);
        r.dropped = dropped;
        r.renormalized = dropped > 0;
        rec.steps.push_back(r);
    }
    for (const auto& s : rec.steps) {
        if (s.success) {
            rec.iterations_to_success = s.iter;
            break;
        }
    }
    const Complex beta = rec.steps.back().beta;
    rec.final_success_probability = std::norm(beta);
    return rec;
}

QEstimate estimate_q(int n_min, int n_max, double eps_min, EstimateOptions opts) {
    if (n_min < 1 || n_max > kMaxGroverQubits || n_min > n_max) {
        throw Error("invalid_argument", "estimate-q requires 1 <= n_min <= n_max <= " +
                                            std::to_string(kMaxGroverQubits));
    }
    if (eps_min < 0.0) {
        throw Error("invalid_argument", "eps_min must be non-negative");
    }
    QEstimate out;
    out.eps_min = eps_min;
    if (eps_min > 0.0) {
        out.q_from_eps = -2.0 * std::log2(eps_min);
    }
    const auto count = static_cast<std::size_t>(n_max - n_min + 1);
    out.rows.resize(count);

    auto run_row = [&](std::size_t k) {
        QEstimateRow& row = out.rows[k];
        row.n = n_min + static_cast<int>(k);
        row.uniform_amplitude = std::exp2(-0.5 * row.n);
        row.predicted_breakdown = eps_min > 0.0 && row.uniform_amplitude < eps_min;
        GroverConfig cfg;
        cfg.n = row.n;
        cfg.target = opts.target % (std::size_t{1} << row.n);
        cfg.criterion = opts.criterion;
        cfg.success_threshold = opts.success_threshold;
        const RunRecord plain = run_gsa(cfg);
        cfg.eps_min = eps_min;
        const RunRecord cut = run_gsa(cfg);
        row.iterations = plain.iterations;
        row.untruncated_success_iter = plain.iterations_to_success;
        row.truncated_success_iter = cut.iterations_to_success;
        row.untruncated_final_probability = plain.final_success_probability;
        row.truncated_final_probability = cut.final_success_probability;
        row.all_dropped = cut.all_dropped;
        row.deviates = cut.all_dropped || plain.iterations_to_success != cut.iterations_to_success ||
                       std::abs(plain.final_success_probability - cut.final_success_probability) > 1e-9;
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < count; k = next++) {
            run_row(k);
        }
    };
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(count));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }

    for (const auto& row : out.rows) {
        if (row.predicted_breakdown) {
            out.q_hat = row.n;
            break;
        }
    }
    return out;
}

}  // namespace qcomplex::grover
