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

// qcomplex command-line driver.
//
// Every subcommand reads JSON inputs, writes canonical JSON or CSV, and, when
// it writes a file, drops a <file>.manifest.json next to it recording the
// subcommand, its options and the SHA-256 of each input.

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcomplex/ampquant.hpp"
#include "qcomplex/complexity.hpp"
#include "qcomplex/core.hpp"
#include "qcomplex/grover.hpp"
#include "qcomplex/io.hpp"
#include "qcomplex/symmetry.hpp"

namespace {

using namespace qcomplex;
using io::json;

constexpr const char* kVersion = "0.1.0";

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("io", "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string data = buf.str();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::string hex;
    char byte[3];
    for (unsigned int k = 0; k < len; ++k) {
        std::snprintf(byte, sizeof byte, "%02x", digest[k]);
        hex += byte;
    }
    return hex;
}

/// Records what produced an output file.
class Manifest {
public:
    explicit Manifest(std::string command) : command_(std::move(command)) {}

    void option(const std::string& key, json value) { options_[key] = std::move(value); }
    void input(const std::string& path) { inputs_[path] = sha256_file(path); }

    void write_beside(const std::string& output) const {
        json m = {{"tool", "qcomplex"},
                  {"version", kVersion},
                  {"command", command_},
                  {"options", options_},
                  {"inputs", inputs_},
                  {"output", output}};
        io::write_text_file(output + ".manifest.json", io::dump_canonical(m));
    }

private:
    std::string command_;
    json options_ = json::object();
    json inputs_ = json::object();
};

void emit(const std::string& text, const std::string& out, const Manifest& manifest) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    io::write_text_file(out, text);
    manifest.write_beside(out);
}

json permutation_json(const Permutation& p) { return json(p); }

json blocks_json(const BlockDecomposition& d) { return json(d.blocks); }

// --- complexity ---------------------------------------------------------

struct ComplexityArgs {
    std::string state;
    std::string ham;
    std::string strategy = "exhaustive";
    double tol = kDefaultTol;
    int max_depth = -1;
    std::size_t beam_width = 2048;
    std::string out;
};

void run_complexity(const ComplexityArgs& a) {
    if (a.state.empty() == a.ham.empty()) {
        throw Error("usage", "give exactly one of --state or --ham");
    }
    Manifest m("complexity");
    m.option("strategy", a.strategy);
    m.option("tol", a.tol);
    m.option("max_depth", a.max_depth);
    m.option("beam_width", a.beam_width);
    const SearchStrategy strategy = parse_strategy(a.strategy);
    const HeuristicOptions opts{a.max_depth, a.beam_width};
    json j;
    if (!a.state.empty()) {
        m.input(a.state);
        const StateVector psi = io::read_state(a.state);
        const ComplexityReport r = quantum_complexity_state(psi, strategy, a.tol, opts);
        const NaiveComplexity naive = naive_complexity_state(psi, a.tol);
        j["kind"] = "state";
        j["blocks"] = blocks_json(naive.decomposition);
        j["naive"] = r.naive;
        j["quantum"] = r.quantum;
        j["witness"] = permutation_json(r.witness);
        j["strategy"] = std::string(to_string(r.strategy));
        j["certified"] = r.certified;
        j["candidates_evaluated"] = r.candidates_evaluated;
    } else {
        m.input(a.ham);
        const OperatorMatrix h = io::read_matrix(a.ham);
        const ComplexityReport r = quantum_complexity_h(h, strategy, a.tol, opts);
        j["kind"] = "hamiltonian";
        j["blocks"] = blocks_json(finest_blocks_h(h, a.tol));
        j["naive"] = r.naive;
        j["quantum"] = r.quantum;
        j["witness"] = permutation_json(r.witness);
        j["strategy"] = std::string(to_string(r.strategy));
        j["certified"] = r.certified;
        j["candidates_evaluated"] = r.candidates_evaluated;
    }
    emit(io::dump_canonical(j), a.out, m);
}

// --- symmetry -----------------------------------------------------------

struct SymmetryArgs {
    std::string ham;
    std::string state;
    std::optional<double> t;
    double hbar = 1.0;
    double tol = kDefaultTol;
    std::string out;
};

void run_symmetry(const SymmetryArgs& a) {
    Manifest m("symmetry");
    m.input(a.ham);
    m.input(a.state);
    m.option("hbar", a.hbar);
    m.option("tol", a.tol);
    m.option("t", a.t ? json(*a.t) : json(nullptr));
    const OperatorMatrix h = io::read_matrix(a.ham);
    const StateVector psi = io::read_state(a.state);
    if (h.n_qubits() <= 0) {
        throw Error("invalid_argument", "Hamiltonian dimension must be a power of two");
    }
    const CommutantGroup group = commutant(h, h.n_qubits(), a.tol);
    const ConnectivityReport conn = is_connected(psi, h, group, a.tol);

    json j;
    j["group_order"] = group.order();
    j["equilibrium"] = is_equilibrium(psi, h, a.tol);
    j["connected"] = conn.connected;
    j["h_psi_nonzero"] = conn.h_psi_nonzero;
    j["support"] = conn.support;
    j["lemma_ok"] = conn.connected ? json(lemma_column_permutation_check(psi, h, h, a.tol).ok) : json(nullptr);
    if (a.t) {
        const OperatorMatrix u = evolution_operator(h, *a.t, a.hbar);
        j["equilibrium_u"] = is_equilibrium(psi, u, a.tol);
        j["lemma_u_ok"] = conn.connected ? json(lemma_column_permutation_check(psi, h, u, a.tol).ok) : json(nullptr);
    }
    emit(io::dump_canonical(j), a.out, m);
}

// --- quantize -----------------------------------------------------------

struct QuantizeArgs {
    std::string state;
    std::string op;
    double eps = 0.0;
    std::optional<std::uint64_t> trace;
    double tol = kDefaultTol;
    std::string out;
};

json quantum_json(const AmplitudeQuantum& q) {
    return {{"id", q.id},
            {"b_in", q.b_in},
            {"b_fin", q.b_fin},
            {"t_in", std::string(to_string(q.t_in))},
            {"t_fin", std::string(to_string(q.t_fin))}};
}

void run_quantize(const QuantizeArgs& a) {
    Manifest m("quantize");
    m.input(a.state);
    m.input(a.op);
    m.option("eps", a.eps);
    m.option("tol", a.tol);
    const StateVector psi = io::read_state(a.state);
    const OperatorMatrix op = io::read_matrix(a.op);
    const Quantization theta = quantize(psi, op, a.eps, a.tol);

    if (a.trace) {
        std::cout << io::dump_canonical(quantum_json(trace_quantum(theta, *a.trace)));
        if (a.out.empty()) {
            return;
        }
    }
    json quanta = json::array();
    for (const auto& q : theta.quanta) {
        quanta.push_back(quantum_json(q));
    }
    const json j = {{"epsilon", theta.epsilon},
                    {"nu", theta.nu},
                    {"c", theta.c_of_eps},
                    {"quantum_size", theta.quantum_size()},
                    {"consistency_error", consistency_error(theta, op)},
                    {"condition_q", check_condition_q(theta.quanta).ok},
                    {"quanta", std::move(quanta)}};
    emit(io::dump_canonical(j), a.out, m);
}

// --- grover -------------------------------------------------------------

struct GroverArgs {
    int n = 0;
    std::size_t target = 0;
    double eps_min = 0.0;
    std::string iters = "optimal";
    std::string criterion = "probability";
    double threshold = 0.5;
    double jitter = 0.0;
    std::uint64_t seed = 0;
    std::string csv;
};

grover::SuccessCriterion parse_criterion(const std::string& s) {
    if (s == "probability") return grover::SuccessCriterion::probability;
    if (s == "rough_jump") return grover::SuccessCriterion::rough_jump;
    throw Error("usage", "unknown success criterion '" + s + "'", "expected probability or rough_jump");
}

std::string fmt(double x) { return io::format_double(x); }

void run_grover(const GroverArgs& a) {
    Manifest m("grover");
    m.option("n", a.n);
    m.option("target", a.target);
    m.option("eps_min", a.eps_min);
    m.option("iters", a.iters);
    m.option("criterion", a.criterion);
    m.option("threshold", a.threshold);
    m.option("jitter", a.jitter);
    m.option("seed", a.seed);

    grover::GroverConfig cfg;
    cfg.n = a.n;
    cfg.target = a.target;
    cfg.eps_min = a.eps_min;
    cfg.criterion = parse_criterion(a.criterion);
    cfg.success_threshold = a.threshold;
    cfg.jitter = a.jitter;
    cfg.jitter_seed = a.seed;
    if (a.iters != "optimal") {
        try {
            cfg.iterations = std::stoi(a.iters);
        } catch (const std::exception&) {
            throw Error("usage", "--iters must be an integer or 'optimal'", a.iters);
        }
    }
    const grover::RunRecord r = grover::run_gsa(cfg);

    std::string csv = "iter,beta_re,beta_im,alpha_modulus,support_size,success\n";
    for (const auto& s : r.steps) {
        csv += std::to_string(s.iter) + ',' + fmt(s.beta.real()) + ',' + fmt(s.beta.imag()) + ',' +
               fmt(s.alpha_modulus) + ',' + std::to_string(s.support_size) + ',' + (s.success ? "1" : "0") + '\n';
    }
    emit(csv, a.csv, m);
    if (!a.csv.empty() && a.csv != "-") {
        const json summary = {{"iterations", r.iterations},
                              {"final_success_probability", r.final_success_probability},
                              {"iterations_to_success", r.iterations_to_success ? json(*r.iterations_to_success)
                                                                                : json(nullptr)},
                              {"all_dropped", r.all_dropped},
                              {"all_dropped_at", r.all_dropped_at ? json(*r.all_dropped_at) : json(nullptr)}};
        std::cout << io::dump_canonical(summary);
    }
}

// --- estimate-q ---------------------------------------------------------

struct EstimateArgs {
    int n_min = 2;
    int n_max = 14;
    double eps_min = 0.0;
    std::string criterion = "probability";
    double threshold = 0.5;
    std::string csv;
};

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

void run_estimate(const EstimateArgs& a) {
    Manifest m("estimate-q");
    m.option("n_min", a.n_min);
    m.option("n_max", a.n_max);
    m.option("eps_min", a.eps_min);
    m.option("criterion", a.criterion);
    m.option("threshold", a.threshold);
    grover::EstimateOptions opts;
    opts.criterion = parse_criterion(a.criterion);
    opts.success_threshold = a.threshold;
    const grover::QEstimate q = grover::estimate_q(a.n_min, a.n_max, a.eps_min, opts);

    std::string csv =
        "n,uniform_amplitude,predicted_breakdown,iterations,untruncated_success_iter,truncated_success_iter,"
        "untruncated_final_probability,truncated_final_probability,all_dropped,deviates\n";
    for (const auto& row : q.rows) {
        csv += std::to_string(row.n) + ',' + fmt(row.uniform_amplitude) + ',' + (row.predicted_breakdown ? "1" : "0") +
               ',' + std::to_string(row.iterations) + ',' + opt_int(row.untruncated_success_iter) + ',' +
               opt_int(row.truncated_success_iter) + ',' + fmt(row.untruncated_final_probability) + ',' +
               fmt(row.truncated_final_probability) + ',' + (row.all_dropped ? "1" : "0") + ',' +
               (row.deviates ? "1" : "0") + '\n';
    }
    emit(csv, a.csv, m);
    if (!a.csv.empty() && a.csv != "-") {
        const json summary = {{"eps_min", q.eps_min},
                              {"q_hat", q.q_hat ? json(*q.q_hat) : json(nullptr)},
                              {"q_from_eps", q.q_from_eps ? json(*q.q_from_eps) : json(nullptr)}};
        std::cout << io::dump_canonical(summary);
    }
}

// --- gen-fixture --------------------------------------------------------

struct FixtureArgs {
    std::string kind;
    int n = 2;
    double t = 0.0;
    std::size_t target = 0;
    int k = 2;
    int n_max = 1;
    double omega = 1.0;
    std::vector<double> g;
    double hbar = 1.0;
    std::string ham;
    std::size_t seed_index = 0;
    std::string pattern;
    std::string out;
};

std::vector<Complex> parse_pattern(const std::string& s) {
    std::vector<Complex> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(to_complex(parse_amplitude_type(item)));
        }
    }
    return out;
}

void run_fixture(const FixtureArgs& a) {
    Manifest m("gen-fixture");
    m.option("kind", a.kind);
    json j;
    if (a.kind == "ghz") {
        m.option("n", a.n);
        j = io::state_to_json(examples::ghz(a.n));
    } else if (a.kind == "gsa") {
        m.option("n", a.n);
        m.option("t", a.t);
        m.option("target", a.target);
        j = io::state_to_json(grover::build_gsa_state(a.n, a.target, a.t));
    } else if (a.kind == "h4") {
        j = io::matrix_to_json(examples::h4());
    } else if (a.kind == "hq") {
        j = io::matrix_to_json(examples::hq());
    } else if (a.kind == "tavis_cummings") {
        m.option("k", a.k);
        m.option("n_max", a.n_max);
        m.option("omega", a.omega);
        m.option("g", a.g);
        m.option("hbar", a.hbar);
        std::vector<double> g = a.g;
        if (g.size() == 1 && a.k > 1) {
            g.assign(static_cast<std::size_t>(a.k), g.front());
        }
        j = io::matrix_to_json(build_tavis_cummings(a.k, a.n_max, a.omega, g, a.hbar));
    } else if (a.kind == "connected") {
        if (a.ham.empty()) {
            throw Error("usage", "--kind connected requires --ham");
        }
        m.input(a.ham);
        m.option("seed_index", a.seed_index);
        m.option("pattern", a.pattern);
        const OperatorMatrix h = io::read_matrix(a.ham);
        j = io::state_to_json(build_connected_state(h, h.n_qubits(), a.seed_index, parse_pattern(a.pattern)));
    } else {
        throw Error("usage", "unknown fixture kind '" + a.kind + "'",
                    "expected ghz, gsa, h4, hq, tavis_cummings or connected");
    }
    emit(io::dump_canonical(j), a.out, m);
}

void print_error(const std::string& code, const std::string& message, const std::string& context) {
    const json e = {{"code", code}, {"message", message}, {"context", context}};
    std::cerr << io::dump_canonical(e);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum complexity toolkit: canonical transformations, symmetry, amplitude quanta, Grover"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    ComplexityArgs ca;
    auto* complexity = app.add_subcommand("complexity", "Naive and quantum complexity of a state or Hamiltonian");
    complexity->add_option("--state", ca.state, "State JSON file")->check(CLI::ExistingFile);
    complexity->add_option("--ham", ca.ham, "Hamiltonian JSON file")->check(CLI::ExistingFile);
    complexity->add_option("--strategy", ca.strategy, "exhaustive or heuristic")->capture_default_str();
    complexity->add_option("--tol", ca.tol, "Factorization tolerance")->capture_default_str();
    complexity->add_option("--max-depth", ca.max_depth, "Heuristic CNOT depth, -1 for n")->capture_default_str();
    complexity->add_option("--beam-width", ca.beam_width, "Heuristic beam width")->capture_default_str();
    complexity->add_option("--out", ca.out, "Output JSON file (default stdout)");

    SymmetryArgs sa;
    double t_value = 0.0;
    auto* symmetry = app.add_subcommand("symmetry", "Commutant, equilibrium, connectivity and column-permutation check");
    symmetry->add_option("--ham", sa.ham, "Hamiltonian JSON file")->required()->check(CLI::ExistingFile);
    symmetry->add_option("--state", sa.state, "State JSON file")->required()->check(CLI::ExistingFile);
    auto* t_opt = symmetry->add_option("--t", t_value, "Also check exp(-iHt/hbar)");
    symmetry->add_option("--hbar", sa.hbar, "Reduced Planck constant")->capture_default_str();
    symmetry->add_option("--tol", sa.tol, "Comparison tolerance")->capture_default_str();
    symmetry->add_option("--out", sa.out, "Output JSON file (default stdout)");

    QuantizeArgs qa;
    std::uint64_t trace_id = 0;
    auto* quant = app.add_subcommand("quantize", "Amplitude quantization of a state under one operator");
    quant->add_option("--state", qa.state, "State JSON file")->required()->check(CLI::ExistingFile);
    quant->add_option("--op", qa.op, "Operator JSON file")->required()->check(CLI::ExistingFile);
    quant->add_option("--eps", qa.eps, "Grid size")->required()->check(CLI::PositiveNumber);
    auto* trace_opt = quant->add_option("--trace", trace_id, "Print the trajectory of one quantum id");
    quant->add_option("--tol", qa.tol, "Equilibrium tolerance")->capture_default_str();
    quant->add_option("--out", qa.out, "Quanta JSON file (default stdout)");

    GroverArgs ga;
    auto* grover_cmd = app.add_subcommand("grover", "Grover search with optional amplitude truncation");
    grover_cmd->add_option("--n", ga.n, "Qubit count")->required();
    grover_cmd->add_option("--target", ga.target, "Target basis index")->capture_default_str();
    grover_cmd->add_option("--eps-min", ga.eps_min, "Truncation threshold, 0 disables")->capture_default_str();
    grover_cmd->add_option("--iters", ga.iters, "Iteration count or 'optimal'")->capture_default_str();
    grover_cmd->add_option("--criterion", ga.criterion, "probability or rough_jump")->capture_default_str();
    grover_cmd->add_option("--threshold", ga.threshold, "Success probability threshold")->capture_default_str();
    grover_cmd->add_option("--jitter", ga.jitter, "Relative amplitude noise per iteration")->capture_default_str();
    grover_cmd->add_option("--seed", ga.seed, "Jitter seed")->capture_default_str();
    grover_cmd->add_option("--csv", ga.csv, "Per-iteration CSV file (default stdout)");

    EstimateArgs ea;
    auto* estimate = app.add_subcommand("estimate-q", "Sweep n at fixed eps_min and locate the truncation breakdown");
    estimate->add_option("--n-min", ea.n_min, "Smallest qubit count")->capture_default_str();
    estimate->add_option("--n-max", ea.n_max, "Largest qubit count")->capture_default_str();
    estimate->add_option("--eps-min", ea.eps_min, "Truncation threshold")->required();
    estimate->add_option("--criterion", ea.criterion, "probability or rough_jump")->capture_default_str();
    estimate->add_option("--threshold", ea.threshold, "Success probability threshold")->capture_default_str();
    estimate->add_option("--csv", ea.csv, "Table CSV file (default stdout)");

    FixtureArgs fa;
    auto* fixture = app.add_subcommand("gen-fixture", "Write a state or Hamiltonian fixture");
    fixture->add_option("--kind", fa.kind, "ghz, gsa, h4, hq, tavis_cummings, connected")->required();
    fixture->add_option("--n", fa.n, "Qubit count (ghz, gsa)")->capture_default_str();
    fixture->add_option("--t", fa.t, "Angle (gsa)")->capture_default_str();
    fixture->add_option("--target", fa.target, "Target index (gsa)")->capture_default_str();
    fixture->add_option("--k", fa.k, "Atom count (tavis_cummings)")->capture_default_str();
    fixture->add_option("--n-max", fa.n_max, "Photon cutoff (tavis_cummings)")->capture_default_str();
    fixture->add_option("--omega", fa.omega, "Frequency (tavis_cummings)")->capture_default_str();
    fixture->add_option("--g", fa.g, "Couplings, one per atom or one shared (tavis_cummings)")->delimiter(',');
    fixture->add_option("--hbar", fa.hbar, "Reduced Planck constant (tavis_cummings)")->capture_default_str();
    fixture->add_option("--ham", fa.ham, "Hamiltonian JSON file (connected)")->check(CLI::ExistingFile);
    fixture->add_option("--seed-index", fa.seed_index, "Seed basis index (connected)")->capture_default_str();
    fixture->add_option("--pattern", fa.pattern, "Comma-separated phases from +1,-1,+i,-i (connected)");
    fixture->add_option("--out", fa.out, "Output JSON file (default stdout)");

    if (argc <= 1) {
        std::cerr << app.help();
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*complexity) {
            run_complexity(ca);
        } else if (*symmetry) {
            if (*t_opt) {
                sa.t = t_value;
            }
            run_symmetry(sa);
        } else if (*quant) {
            if (*trace_opt) {
                qa.trace = trace_id;
            }
            run_quantize(qa);
        } else if (*grover_cmd) {
            run_grover(ga);
        } else if (*estimate) {
            run_estimate(ea);
        } else if (*fixture) {
            run_fixture(fa);
        }
    } catch (const Error& e) {
        print_error(e.code(), e.what(), e.context());
        return e.code() == "usage" ? 2 : 1;
    } catch (const json::exception& e) {
        print_error("schema", e.what(), "");
        return 1;
    }
    return 0;
}
