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

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "qcomplex/io.hpp"

namespace fs = std::filesystem;
using qcomplex::io::json;

namespace {

struct Result {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qcomplex_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    Result run(const std::string& args) const {
        const fs::path out = dir_ / "stdout.txt";
        const fs::path err = dir_ / "stderr.txt";
        const std::string cmd = std::string(QCOMPLEX_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
        const int raw = std::system(cmd.c_str());
        Result r;
        r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, no_arguments_is_usage_error) {
    const Result r = run("");
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST_F(Cli, unknown_subcommand_and_missing_option_are_usage_errors) {
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("grover").status, 2);
    EXPECT_EQ(run("quantize --state x").status, 2);
}

TEST_F(Cli, ghz_complexity_round_trip) {
    ASSERT_EQ(run("gen-fixture --kind ghz --n 3 --out " + path("ghz.json")).status, 0);
    EXPECT_TRUE(fs::exists(path("ghz.json.manifest.json")));
    const Result r = run("complexity --state " + path("ghz.json"));
    ASSERT_EQ(r.status, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["naive"], 3);
    EXPECT_EQ(j["quantum"], 1);
    EXPECT_EQ(j["certified"], true);
    EXPECT_EQ(j["strategy"], "exhaustive");
}

TEST_F(Cli, h4_matrix_has_unit_quantum_complexity) {
    ASSERT_EQ(run("gen-fixture --kind h4 --out " + path("h4.json")).status, 0);
    const Result r = run("complexity --ham " + path("h4.json") + " --strategy exhaustive");
    ASSERT_EQ(r.status, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["naive"], 2);
    EXPECT_EQ(j["quantum"], 1);
    EXPECT_EQ(j["witness"], json({0, 1, 3, 2}));
}

TEST_F(Cli, symmetry_report) {
    ASSERT_EQ(run("gen-fixture --kind hq --out " + path("hq.json")).status, 0);
    ASSERT_EQ(run("gen-fixture --kind connected --ham " + path("hq.json") +
                  " --seed-index 1 --pattern +1,+1 --out " + path("psi.json"))
                  .status,
              0);
    const Result r = run("symmetry --ham " + path("hq.json") + " --state " + path("psi.json") + " --t 0.7");
    ASSERT_EQ(r.status, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["group_order"], 2);
    EXPECT_EQ(j["connected"], true);
    EXPECT_EQ(j["equilibrium"], true);
    EXPECT_EQ(j["lemma_ok"], true);
    EXPECT_EQ(j["equilibrium_u"], true);
    EXPECT_EQ(j["lemma_u_ok"], true);
}

TEST_F(Cli, quantize_and_trace) {
    qcomplex::io::write_text_file(path("x.json"), R"({"dim":2,"entries":[[[0,0],[1,0]],[[1,0],[0,0]]]})");
    qcomplex::io::write_text_file(path("zero.json"), R"({"n_qubits":1,"dim":2,"amps":[[1,0],[0,0]]})");
    const Result r = run("quantize --state " + path("zero.json") + " --op " + path("x.json") +
                         " --eps 0.5 --out " + path("quanta.json"));
    ASSERT_EQ(r.status, 0) << r.err;
    const json j = qcomplex::io::read_json_file(path("quanta.json"));
    EXPECT_EQ(j["nu"], 2);
    EXPECT_EQ(j["c"], 1.0);
    ASSERT_EQ(j["quanta"].size(), 4U);
    EXPECT_EQ(j["quanta"][3], json({{"id", 3}, {"b_in", 0}, {"b_fin", 1}, {"t_in", "+1"}, {"t_fin", "+1"}}));

    const Result t = run("quantize --state " + path("zero.json") + " --op " + path("x.json") + " --eps 0.5 --trace 2");
    ASSERT_EQ(t.status, 0) << t.err;
    EXPECT_EQ(json::parse(t.out)["id"], 2);

    const Result bad = run("quantize --state " + path("zero.json") + " --op " + path("x.json") + " --eps 0.5 --trace 9");
    EXPECT_EQ(bad.status, 1);
    EXPECT_EQ(json::parse(bad.err)["code"], "unknown_id");
}

TEST_F(Cli, grover_csv_and_manifest) {
    const Result r = run("grover --n 3 --eps-min 0.2 --csv " + path("g.csv"));
    ASSERT_EQ(r.status, 0) << r.err;
    const std::string csv = slurp(path("g.csv"));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "iter,beta_re,beta_im,alpha_modulus,support_size,success");
    EXPECT_NE(csv.find("\n1,1,0,0,1,1\n"), std::string::npos) << csv;
    const json summary = json::parse(r.out);
    EXPECT_EQ(summary["iterations_to_success"], 1);
    const json manifest = qcomplex::io::read_json_file(path("g.csv.manifest.json"));
    EXPECT_EQ(manifest["command"], "grover");
    EXPECT_EQ(manifest["options"]["eps_min"], 0.2);
}

TEST_F(Cli, estimate_q_summary) {
    const Result r = run("estimate-q --n-min 2 --n-max 14 --eps-min 0.03125 --csv " + path("q.csv"));
    ASSERT_EQ(r.status, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["q_hat"], 11);
    EXPECT_EQ(j["q_from_eps"], 10.0);
    const std::string csv = slurp(path("q.csv"));
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 14);
}

TEST_F(Cli, outputs_are_reproducible) {
    ASSERT_EQ(run("gen-fixture --kind tavis_cummings --k 2 --n-max 1 --g 0.3 --out " + path("tc.json")).status, 0);
    ASSERT_EQ(run("complexity --ham " + path("tc.json") + " --strategy heuristic --out " + path("a.json")).status, 0);
    ASSERT_EQ(run("complexity --ham " + path("tc.json") + " --strategy heuristic --out " + path("b.json")).status, 0);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    const json ma = qcomplex::io::read_json_file(path("a.json.manifest.json"));
    const json mb = qcomplex::io::read_json_file(path("b.json.manifest.json"));
    EXPECT_EQ(ma["inputs"], mb["inputs"]);
    EXPECT_EQ(ma["options"], mb["options"]);
}

TEST_F(Cli, domain_errors_are_json_on_stderr) {
    ASSERT_EQ(run("gen-fixture --kind ghz --n 4 --out " + path("g4.json")).status, 0);
    const Result big = run("complexity --state " + path("g4.json") + " --strategy exhaustive");
    EXPECT_EQ(big.status, 1);
    const json e = json::parse(big.err);
    EXPECT_EQ(e["code"], "search_too_large");
    EXPECT_TRUE(e.contains("message"));
    EXPECT_TRUE(e.contains("context"));

    qcomplex::io::write_text_file(path("broken.json"), "{not json");
    const Result parse = run("complexity --state " + path("broken.json"));
    EXPECT_EQ(parse.status, 1);
    EXPECT_EQ(json::parse(parse.err)["code"], "parse");

    EXPECT_EQ(run("gen-fixture --kind nonsense").status, 2);
}
