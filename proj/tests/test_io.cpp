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

#include "qcomplex/io.hpp"

#include <filesystem>
#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace qcomplex;

TEST(io, format_double_round_trips) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int trial = 0; trial < 1000; ++trial) {
        const double x = u(rng) * std::exp2(static_cast<double>(rng() % 40) - 20);
        EXPECT_EQ(std::stod(io::format_double(x)), x);
    }
    EXPECT_EQ(io::format_double(0.5), "0.5");
    EXPECT_EQ(io::format_double(1.0), "1");
    EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}

TEST(io, canonical_dump_sorts_keys) {
    const io::json j = {{"b", 1}, {"a", {{"z", 0.25}, {"y", "text"}}}, {"c", {true, nullptr}}};
    EXPECT_EQ(io::dump_canonical(j), "{\"a\":{\"y\":\"text\",\"z\":0.25},\"b\":1,\"c\":[true,null]}\n");
}

TEST(io, state_and_matrix_round_trip_byte_identical) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector psi = fixtures::random_state(rng, 1 + static_cast<int>(rng() % 4));
        const std::string text = io::dump_canonical(io::state_to_json(psi));
        const StateVector back = io::state_from_json(io::json::parse(text));
        EXPECT_EQ(back.amps(), psi.amps());
        EXPECT_EQ(io::dump_canonical(io::state_to_json(back)), text);

        const OperatorMatrix h = fixtures::random_hermitian(rng, 1 + static_cast<int>(rng() % 3));
        const std::string mtext = io::dump_canonical(io::matrix_to_json(h));
        const OperatorMatrix mback = io::matrix_from_json(io::json::parse(mtext));
        EXPECT_EQ(mback.entries(), h.entries());
        EXPECT_EQ(io::dump_canonical(io::matrix_to_json(mback)), mtext);
    }
}

TEST(io, files_round_trip) {
    const auto dir = std::filesystem::temp_directory_path() / "qcomplex_io_test";
    std::filesystem::create_directories(dir);
    const StateVector ghz = examples::ghz(3);
    io::write_text_file(dir / "s.json", io::dump_canonical(io::state_to_json(ghz)));
    EXPECT_EQ(io::read_state(dir / "s.json").amps(), ghz.amps());
    io::write_text_file(dir / "h.json", io::dump_canonical(io::matrix_to_json(examples::h4())));
    EXPECT_EQ(io::read_matrix(dir / "h.json").entries(), examples::h4().entries());
    std::filesystem::remove_all(dir);
}

TEST(io, schema_errors) {
    auto code = [](const io::json& j, bool state) {
        try {
            if (state) {
                (void)io::state_from_json(j);
            } else {
                (void)io::matrix_from_json(j);
            }
        } catch (const Error& e) {
            return e.code();
        }
        return std::string();
    };
    EXPECT_EQ(code(io::json::parse(R"({"amps": [[1, 0], [0]]})"), true), "schema");
    EXPECT_EQ(code(io::json::parse(R"({"n_qubits": 1})"), true), "schema");
    EXPECT_EQ(code(io::json::parse(R"({"dim": 2, "entries": [[[1, 0]]]})"), false), "schema");
    EXPECT_THROW((void)io::read_json_file("/nonexistent/file.json"), Error);
}
