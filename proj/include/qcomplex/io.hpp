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

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "qcomplex/core.hpp"

namespace qcomplex::io {

using nlohmann::json;

// State file:  {"n_qubits": int, "dim": int, "amps": [[re, im], ...]}
// Matrix file: {"dim": int, "entries": [[[re, im], ...], ...]}  (row-major)

[[nodiscard]] json state_to_json(const StateVector& psi);
[[nodiscard]] StateVector state_from_json(const json& j);
[[nodiscard]] json matrix_to_json(const OperatorMatrix& a);
[[nodiscard]] OperatorMatrix matrix_from_json(const json& j);

/// Canonical text: sorted keys, no whitespace, floats as %.17g, trailing newline.
[[nodiscard]] std::string dump_canonical(const json& j);

[[nodiscard]] json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

[[nodiscard]] StateVector read_state(const std::filesystem::path& path);
[[nodiscard]] OperatorMatrix read_matrix(const std::filesystem::path& path);

/// Formats a double with 17 significant digits.
[[nodiscard]] std::string format_double(double x);

}  // namespace qcomplex::io
