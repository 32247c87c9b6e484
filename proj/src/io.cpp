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

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcomplex::io {

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error("schema", "complex amplitude must be [re, im]", j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error("schema", std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

void dump_into(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) {
                    out += ',';
                }
                first = false;
                out += json(key).dump();
                out += ':';
                dump_into(value, out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k > 0) {
                    out += ',';
                }
                dump_into(j[k], out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float:
            out += format_double(j.get<double>());
            break;
        default:
            out += j.dump();
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json state_to_json(const StateVector& psi) {
    json amps = json::array();
    for (std::size_t j = 0; j < psi.dim(); ++j) {
        amps.push_back(complex_to_json(psi[j]));
    }
    return {{"n_qubits", psi.n_qubits()}, {"dim", psi.dim()}, {"amps", std::move(amps)}};
}

StateVector state_from_json(const json& j) {
    const auto dim = require(j, "dim").get<std::size_t>();
    const auto n = require(j, "n_qubits").get<int>();
    const json& amps = require(j, "amps");
    if (!amps.is_array() || amps.size() != dim) {
        throw Error("schema", "'amps' length does not match 'dim'");
    }
    Vector v(static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        v(static_cast<Eigen::Index>(k)) = complex_from_json(amps[k]);
    }
    return StateVector(std::move(v), n);
}

json matrix_to_json(const OperatorMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) {
            row.push_back(complex_to_json(a(i, k)));
        }
        rows.push_back(std::move(row));
    }
    return {{"dim", a.dim()}, {"entries", std::move(rows)}};
}

OperatorMatrix matrix_from_json(const json& j) {
    const auto dim = require(j, "dim").get<std::size_t>();
    const json& rows = require(j, "entries");
    if (!rows.is_array() || rows.size() != dim) {
        throw Error("schema", "'entries' row count does not match 'dim'");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix m(d, d);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!rows[i].is_array() || rows[i].size() != dim) {
            throw Error("schema", "row " + std::to_string(i) + " length does not match 'dim'");
        }
        for (std::size_t k = 0; k < dim; ++k) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = complex_from_json(rows[i][k]);
        }
    }
    return OperatorMatrix(std::move(m), -1);
}

std::string dump_canonical(const json& j) {
    std::string out;
    dump_into(j, out);
    out += '\n';
    return out;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("io", "cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("parse", e.what(), path.string());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("io", "cannot write " + path.string());
    }
    out << text;
}

StateVector read_state(const std::filesystem::path& path) { return state_from_json(read_json_file(path)); }

OperatorMatrix read_matrix(const std::filesystem::path& path) { return matrix_from_json(read_json_file(path)); }

}  // namespace qcomplex::io
