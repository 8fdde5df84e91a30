// Copyright 2026 The qcause Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qcause/cli/documents.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qcause/geometry.h"

namespace qcause::cli {

namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); k++) {
        if (text[k] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double number_field(const json &j, const std::string &where) {
    if (!j.is_number()) {
        throw ParseError("field '" + where + "': expected a number");
    }
    return j.get<double>();
}

template <std::size_t N>
Matrix<N> read_matrix(const json &entries) {
    if (entries.size() != N * N) {
        throw ParseError("field 'entries': expected " + std::to_string(N * N) + " [re, im] pairs, got " +
                         std::to_string(entries.size()));
    }
    Matrix<N> m;
    for (std::size_t k = 0; k < N * N; k++) {
        const json &pair = entries[k];
        const std::string where = "entries[" + std::to_string(k) + "]";
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("field '" + where + "': expected a [re, im] pair");
        }
        m.e[k] = Complex(number_field(pair[0], where + "[0]"), number_field(pair[1], where + "[1]"));
    }
    return m;
}

template <std::size_t N>
json write_matrix(const Matrix<N> &m) {
    json entries = json::array();
    for (const Complex &z : m.e) {
        entries.push_back(json::array({z.real(), z.imag()}));
    }
    return entries;
}

void check_dim(const json &doc, int expected) {
    if (!doc.contains("dim")) {
        return;
    }
    if (!doc["dim"].is_number_integer() || doc["dim"].get<int>() != expected) {
        throw ParseError("field 'dim': expected " + std::to_string(expected));
    }
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::kDensity:
            return "density";
        case DocumentKind::kUnitary:
            return "unitary";
        case DocumentKind::kPVector:
            return "pvector";
    }
    return "?";
}

MatrixDocument parse_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("malformed document at " + line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("document root must be an object");
    }
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        throw ParseError("field 'kind': expected one of \"density\", \"unitary\", \"pvector\"");
    }
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw ParseError("field 'entries': expected an array");
    }
    const std::string kind = doc["kind"].get<std::string>();
    const json &entries = doc["entries"];

    MatrixDocument out;
    if (kind == "density") {
        check_dim(doc, 4);
        out.kind = DocumentKind::kDensity;
        out.density = read_matrix<4>(entries);
        std::string why = density_failure(out.density, kInputTol);
        if (!why.empty()) {
            throw ValidationError("is_density failed: " + why);
        }
    } else if (kind == "unitary") {
        check_dim(doc, 2);
        out.kind = DocumentKind::kUnitary;
        out.unitary = read_matrix<2>(entries);
        if (!is_unitary(out.unitary, kInputTol)) {
            throw ValidationError("is_unitary failed");
        }
    } else if (kind == "pvector") {
        check_dim(doc, 3);
        if (entries.size() != 3) {
            throw ParseError("field 'entries': pvector needs 3 reals, got " + std::to_string(entries.size()));
        }
        out.kind = DocumentKind::kPVector;
        for (int k = 0; k < 3; k++) {
            out.pvector[k] = number_field(entries[k], "entries[" + std::to_string(k) + "]");
        }
        if (!in_cube(out.pvector, kInputTol)) {
            throw ValidationError("pvector lies outside the cube [-1, 1]^3");
        }
    } else {
        throw ParseError("field 'kind': unknown kind \"" + kind + "\"");
    }
    return out;
}

MatrixDocument load_document(const std::string &path) {
    return parse_document(read_file(path));
}

std::string serialize_document(const MatrixDocument &doc) {
    json j;
    j["kind"] = std::string(to_string(doc.kind));
    switch (doc.kind) {
        case DocumentKind::kDensity:
            j["dim"] = 4;
            j["entries"] = write_matrix(doc.density);
            break;
        case DocumentKind::kUnitary:
            j["dim"] = 2;
            j["entries"] = write_matrix(doc.unitary);
            break;
        case DocumentKind::kPVector:
            j["dim"] = 3;
            j["entries"] = json::array({doc.pvector.c11, doc.pvector.c22, doc.pvector.c33});
            break;
    }
    return j.dump(2) + "\n";
}

MatrixDocument make_document(const DensityOperator &rho) {
    MatrixDocument d;
    d.kind = DocumentKind::kDensity;
    d.density = rho;
    return d;
}

MatrixDocument make_document(const UnitaryGate &u) {
    MatrixDocument d;
    d.kind = DocumentKind::kUnitary;
    d.unitary = u;
    return d;
}

MatrixDocument make_document(const PPoint &p) {
    MatrixDocument d;
    d.kind = DocumentKind::kPVector;
    d.pvector = p;
    return d;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

}  // namespace qcause::cli
