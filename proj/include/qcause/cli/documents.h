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


#ifndef QCAUSE_CLI_DOCUMENTS_H_
#define QCAUSE_CLI_DOCUMENTS_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcause/correlation.h"

/// Matrix exchange documents.
///
///   {"kind": "density", "dim": 4, "entries": [[re, im], ... 16 pairs]}
///   {"kind": "unitary", "dim": 2, "entries": [[re, im], ... 4 pairs]}
///   {"kind": "pvector", "entries": [c11, c22, c33]}
///
/// Entries are row-major. Loading validates the matrix with is_density or
/// is_unitary at tolerance 1e-9 (pvector: inside the cube within 1e-9).
namespace qcause::cli {

enum class DocumentKind { kDensity, kUnitary, kPVector };

std::string_view to_string(DocumentKind kind);

struct MatrixDocument {
    DocumentKind kind = DocumentKind::kPVector;
    DensityOperator density;
    UnitaryGate unitary;
    PPoint pvector;
};

/// Malformed text or schema; the message carries line/field context.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Well-formed document whose matrix fails its validity predicate.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

MatrixDocument parse_document(std::string_view text);
MatrixDocument load_document(const std::string &path);
std::string serialize_document(const MatrixDocument &doc);

MatrixDocument make_document(const DensityOperator &rho);
MatrixDocument make_document(const UnitaryGate &u);
MatrixDocument make_document(const PPoint &p);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

}  // namespace qcause::cli

#endif  // QCAUSE_CLI_DOCUMENTS_H_
