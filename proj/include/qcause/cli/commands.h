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


#ifndef QCAUSE_CLI_COMMANDS_H_
#define QCAUSE_CLI_COMMANDS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcause/bounds.h"
#include "qcause/cli/documents.h"
#include "qcause/cli/report.h"
#include "qcause/samplers.h"

namespace qcause::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::int64_t kDefaultN = 20000;
inline constexpr double kDefaultGridStep = 0.01;
inline constexpr int kDefaultStarts = 200;
inline constexpr double kDefaultTol = 1e-9;

/// Tolerance of the bound certification checks in `bounds`.
inline constexpr double kBoundCheckTol = 1e-6;
/// Step threshold of the compass polish.
inline constexpr double kPolishTol = 1e-10;
/// Half-width of the escape-table comparison band, in percentage points.
inline constexpr double kTable2BandPp = 5.0;
/// Common causes for the escape table are pure states.
inline constexpr int kTable2DensityRank = 1;
/// Random V tried by `classify` before reporting no escape.
inline constexpr int kEscapeSearchTries = 2000;

RunReport cmd_classify(const MatrixDocument &input, std::uint64_t seed, double tol);

RunReport cmd_bounds(const std::vector<BoundTarget> &targets, double grid_step, int starts, std::uint64_t seed);

/// "CC_MAX,DC_MIN" style list; "all" selects the four targets.
std::vector<BoundTarget> parse_targets(const std::string &list);

struct SampleRun {
    RunReport report;
    /// Header `c11,c22,c33,c,label`, one row per sample.
    std::string csv;
};

/// Common causes come from Sampler::sweep_density, direct causes from
/// Sampler::unitary.
SampleRun run_sample(CauseKind kind, std::int64_t n, std::uint64_t seed, double tol);

/// run_sample, writing the CSV to out. Throws IoError.
RunReport cmd_sample(CauseKind kind, std::int64_t n, std::uint64_t seed, double tol, const std::string &out);

struct NamedRotation {
    std::string name;
    UnitaryGate v;
    /// Reference percentages {CC, DC}, when known.
    std::optional<std::array<double, 2>> reference;
};

/// V1..V4 with their reference escape percentages.
std::vector<NamedRotation> table2_rotations();

RunReport cmd_table2(std::int64_t n, std::uint64_t seed, const std::vector<NamedRotation> &v_set);

RunReport cmd_table1();

/// 0 when the report has no violations, 2 otherwise.
int exit_code(const RunReport &report);

}  // namespace qcause::cli

#endif  // QCAUSE_CLI_COMMANDS_H_
