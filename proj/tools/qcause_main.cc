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


#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcause/cli/commands.h"
#include "qcause/errors.h"

namespace {

using namespace qcause;
using namespace qcause::cli;

void emit(const RunReport &report, const std::string &out) {
    const std::string text = serialize_report(report);
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file(out, text);
    }
}

CauseKind parse_kind(const std::string &s) {
    if (s == "CC") {
        return CauseKind::kCommonCause;
    }
    if (s == "DC") {
        return CauseKind::kDirectCause;
    }
    throw std::invalid_argument("--kind must be CC or DC, got '" + s + "'");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Common-cause versus direct-cause statistics for two qubits"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    double tol = kDefaultTol;
    std::string out;

    auto *classify_cmd = app.add_subcommand("classify", "Classify a density, unitary or P-vector document");
    std::string input;
    classify_cmd->add_option("input", input, "JSON document")->required();
    classify_cmd->add_option("--seed", seed);
    classify_cmd->add_option("--tol", tol);
    classify_cmd->add_option("--out", out, "Report path (default stdout)");

    auto *bounds_cmd = app.add_subcommand("bounds", "Certify the extremal values of C");
    std::string targets = "all";
    double grid_step = kDefaultGridStep;
    int starts = kDefaultStarts;
    bounds_cmd->add_option("--targets", targets, "all or a comma list of CC_MAX,CC_MIN,DC_MAX,DC_MIN");
    bounds_cmd->add_option("--grid-step", grid_step);
    bounds_cmd->add_option("--starts", starts);
    bounds_cmd->add_option("--seed", seed);
    bounds_cmd->add_option("--out", out);

    auto *sample_cmd = app.add_subcommand("sample", "Sample causal structures and write their P-vectors as CSV");
    std::string kind;
    std::int64_t n = kDefaultN;
    sample_cmd->add_option("--kind", kind, "CC or DC")->required();
    sample_cmd->add_option("--n", n);
    sample_cmd->add_option("--seed", seed);
    sample_cmd->add_option("--tol", tol);
    sample_cmd->add_option("--out", out, "CSV path")->required();

    auto *table1_cmd = app.add_subcommand("table1", "Sign patterns of the Pauli and Bell structures");
    table1_cmd->add_option("--out", out);

    auto *table2_cmd = app.add_subcommand("table2", "Escape proportions under measurement rotations");
    std::vector<std::string> v_paths;
    table2_cmd->add_option("--n", n);
    table2_cmd->add_option("--seed", seed);
    table2_cmd->add_option("--v", v_paths, "Unitary document; repeatable (default V1..V4)");
    table2_cmd->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    std::string report_out = out;
    try {
        RunReport report;
        if (*classify_cmd) {
            report = cmd_classify(load_document(input), seed, tol);
        } else if (*bounds_cmd) {
            report = cmd_bounds(parse_targets(targets), grid_step, starts, seed);
        } else if (*sample_cmd) {
            report = cmd_sample(parse_kind(kind), n, seed, tol, out);
            report_out.clear();
        } else if (*table1_cmd) {
            report = cmd_table1();
        } else {
            std::vector<NamedRotation> rotations;
            if (v_paths.empty()) {
                rotations = table2_rotations();
            } else {
                for (const std::string &path : v_paths) {
                    MatrixDocument doc = load_document(path);
                    if (doc.kind != DocumentKind::kUnitary) {
                        throw ValidationError(path + ": expected a unitary document");
                    }
                    rotations.push_back({path, doc.unitary, std::nullopt});
                }
            }
            if (n < 1) {
                throw std::invalid_argument("--n must be >= 1");
            }
            report = cmd_table2(n, seed, rotations);
        }
        emit(report, report_out);
        for (const std::string &v : report.violations) {
            std::cerr << "violation: " << v << "\n";
        }
        return exit_code(report);
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError &e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 2;
    } catch (const SamplingExhausted &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
