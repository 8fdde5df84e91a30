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


#ifndef QCAUSE_CLI_REPORT_H_
#define QCAUSE_CLI_REPORT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qcause::cli {

/// Outcome of one CLI command. Serialized as JSON with sorted keys so that
/// equal reports produce identical bytes.
struct RunReport {
    std::string command;
    std::uint64_t seed = 0;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    /// Empty on success.
    std::vector<std::string> violations;

    bool ok() const {
        return violations.empty();
    }
    bool operator==(const RunReport &) const = default;
};

std::string serialize_report(const RunReport &report);

/// Throws ParseError.
RunReport parse_report(std::string_view text);

}  // namespace qcause::cli

#endif  // QCAUSE_CLI_REPORT_H_
