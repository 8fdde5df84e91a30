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


#include "qcause/cli/report.h"

#include "qcause/cli/documents.h"

namespace qcause::cli {

using nlohmann::json;

std::string serialize_report(const RunReport &report) {
    json j;
    j["command"] = report.command;
    j["seed"] = report.seed;
    j["parameters"] = report.parameters;
    j["results"] = report.results;
    j["violations"] = report.violations;
    return j.dump(2) + "\n";
}

RunReport parse_report(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    RunReport r;
    try {
        r.command = j.at("command").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.parameters = j.at("parameters");
        r.results = j.at("results");
        r.violations = j.at("violations").get<std::vector<std::string>>();
    } catch (const json::exception &e) {
        throw ParseError(std::string("report field error: ") + e.what());
    }
    return r;
}

}  // namespace qcause::cli
