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


#include <gtest/gtest.h>

#include <filesystem>

#include "qcause/cli/commands.h"
#include "qcause/cli/documents.h"
#include "qcause/cli/report.h"
#include "qcause/errors.h"

namespace qcause::cli {
namespace {

std::string data(const std::string &name) {
    return std::string(QCAUSE_TEST_DATA_DIR) + "/" + name;
}

TEST(Documents, LoadFixtures) {
    MatrixDocument d = load_document(data("bell4_density.json"));
    EXPECT_EQ(d.kind, DocumentKind::kDensity);
    EXPECT_LT(max_abs_diff(d.density, outer(bell(4))), 1e-12);
    MatrixDocument u = load_document(data("sigma2_unitary.json"));
    EXPECT_EQ(u.unitary, pauli(2));
    MatrixDocument p = load_document(data("pvector_mixture.json"));
    EXPECT_EQ(p.pvector, (PPoint{0.9, 0.9, 0.0}));
}

TEST(Documents, RoundTrip) {
    for (const MatrixDocument &doc :
         {make_document(outer(bell(3))), make_document(hadamard()), make_document(PPoint{0.1, -0.2, 0.3})}) {
        MatrixDocument back = parse_document(serialize_document(doc));
        EXPECT_EQ(back.kind, doc.kind);
        EXPECT_EQ(serialize_document(back), serialize_document(doc));
    }
}

TEST(Documents, ParseErrorsCarryContext) {
    try {
        load_document(data("malformed.json"));
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
    }
    try {
        parse_document(R"({"kind": "unitary", "dim": 2, "entries": [[1, 0], [0, 0], [0, 0], [1]]})");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("entries[3]"), std::string::npos);
    }
    EXPECT_THROW(parse_document(R"({"kind": "tensor", "entries": []})"), ParseError);
    EXPECT_THROW(parse_document(R"({"kind": "density", "dim": 2, "entries": []})"), ParseError);
}

TEST(Documents, ValidationNamesPredicate) {
    try {
        load_document(data("nonunitary.json"));
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_NE(std::string(e.what()).find("unitary"), std::string::npos);
    }
    EXPECT_THROW(parse_document(R"({"kind": "pvector", "entries": [2, 0, 0]})"), ValidationError);
}

TEST(Documents, MissingFileIsIoError) {
    EXPECT_THROW(load_document(data("does_not_exist.json")), IoError);
    EXPECT_THROW(write_file("/nonexistent-dir/x.csv", "x"), IoError);
}

TEST(Report, SerializationRoundTrips) {
    RunReport r;
    r.command = "sample";
    r.seed = 18446744073709551615ull;
    r.parameters["n"] = 3;
    r.results["min_c"] = -0.123456789012345678;
    r.violations = {"a", "b"};
    const std::string text = serialize_report(r);
    EXPECT_EQ(parse_report(text), r);
    EXPECT_EQ(serialize_report(parse_report(text)), text);
    EXPECT_THROW(parse_report("{"), ParseError);
}

TEST(Classify, Examples) {
    RunReport r = cmd_classify(load_document(data("bell4_density.json")), 42, kDefaultTol);
    EXPECT_NEAR(r.results["statistic_c"].get<double>(), -1, 1e-12);
    EXPECT_EQ(r.results["label"], "CC_ONLY");
    EXPECT_FALSE(r.results["escape"]["searched"].get<bool>());
    r = cmd_classify(load_document(data("sigma2_unitary.json")), 42, kDefaultTol);
    EXPECT_NEAR(r.results["statistic_c"].get<double>(), 1, 1e-12);
    EXPECT_EQ(r.results["label"], "DC_ONLY");
    r = cmd_classify(load_document(data("pvector_mixture.json")), 42, kDefaultTol);
    EXPECT_EQ(r.results["label"], "MIXTURE_REQUIRED");
    EXPECT_TRUE(r.ok());
}

TEST(Classify, AmbiguousRunsEscapeSearch) {
    RunReport r = cmd_classify(load_document(data("mixed_density.json")), 42, kDefaultTol);
    EXPECT_EQ(r.results["label"], "AMBIGUOUS");
    EXPECT_TRUE(r.results["escape"]["searched"].get<bool>());
    EXPECT_FALSE(r.results["escape"]["found"].get<bool>());
    r = cmd_classify(make_document(hadamard()), 42, kDefaultTol);
    EXPECT_EQ(r.results["label"], "AMBIGUOUS");
    EXPECT_TRUE(r.results["escape"]["found"].get<bool>());
}

TEST(Classify, SampledDocumentsNeverError) {
    SamplerConfig cfg;
    cfg.seed = 8;
    Sampler s(cfg);
    for (int k = 0; k < 50; k++) {
        EXPECT_NO_THROW(cmd_classify(parse_document(serialize_document(make_document(s.density()))), 1, 1e-9));
        EXPECT_NO_THROW(cmd_classify(parse_document(serialize_document(make_document(s.unitary()))), 1, 1e-9));
    }
}

TEST(Bounds, DefaultRun) {
    RunReport r = cmd_bounds(parse_targets("all"), kDefaultGridStep, kDefaultStarts, kDefaultSeed);
    EXPECT_TRUE(r.ok());
    EXPECT_NEAR(r.results["CC_MAX"]["polished"]["value"].get<double>(), 1.0 / 27, 1e-6);
    EXPECT_NEAR(r.results["DC_MIN"]["multistart"]["value"].get<double>(), -1.0 / 27, 1e-6);
    EXPECT_NEAR(r.results["CC_MIN"]["polished"]["value"].get<double>(), -1, 1e-12);
    EXPECT_NEAR(r.results["DC_MAX"]["polished"]["value"].get<double>(), 1, 1e-12);
}

TEST(Bounds, TargetParsing) {
    EXPECT_EQ(parse_targets("CC_MAX,DC_MIN").size(), 2u);
    EXPECT_EQ(parse_targets("all").size(), 4u);
    EXPECT_THROW(parse_targets("CC_MAX,XX"), std::invalid_argument);
}

TEST(Sample, BoundsHoldAndCsvIsDeterministic) {
    SampleRun cc = run_sample(CauseKind::kCommonCause, 100000, 42, 1e-9);
    EXPECT_LE(cc.report.results["max_c"].get<double>(), 1.0 / 27 + 1e-9);
    EXPECT_EQ(cc.report.results["violations"], 0);
    EXPECT_EQ(cc.csv.substr(0, cc.csv.find('\n')), "c11,c22,c33,c,label");
    EXPECT_EQ(std::count(cc.csv.begin(), cc.csv.end(), '\n'), 100001);
    SampleRun dc = run_sample(CauseKind::kDirectCause, 100000, 42, 1e-9);
    EXPECT_GE(dc.report.results["min_c"].get<double>(), -1.0 / 27 - 1e-9);
    EXPECT_TRUE(dc.report.ok());
    EXPECT_EQ(run_sample(CauseKind::kDirectCause, 1000, 9, 1e-9).csv,
              run_sample(CauseKind::kDirectCause, 1000, 9, 1e-9).csv);
    EXPECT_THROW(run_sample(CauseKind::kDirectCause, 0, 9, 1e-9), std::invalid_argument);
}

TEST(Table1, AllRowsMatch) {
    RunReport r = cmd_table1();
    EXPECT_TRUE(r.ok());
    ASSERT_EQ(r.results["rows"].size(), 8u);
    const auto &sigma1 = r.results["rows"][1];
    EXPECT_EQ(sigma1["expected"], nlohmann::json::array({1.0, -1.0, -1.0}));
    EXPECT_NEAR(sigma1["statistic_c"].get<double>(), 1, 1e-12);
    const auto &b3 = r.results["rows"][6];
    EXPECT_EQ(b3["expected"], nlohmann::json::array({1.0, 1.0, -1.0}));
    EXPECT_NEAR(b3["statistic_c"].get<double>(), -1, 1e-12);
}

TEST(Table2, IdentityRotationAndReferenceRows) {
    RunReport id = cmd_table2(1000, 42, {{"I", pauli(0), std::nullopt}});
    EXPECT_EQ(id.results["rows"][0]["cc"]["escaped"], 0);
    EXPECT_EQ(id.results["rows"][0]["dc"]["escaped"], 0);
    EXPECT_TRUE(id.results["rows"][0]["cc"]["reference_percent"].is_null());

    auto rotations = table2_rotations();
    RunReport r = cmd_table2(20000, 42, {rotations[0], rotations[2]});
    EXPECT_NEAR(r.results["rows"][0]["cc"]["proportion_percent"].get<double>(), 36.44, 5);
    EXPECT_NEAR(r.results["rows"][0]["dc"]["proportion_percent"].get<double>(), 58.91, 5);
    EXPECT_NEAR(r.results["rows"][1]["cc"]["proportion_percent"].get<double>(), 29.9, 5);
    EXPECT_NEAR(r.results["rows"][1]["dc"]["proportion_percent"].get<double>(), 50.64, 5);
    EXPECT_GT(r.results["rows"][0]["cc"]["half_width_percent"].get<double>(), 0);
}

TEST(Determinism, ReportsAreByteIdentical) {
    EXPECT_EQ(serialize_report(cmd_table2(2000, 5, table2_rotations())),
              serialize_report(cmd_table2(2000, 5, table2_rotations())));
    EXPECT_EQ(serialize_report(cmd_bounds(parse_targets("CC_MAX"), 0.05, 20, 3)),
              serialize_report(cmd_bounds(parse_targets("CC_MAX"), 0.05, 20, 3)));
}

}  // namespace
}  // namespace qcause::cli
