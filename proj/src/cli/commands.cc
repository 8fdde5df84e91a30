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


#include "qcause/cli/commands.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qcause/basis_change.h"
#include "qcause/errors.h"
#include "qcause/geometry.h"

namespace qcause::cli {

namespace {

using nlohmann::json;

json to_json(const PPoint &p) {
    return json::array({p.c11, p.c22, p.c33});
}

json to_json(const BaryWeights &w) {
    return json::array({w.w[0], w.w[1], w.w[2], w.w[3]});
}

template <std::size_t N>
json to_json(const Vector<N> &v) {
    json out = json::array();
    for (const Complex &z : v.amp) {
        out.push_back(json::array({z.real(), z.imag()}));
    }
    return out;
}

template <std::size_t N>
json to_json(const Matrix<N> &m) {
    json out = json::array();
    for (const Complex &z : m.e) {
        out.push_back(json::array({z.real(), z.imag()}));
    }
    return out;
}

json to_json(const BoundReport &r) {
    json j;
    j["method"] = r.method;
    j["value"] = r.value;
    j["witness_weights"] = to_json(r.witness);
    j["witness_point"] = to_json(r.witness_point);
    if (std::holds_alternative<Vec4>(r.witness_object)) {
        j["witness_state"] = to_json(std::get<Vec4>(r.witness_object));
    } else {
        j["witness_unitary"] = to_json(std::get<UnitaryGate>(r.witness_object));
    }
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    if (r.grid_step > 0) {
        j["grid_step"] = r.grid_step;
        j["grid_error_bound"] = r.grid_error_bound;
    }
    if (r.starts > 0) {
        j["starts"] = r.starts;
    }
    return j;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// 95% normal-approximation half-width, in percent.
double half_width_percent(double proportion, std::int64_t n) {
    return 100 * 1.96 * std::sqrt(proportion * (1 - proportion) / static_cast<double>(n));
}

json escape_row(const EscapeResult &r, std::optional<double> reference, std::vector<std::string> &notes) {
    json j;
    const double pct = 100 * r.proportion;
    j["n"] = r.n_samples;
    j["escaped"] = r.escaped;
    j["proportion_percent"] = pct;
    j["half_width_percent"] = half_width_percent(r.proportion, r.n_samples);
    j["corner_free_escaped"] = r.escaped_corner_free;
    j["corner_free_percent"] = 100 * r.proportion_corner_free;
    j["image_in_target"] = r.image_in_target;
    j["acceptance_rate"] = r.acceptance_rate;
    if (reference) {
        j["reference_percent"] = *reference;
        j["band_pp"] = kTable2BandPp;
        const bool within = std::abs(pct - *reference) <= kTable2BandPp;
        j["within_band"] = within;
        if (!within) {
            std::ostringstream msg;
            msg << to_string(r.kind) << " measured " << pct << "% vs reference " << *reference << "%";
            notes.push_back(msg.str());
        }
    } else {
        j["reference_percent"] = nullptr;
    }
    return j;
}

}  // namespace

RunReport cmd_classify(const MatrixDocument &input, std::uint64_t seed, double tol) {
    RunReport report;
    report.command = "classify";
    report.seed = seed;
    report.parameters["kind"] = std::string(to_string(input.kind));
    report.parameters["tol"] = tol;
    report.parameters["escape_tries"] = kEscapeSearchTries;

    PPoint p;
    switch (input.kind) {
        case DocumentKind::kDensity:
            p = cc_pvector(input.density);
            break;
        case DocumentKind::kUnitary:
            p = dc_pvector(input.unitary);
            break;
        case DocumentKind::kPVector:
            p = input.pvector;
            break;
    }
    const RegionLabel label = classify(p, tol);
    report.results["pvector"] = to_json(p);
    report.results["statistic_c"] = statistic_c(p);
    report.results["label"] = std::string(to_string(label));
    report.results["tol"] = tol;

    json escape;
    if (label == RegionLabel::kAmbiguous && input.kind != DocumentKind::kPVector) {
        SamplerConfig cfg;
        cfg.seed = seed;
        std::variant<DensityOperator, UnitaryGate> target;
        if (input.kind == DocumentKind::kDensity) {
            target = input.density;
        } else {
            target = input.unitary;
        }
        auto v = search_escape_v(target, kEscapeSearchTries, cfg);
        escape["searched"] = true;
        escape["found"] = v.has_value();
        if (v) {
            const PPoint q =
                input.kind == DocumentKind::kDensity ? pprime_cc(input.density, *v) : pprime_dc(input.unitary, *v);
            escape["v"] = to_json(*v);
            escape["pprime"] = to_json(q);
            escape["pprime_label"] = std::string(to_string(classify(q, tol)));
        }
    } else {
        escape["searched"] = false;
    }
    report.results["escape"] = escape;
    return report;
}

std::vector<BoundTarget> parse_targets(const std::string &list) {
    if (list == "all" || list.empty()) {
        return {BoundTarget::kCcMax, BoundTarget::kCcMin, BoundTarget::kDcMax, BoundTarget::kDcMin};
    }
    std::vector<BoundTarget> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        bool found = false;
        for (BoundTarget t : {BoundTarget::kCcMax, BoundTarget::kCcMin, BoundTarget::kDcMax, BoundTarget::kDcMin}) {
            if (item == to_string(t)) {
                out.push_back(t);
                found = true;
            }
        }
        if (!found) {
            throw std::invalid_argument("unknown bound target '" + item + "'");
        }
    }
    return out;
}

RunReport cmd_bounds(const std::vector<BoundTarget> &targets, double grid_step, int starts, std::uint64_t seed) {
    RunReport report;
    report.command = "bounds";
    report.seed = seed;
    json names = json::array();
    for (BoundTarget t : targets) {
        names.push_back(std::string(to_string(t)));
    }
    report.parameters["targets"] = names;
    report.parameters["grid_step"] = grid_step;
    report.parameters["starts"] = starts;
    report.parameters["polish_tol"] = kPolishTol;

    SamplerConfig cfg;
    cfg.seed = seed;
    for (BoundTarget t : targets) {
        const Direction d = direction(t);
        const bool cc = cause_kind(t) == CauseKind::kCommonCause;
        const BoundReport grid = grid_extremum(cc ? tcc() : tdc(), d, grid_step);
        const BoundReport polished = polish_extremum(grid, kPolishTol);
        const BoundReport multi =
            cc ? multistart_state_extremum(d, starts, cfg) : multistart_unitary_extremum(d, starts, cfg);

        const double expected = expected_extremum(t);
        const double delta = std::abs(polished.value - multi.value);
        json j;
        j["expected"] = expected;
        j["tol"] = kBoundCheckTol;
        j["grid"] = to_json(grid);
        j["polished"] = to_json(polished);
        j["multistart"] = to_json(multi);
        j["agreement_delta"] = delta;
        j["agreement_tol"] = kBoundCheckTol;
        report.results[std::string(to_string(t))] = j;

        const std::string name(to_string(t));
        if (std::abs(polished.value - expected) > kBoundCheckTol) {
            report.violations.push_back(name + ": grid+polish value " + format_double(polished.value) +
                                        " differs from " + format_double(expected));
        }
        if (std::abs(multi.value - expected) > kBoundCheckTol) {
            report.violations.push_back(name + ": multistart value " + format_double(multi.value) + " differs from " +
                                        format_double(expected));
        }
        if (delta > kBoundCheckTol) {
            report.violations.push_back(name + ": oracles disagree by " + format_double(delta));
        }
    }
    return report;
}

SampleRun run_sample(CauseKind kind, std::int64_t n, std::uint64_t seed, double tol) {
    if (n < 1) {
        throw std::invalid_argument("sample: n must be >= 1");
    }
    SamplerConfig cfg;
    cfg.seed = seed;
    Sampler sampler(cfg);

    const bool cc = kind == CauseKind::kCommonCause;
    const double bound = cc ? 1.0 / 27 : -1.0 / 27;
    std::string csv = "c11,c22,c33,c,label\n";
    double min_c = std::numeric_limits<double>::infinity();
    double max_c = -std::numeric_limits<double>::infinity();
    std::int64_t violations = 0;
    for (std::int64_t s = 0; s < n; s++) {
        const PPoint p = cc ? cc_pvector(sampler.sweep_density()) : dc_pvector(sampler.unitary());
        const double c = statistic_c(p);
        min_c = std::min(min_c, c);
        max_c = std::max(max_c, c);
        if (cc ? c > bound + tol : c < bound - tol) {
            violations++;
        }
        csv += format_double(p.c11) + "," + format_double(p.c22) + "," + format_double(p.c33) + "," +
               format_double(c) + "," + std::string(to_string(classify(p, tol))) + "\n";
    }

    SampleRun run;
    run.csv = std::move(csv);
    RunReport &report = run.report;
    report.command = "sample";
    report.seed = seed;
    report.parameters["kind"] = std::string(to_string(kind));
    report.parameters["n"] = n;
    report.parameters["tol"] = tol;
    report.parameters["rng"] = std::string(Rng::kName);
    report.parameters["law"] = cc ? "sweep: real pure, complex pure, mixed rank 2..4" : "U(2) sphere x phase";
    report.results["min_c"] = min_c;
    report.results["max_c"] = max_c;
    report.results["bound"] = bound;
    report.results["bound_side"] = cc ? "upper" : "lower";
    report.results["tol"] = tol;
    report.results["violations"] = violations;
    if (violations > 0) {
        report.violations.push_back(std::to_string(violations) + " samples violate the bound " +
                                    format_double(bound));
    }
    return run;
}

RunReport cmd_sample(CauseKind kind, std::int64_t n, std::uint64_t seed, double tol, const std::string &out) {
    SampleRun run = run_sample(kind, n, seed, tol);
    write_file(out, run.csv);
    run.report.parameters["out"] = out;
    return run.report;
}

std::vector<NamedRotation> table2_rotations() {
    std::vector<NamedRotation> out;
    for (int k = 1; k <= 4; k++) {
        out.push_back({"V" + std::to_string(k), table2_v(k), table2_reference_percent(k)});
    }
    return out;
}

RunReport cmd_table2(std::int64_t n, std::uint64_t seed, const std::vector<NamedRotation> &v_set) {
    RunReport report;
    report.command = "table2";
    report.seed = seed;
    report.parameters["n"] = n;
    report.parameters["density_rank"] = kTable2DensityRank;
    report.parameters["rng"] = std::string(Rng::kName);
    report.parameters["escape_rule"] = "rotated point leaves O";
    report.parameters["band_pp"] = kTable2BandPp;

    SamplerConfig cfg;
    cfg.seed = seed;
    cfg.density_rank = kTable2DensityRank;

    json rows = json::array();
    std::vector<std::string> out_of_band;
    for (const NamedRotation &rot : v_set) {
        const EscapeResult cc = escape_experiment(CauseKind::kCommonCause, rot.v, n, cfg);
        const EscapeResult dc = escape_experiment(CauseKind::kDirectCause, rot.v, n, cfg);
        std::vector<std::string> notes;
        json row;
        row["v"] = rot.name;
        row["v_entries"] = to_json(rot.v);
        row["cc"] = escape_row(cc, rot.reference ? std::optional<double>((*rot.reference)[0]) : std::nullopt, notes);
        row["dc"] = escape_row(dc, rot.reference ? std::optional<double>((*rot.reference)[1]) : std::nullopt, notes);
        for (const std::string &note : notes) {
            out_of_band.push_back(rot.name + " " + note);
        }
        rows.push_back(row);
    }
    report.results["rows"] = rows;
    report.results["out_of_band"] = out_of_band;
    return report;
}

RunReport cmd_table1() {
    RunReport report;
    report.command = "table1";
    constexpr double tol = 1e-12;
    report.parameters["tol"] = tol;

    struct Row {
        std::string name;
        PPoint expected;
        PPoint measured;
    };
    std::vector<Row> rows;
    const std::array<PPoint, 4> pauli_rows{PPoint{1, 1, 1}, PPoint{1, -1, -1}, PPoint{-1, 1, -1}, PPoint{-1, -1, 1}};
    for (int i = 0; i < 4; i++) {
        rows.push_back({"U=sigma" + std::to_string(i), pauli_rows[i], dc_pvector(pauli(i))});
    }
    const std::array<PPoint, 4> bell_rows{PPoint{1, -1, 1}, PPoint{-1, 1, 1}, PPoint{1, 1, -1}, PPoint{-1, -1, -1}};
    for (int j = 1; j <= 4; j++) {
        rows.push_back({"rho=|b" + std::to_string(j) + "><b" + std::to_string(j) + "|", bell_rows[j - 1],
                        cc_pvector(outer(bell(j)))});
    }

    json out = json::array();
    for (const Row &r : rows) {
        const double expected_c = statistic_c(r.expected);
        const double c = statistic_c(r.measured);
        const double err = std::max(max_abs_diff(r.measured, r.expected), std::abs(c - expected_c));
        json j;
        j["structure"] = r.name;
        j["pvector"] = to_json(r.measured);
        j["expected"] = to_json(r.expected);
        j["statistic_c"] = c;
        j["max_error"] = err;
        j["match"] = err <= tol;
        out.push_back(j);
        if (err > tol) {
            report.violations.push_back(r.name + ": sign pattern mismatch (error " + format_double(err) + ")");
        }
    }
    report.results["rows"] = out;
    return report;
}

int exit_code(const RunReport &report) {
    return report.ok() ? 0 : 2;
}

}  // namespace qcause::cli
