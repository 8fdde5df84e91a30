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


#include "qcause/bounds.h"

#include <gtest/gtest.h>

#include "qcause/geometry.h"

namespace qcause {
namespace {

constexpr double kThird = 1.0 / 27;

TEST(Targets, Metadata) {
    EXPECT_EQ(bound_target(CauseKind::kCommonCause, Direction::kMax), BoundTarget::kCcMax);
    EXPECT_EQ(cause_kind(BoundTarget::kDcMin), CauseKind::kDirectCause);
    EXPECT_EQ(direction(BoundTarget::kCcMin), Direction::kMin);
    EXPECT_DOUBLE_EQ(expected_extremum(BoundTarget::kCcMax), kThird);
    EXPECT_DOUBLE_EQ(expected_extremum(BoundTarget::kDcMin), -kThird);
    EXPECT_EQ(to_string(BoundTarget::kDcMax), "DC_MAX");
    EXPECT_NEAR(kTrilinearLipschitz, 3 * std::sqrt(3.0), 1e-12);
}

TEST(Grid, Examples) {
    BoundReport dc = grid_extremum(tdc(), Direction::kMin, 0.01);
    EXPECT_NEAR(dc.value, -kThird, 1e-3);
    EXPECT_LT(dc.witness[0], 0.02);
    for (int k = 1; k < 4; k++) {
        EXPECT_NEAR(dc.witness[k], 1.0 / 3, 0.02);
    }
    BoundReport cc = grid_extremum(tcc(), Direction::kMax, 0.01);
    EXPECT_NEAR(cc.value, kThird, 1e-3);
    EXPECT_EQ(grid_extremum(tcc(), Direction::kMin, 0.01).value, -1.0);
    EXPECT_NEAR(cc.grid_error_bound, kTrilinearLipschitz * 0.01, 1e-12);
}

TEST(Grid, WitnessReproducesValue) {
    BoundReport cc = grid_extremum(tcc(), Direction::kMax, 0.05);
    const Vec4 &phi = std::get<Vec4>(cc.witness_object);
    EXPECT_NEAR(statistic_c(cc_pvector(phi)), cc.value, 1e-10);
    BoundReport dc = grid_extremum(tdc(), Direction::kMin, 0.05);
    const UnitaryGate &u = std::get<UnitaryGate>(dc.witness_object);
    EXPECT_NEAR(statistic_c(dc_pvector(u)), dc.value, 1e-10);
}

TEST(Grid, RejectsBadStepAndTetrahedron) {
    EXPECT_THROW(grid_extremum(tcc(), Direction::kMax, 0.0), std::invalid_argument);
    EXPECT_THROW(grid_extremum(tcc(), Direction::kMax, 0.2), std::invalid_argument);
    EXPECT_THROW(grid_extremum(otc_dugout(), Direction::kMax, 0.05), std::invalid_argument);
}

TEST(Polish, ReachesExtremaTightly) {
    BoundReport cc = polish_extremum(grid_extremum(tcc(), Direction::kMax, 0.01), 1e-10);
    EXPECT_NEAR(cc.value, kThird, 1e-8);
    EXPECT_TRUE(cc.converged);
    BoundReport dc = polish_extremum(grid_extremum(tdc(), Direction::kMin, 0.01), 1e-10);
    EXPECT_NEAR(dc.value, -kThird, 1e-8);
}

TEST(Polish, VertexStartDoesNotMove) {
    BoundReport grid = grid_extremum(tcc(), Direction::kMin, 0.01);
    BoundReport polished = polish_extremum(grid, 1e-10);
    EXPECT_EQ(polished.value, -1.0);
    EXPECT_EQ(polished.iterations, 0);
}

TEST(Polish, NeverWorse) {
    for (double step : {0.1, 0.05, 0.03}) {
        BoundReport g = grid_extremum(tdc(), Direction::kMax, step);
        EXPECT_GE(polish_extremum(g, 1e-10).value, g.value);
        g = grid_extremum(tcc(), Direction::kMax, step);
        EXPECT_GE(polish_extremum(g, 1e-10).value, g.value);
    }
}

TEST(Multistart, StateExtrema) {
    SamplerConfig cfg;
    BoundReport mx = multistart_state_extremum(Direction::kMax, 200, cfg);
    EXPECT_NEAR(mx.value, kThird, 1e-6);
    const Vec4 &phi = std::get<Vec4>(mx.witness_object);
    for (int k = 0; k < 4; k++) {
        EXPECT_EQ(phi[k].imag(), 0);
    }
    EXPECT_NEAR(statistic_c(cc_pvector(phi)), mx.value, 1e-12);
    BoundReport mn = multistart_state_extremum(Direction::kMin, 200, cfg);
    EXPECT_NEAR(mn.value, -1, 1e-9);
}

TEST(Multistart, UnitaryExtrema) {
    SamplerConfig cfg;
    BoundReport mn = multistart_unitary_extremum(Direction::kMin, 200, cfg);
    EXPECT_NEAR(mn.value, -kThird, 1e-6);
    BoundReport mx = multistart_unitary_extremum(Direction::kMax, 200, cfg);
    EXPECT_NEAR(mx.value, 1, 1e-9);
    PPoint p = mx.witness_point;
    EXPECT_NEAR(std::abs(p.c11), 1, 1e-4);
    EXPECT_NEAR(std::abs(p.c22), 1, 1e-4);
    EXPECT_NEAR(std::abs(p.c33), 1, 1e-4);
}

TEST(Multistart, OraclesAgree) {
    SamplerConfig cfg;
    cfg.seed = 7;
    const double grid = polish_extremum(grid_extremum(tcc(), Direction::kMax, 0.01), 1e-10).value;
    const double multi = multistart_state_extremum(Direction::kMax, 50, cfg).value;
    EXPECT_NEAR(grid, multi, 1e-6);
}

TEST(Witness, ComputationalBasisReading) {
    const double r = 1 / std::sqrt(6.0);
    Vec4 phi{{-2 * r, r, -r, 0.0}};
    PPoint p = cc_pvector(phi);
    EXPECT_LT(max_abs_diff(p, PPoint{-1.0 / 3, -1.0 / 3, 1.0 / 3}), 1e-12);
    EXPECT_NEAR(statistic_c(p), kThird, 1e-10);
}

TEST(NelderMead, Quadratic) {
    auto f = [](std::span<const double> x) { return (x[0] - 1) * (x[0] - 1) + 10 * (x[1] + 2) * (x[1] + 2); };
    NelderMeadResult r = nelder_mead(f, {0, 0});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1, 1e-6);
    EXPECT_NEAR(r.x[1], -2, 1e-6);
    EXPECT_NEAR(r.f, 0, 1e-12);
}

TEST(NelderMead, IterationCapFlagsUnconverged) {
    auto f = [](std::span<const double> x) { return 100 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1 - x[0]) * (1 - x[0]); };
    NelderMeadOptions opts;
    opts.max_iterations = 5;
    NelderMeadResult r = nelder_mead(f, {-1.2, 1}, opts);
    EXPECT_FALSE(r.converged);
    EXPECT_LE(r.iterations, 5);
}

}  // namespace
}  // namespace qcause
