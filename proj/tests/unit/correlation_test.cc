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


#include "qcause/correlation.h"

#include <gtest/gtest.h>

#include <random>

#include "qcause/errors.h"
#include "qcause/samplers.h"

namespace qcause {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Each sigma_i x sigma_i is diagonal in the Bell basis, so P(rho) is the
// convex combination of the Bell vertices with weights <b_j|rho|b_j>.
PPoint bell_diagonal_oracle(const DensityOperator &rho) {
    const std::array<PPoint, 4> vertices{PPoint{1, -1, 1}, PPoint{-1, 1, 1}, PPoint{1, 1, -1}, PPoint{-1, -1, -1}};
    PPoint p;
    for (int j = 1; j <= 4; j++) {
        p = p + expectation(rho, bell(j)).real() * vertices[j - 1];
    }
    return p;
}

// Diagonal of the SO(3) rotation R_ij = Tr[sigma_i U sigma_j U^dagger] / 2.
PPoint adjoint_oracle(const UnitaryGate &u) {
    PPoint p;
    for (int i = 1; i <= 3; i++) {
        p[i - 1] = 0.5 * trace(pauli(i) * u * pauli(i) * dagger(u)).real();
    }
    return p;
}

DensityOperator ket_bra(int j) {
    return outer(bell(j));
}

TEST(CcCorrIndex, BellAndProductStates) {
    EXPECT_NEAR(cc_corr_index(ket_bra(1), 2), -1, 1e-12);
    EXPECT_NEAR(cc_corr_index(ket_bra(1), 1), 1, 1e-12);
    DensityOperator zz;
    zz(0, 0) = 1;
    EXPECT_NEAR(cc_corr_index(zz, 1), 0, 1e-12);
}

TEST(CcCorrIndex, RejectsInvalidInput) {
    EXPECT_THROW(cc_corr_index(Mat4::identity(), 1), std::invalid_argument);
    EXPECT_THROW(cc_corr_index(ket_bra(1), 0), std::invalid_argument);
}

TEST(CcPVector, Examples) {
    EXPECT_LT(max_abs_diff(cc_pvector(ket_bra(2)), PPoint{-1, 1, 1}), 1e-12);
    DensityOperator zz;
    zz(0, 0) = 1;
    EXPECT_LT(max_abs_diff(cc_pvector(zz), PPoint{0, 0, 1}), 1e-12);
    DensityOperator mix = Complex(0.5) * ket_bra(1) + Complex(0.5) * ket_bra(2);
    EXPECT_LT(max_abs_diff(cc_pvector(mix), PPoint{0, 0, 1}), 1e-12);
}

TEST(CcPVector, BellVertices) {
    const std::array<PPoint, 4> vertices{PPoint{1, -1, 1}, PPoint{-1, 1, 1}, PPoint{1, 1, -1}, PPoint{-1, -1, -1}};
    for (int j = 1; j <= 4; j++) {
        EXPECT_LT(max_abs_diff(cc_pvector(ket_bra(j)), vertices[j - 1]), 1e-12);
        EXPECT_LT(max_abs_diff(cc_pvector(bell(j)), vertices[j - 1]), 1e-12);
    }
}

TEST(CcPVector, MatchesBellDiagonalOracle) {
    SamplerConfig cfg;
    cfg.seed = 101;
    Sampler sampler(cfg);
    for (int t = 0; t < 2000; t++) {
        DensityOperator rho = sampler.sweep_density();
        EXPECT_LT(max_abs_diff(cc_pvector(rho), bell_diagonal_oracle(rho)), 1e-12);
    }
}

TEST(CcPVector, PureStateOverloadRequiresUnitNorm) {
    Vec4 v{{1.0, 1.0, 0.0, 0.0}};
    EXPECT_THROW(cc_pvector(v), std::invalid_argument);
    EXPECT_LT(max_abs_diff(cc_pvector(normalized(v)), cc_pvector(outer(normalized(v)))), 1e-12);
}

TEST(StatisticC, Examples) {
    EXPECT_DOUBLE_EQ(statistic_c({1, -1, 1}), -1);
    EXPECT_DOUBLE_EQ(statistic_c({1, 1, 1}), 1);
    EXPECT_NEAR(statistic_c({1.0 / 3, 1.0 / 3, 1.0 / 3}), 1.0 / 27, 1e-17);
}

TEST(DcCondProb, Examples) {
    EXPECT_NEAR(dc_cond_prob(pauli(0), 1, 0), 1, 1e-12);
    EXPECT_NEAR(dc_cond_prob(pauli(3), 1, 0), 0, 1e-12);
    EXPECT_NEAR(dc_cond_prob(hadamard(), 3, 0), 0.5, 1e-12);
}

TEST(DcCorrIndex, Examples) {
    EXPECT_NEAR(dc_corr_index(pauli(1), 2), -1, 1e-12);
    EXPECT_NEAR(dc_corr_index(pauli(0), 3), 1, 1e-12);
    EXPECT_NEAR(dc_corr_index(hadamard(), 2), -1, 1e-12);
    Mat2 bad;
    bad(0, 0) = 2;
    EXPECT_THROW(dc_corr_index(bad, 1), std::invalid_argument);
}

TEST(DcPVector, Examples) {
    EXPECT_LT(max_abs_diff(dc_pvector(pauli(2)), PPoint{-1, 1, -1}), 1e-12);
    EXPECT_LT(max_abs_diff(dc_pvector(hadamard()), PPoint{0, -1, 0}), 1e-12);
    EXPECT_LT(max_abs_diff(dc_pvector(pauli(0)), PPoint{1, 1, 1}), 1e-12);
}

TEST(DcPVector, PauliVertices) {
    const std::array<PPoint, 4> vertices{PPoint{1, 1, 1}, PPoint{1, -1, -1}, PPoint{-1, 1, -1}, PPoint{-1, -1, 1}};
    for (int i = 0; i < 4; i++) {
        EXPECT_LT(max_abs_diff(dc_pvector(pauli(i)), vertices[i]), 1e-12);
    }
}

TEST(DcPVector, MatchesAdjointOracle) {
    SamplerConfig cfg;
    cfg.seed = 5;
    Sampler sampler(cfg);
    for (int t = 0; t < 2000; t++) {
        UnitaryGate u = sampler.unitary();
        EXPECT_LT(max_abs_diff(dc_pvector(u), adjoint_oracle(u)), 1e-12);
    }
}

TEST(ClosedForm, Examples) {
    const double s = 1 / std::sqrt(2.0);
    UnitaryGate h = unitary_from_params({s, 0, s, 0, kPi});
    EXPECT_LT(max_abs_diff(h, hadamard()), 1e-12);
    EXPECT_LT(max_abs_diff(dc_pvector_closed_form(h), PPoint{0, -1, 0}), 1e-12);
    EXPECT_LT(max_abs_diff(dc_pvector_closed_form(pauli(0)), PPoint{1, 1, 1}), 1e-12);
}

TEST(ClosedForm, AgreesWithProjectorRoute) {
    SamplerConfig cfg;
    cfg.seed = 17;
    Sampler sampler(cfg);
    for (int t = 0; t < 5000; t++) {
        UnitaryGate u = sampler.unitary();
        EXPECT_LT(max_abs_diff(dc_pvector_closed_form(u), dc_pvector(u)), 1e-10);
    }
}

TEST(UnitaryParams, RoundTrip) {
    SamplerConfig cfg;
    cfg.seed = 23;
    Sampler sampler(cfg);
    for (int t = 0; t < 1000; t++) {
        UnitaryGate u = sampler.unitary();
        EXPECT_LT(max_abs_diff(unitary_from_params(unitary_params(u)), u), 1e-12);
    }
}

TEST(Mixture, Examples) {
    SamplerConfig cfg;
    Sampler sampler(cfg);
    DensityOperator rho = sampler.density();
    UnitaryGate u = sampler.unitary();
    EXPECT_LT(max_abs_diff(mixture_pvector({rho, u, 1.0}), cc_pvector(rho)), 1e-12);
    EXPECT_LT(max_abs_diff(mixture_pvector({rho, u, 0.0}), dc_pvector(u)), 1e-12);
    EXPECT_LT(max_abs_diff(mixture_pvector({ket_bra(4), pauli(0), 0.5}), PPoint{0, 0, 0}), 1e-12);
    EXPECT_THROW(mixture_pvector({rho, u, 1.5}), std::invalid_argument);
}

TEST(Mixture, JointOutcomeRouteIsLinear) {
    SamplerConfig cfg;
    cfg.seed = 31;
    Sampler sampler(cfg);
    for (int t = 0; t < 1000; t++) {
        MixtureScenario s{sampler.density(), sampler.unitary(), sampler.rng().uniform()};
        Vec2 a = normalized(Vec2{{Complex(sampler.rng().normal(), sampler.rng().normal()),
                                  Complex(sampler.rng().normal(), sampler.rng().normal())}});
        EXPECT_LT(max_abs_diff(mixture_pvector_from_joint(s, a), mixture_pvector(s)), 1e-10);
    }
}

TEST(StateIndependence, Examples) {
    EXPECT_NEAR(dc_state_independence_check(pauli(1), 1), 0, 1e-12);
    EXPECT_NEAR(dc_state_independence_check(hadamard(), 2), 0, 1e-12);
    SamplerConfig cfg;
    cfg.seed = 37;
    Sampler sampler(cfg);
    for (int t = 0; t < 10000; t++) {
        UnitaryGate u = sampler.unitary();
        for (int i = 1; i <= 3; i++) {
            ASSERT_LE(dc_state_independence_check(u, i), 1e-12);
        }
    }
}

TEST(SplitRealImag, Reassembles) {
    SamplerConfig cfg;
    cfg.seed = 41;
    Sampler sampler(cfg);
    for (int t = 0; t < 1000; t++) {
        Vec4 phi = sampler.complex_pure();
        RealImagSplit s = split_real_imag(phi);
        EXPECT_GE(s.cos_alpha, 0);
        EXPECT_GE(s.sin_alpha, 0);
        Vec4 back = Complex(s.cos_alpha) * s.x + Complex(0, s.sin_alpha) * s.y;
        EXPECT_LT(max_abs_diff(back, phi), 1e-12);
        for (int k = 0; k < 4; k++) {
            EXPECT_EQ(s.x[k].imag(), 0);
            EXPECT_EQ(s.y[k].imag(), 0);
        }
    }
}

TEST(SplitRealImag, RealState) {
    RealImagSplit s = split_real_imag(bell(3));
    EXPECT_DOUBLE_EQ(s.cos_alpha, 1);
    EXPECT_DOUBLE_EQ(s.sin_alpha, 0);
    EXPECT_EQ(s.y, Vec4{});
}

}  // namespace
}  // namespace qcause
