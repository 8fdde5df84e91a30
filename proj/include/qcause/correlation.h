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


#ifndef QCAUSE_CORRELATION_H_
#define QCAUSE_CORRELATION_H_

#include <array>

#include "qcause/qmath.h"

namespace qcause {

using DensityOperator = Mat4;
using UnitaryGate = Mat2;

/// Tolerance used to validate density operators and unitaries on entry.
inline constexpr double kInputTol = 1e-9;
/// Largest imaginary residue tolerated on a trace that must be real.
inline constexpr double kResidueTol = 1e-10;

/// (C11, C22, C33), a point of the correlation cube [-1, 1]^3.
struct PPoint {
    double c11 = 0;
    double c22 = 0;
    double c33 = 0;

    /// 0-based component access: 0 -> C11, 1 -> C22, 2 -> C33.
    double operator[](int k) const {
        return k == 0 ? c11 : (k == 1 ? c22 : c33);
    }
    double &operator[](int k) {
        return k == 0 ? c11 : (k == 1 ? c22 : c33);
    }
    bool operator==(const PPoint &) const = default;
};

inline PPoint operator+(const PPoint &a, const PPoint &b) {
    return {a.c11 + b.c11, a.c22 + b.c22, a.c33 + b.c33};
}
inline PPoint operator-(const PPoint &a, const PPoint &b) {
    return {a.c11 - b.c11, a.c22 - b.c22, a.c33 - b.c33};
}
inline PPoint operator*(double s, const PPoint &a) {
    return {s * a.c11, s * a.c22, s * a.c33};
}
inline double max_abs_diff(const PPoint &a, const PPoint &b) {
    return std::max({std::abs(a.c11 - b.c11), std::abs(a.c22 - b.c22), std::abs(a.c33 - b.c33)});
}

/// p-mixture of a common cause rho and a causal evolution u; p is the
/// weight of the common-cause branch.
struct MixtureScenario {
    DensityOperator rho;
    UnitaryGate u;
    double p = 1;

    /// Throws std::invalid_argument naming the failed condition.
    void validate() const;
};

/// C_ii(rho) = 2 Tr[rho (|m0 m0><m0 m0| + |m1 m1><m1 m1|)] - 1 for the
/// eigenbasis of sigma_i. Throws std::invalid_argument for an invalid rho or
/// axis, ConsistencyError if the trace has an imaginary residue > 1e-10.
double cc_corr_index(const DensityOperator &rho, int i);

/// P(rho).
PPoint cc_pvector(const DensityOperator &rho);

/// P(|phi>) for a pure state; phi must be unit norm within 1e-10.
PPoint cc_pvector(const Vec4 &phi);

double statistic_c(const PPoint &p);

/// |<m_k|U|m_k>|^2: probability that B repeats outcome k of A.
double dc_cond_prob(const UnitaryGate &u, int i, int k);

/// 2 dc_cond_prob(u, i, 0) - 1.
double dc_corr_index(const UnitaryGate &u, int i);

/// P(U).
PPoint dc_pvector(const UnitaryGate &u);

/// Parameters of U = [[a1 + i a2, b1 + i b2], [-e^{i alpha}(b1 - i b2), e^{i alpha}(a1 - i a2)]],
/// a1^2 + a2^2 + b1^2 + b2^2 = 1.
struct UnitaryParams {
    double a1 = 1;
    double a2 = 0;
    double b1 = 0;
    double b2 = 0;
    double alpha = 0;
};

UnitaryGate unitary_from_params(const UnitaryParams &params);

/// Inverse of unitary_from_params with alpha = arg det(u) in (-pi, pi].
UnitaryParams unitary_params(const UnitaryGate &u);

/// P(U) through the closed form
///   C11 = 2(c - d) - 1, C22 = 2(c + d) - 1, C33 = 2(a1^2 + a2^2) - 1,
///   c = 1/2 + a1 a2 sin(alpha) + cos(alpha)/2 (a1^2 - a2^2),
///   d = b1 b2 sin(alpha) + cos(alpha)/2 (b1^2 - b2^2).
PPoint dc_pvector_closed_form(const UnitaryGate &u);

/// p P(rho) + (1 - p) P(U).
PPoint mixture_pvector(const MixtureScenario &s);

/// P of the mixture evaluated from the joint outcome distribution of each
/// branch: with probability p the pair is measured on rho, otherwise A (in
/// state initial_a) is measured, evolved by U and measured again.
PPoint mixture_pvector_from_joint(const MixtureScenario &s, const Vec2 &initial_a);

/// |dc_cond_prob(u, i, 0) - dc_cond_prob(u, i, 1)|; zero for every unitary.
double dc_state_independence_check(const UnitaryGate &u, int i);

/// phi = cos(alpha)|x> + i sin(alpha)|y> with |x>, |y> real unit vectors and
/// cos(alpha), sin(alpha) >= 0. A vanishing part leaves its vector zero.
struct RealImagSplit {
    double cos_alpha = 1;
    double sin_alpha = 0;
    Vec4 x;
    Vec4 y;
};

RealImagSplit split_real_imag(const Vec4 &phi);

}  // namespace qcause

#endif  // QCAUSE_CORRELATION_H_
