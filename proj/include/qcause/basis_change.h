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


#ifndef QCAUSE_BASIS_CHANGE_H_
#define QCAUSE_BASIS_CHANGE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <variant>

#include "qcause/correlation.h"
#include "qcause/geometry.h"
#include "qcause/samplers.h"

/// Rotating the measurement bases by a unitary V.
///
/// Measuring V sigma_i V^dagger instead of sigma_i gives
///   P'(rho) = P((V x V)^dagger rho (V x V)),   P'(U) = P(V^dagger U V).
/// pprime_cc / pprime_dc compute the left-hand sides from the rotated
/// projectors directly; transform_* implement the right-hand sides.
namespace qcause {

/// (V x V)^dagger rho (V x V).
DensityOperator transform_density(const DensityOperator &rho, const UnitaryGate &v);

/// V^dagger U V.
UnitaryGate transform_unitary(const UnitaryGate &u, const UnitaryGate &v);

/// C'_ii = 2 sum_k <V m_k, V m_k| rho |V m_k, V m_k> - 1.
PPoint pprime_cc(const DensityOperator &rho, const UnitaryGate &v);

/// C'_ii = 2 |<V m_0| U |V m_0>|^2 - 1.
PPoint pprime_dc(const UnitaryGate &u, const UnitaryGate &v);

/// Basis rotations used for the escape table, rounded to 4 decimals.
UnitaryGate table2_v_rounded(int index);

/// table2_v_rounded(index) projected onto the nearest unitary. index in 1..4.
UnitaryGate table2_v(int index);

/// Reference escape percentages {common cause, direct cause} for V1..V4.
std::array<double, 2> table2_reference_percent(int index);

struct EscapeResult {
    CauseKind kind = CauseKind::kCommonCause;
    UnitaryGate v;
    std::int64_t n_samples = 0;
    /// Samples whose rotated point left O (landing in T_CC \ O, resp. T_DC \ O).
    std::int64_t escaped = 0;
    /// escaped / n_samples
    double proportion = 0;
    /// Samples whose rotated point lies in OTC \ O (resp. OTD \ O).
    std::int64_t escaped_corner_free = 0;
    double proportion_corner_free = 0;
    /// Every rotated point lies in OTC (resp. OTD).
    bool image_in_target = true;
    /// Acceptance rate of the region sampler that produced the inputs.
    double acceptance_rate = 0;
};

/// Chunk size of escape_experiment; chunk c draws from cfg.for_stream(c).
inline constexpr std::int64_t kEscapeChunk = 1000;

/// Draws n objects with P in O and rotates their measurement bases by v.
/// Throws ConsistencyError if a rotated point leaves its tetrahedron.
EscapeResult escape_experiment(CauseKind kind, const UnitaryGate &v, std::int64_t n, const SamplerConfig &cfg);

/// Random V (Sampler::unitary) until the rotated point leaves O by more than
/// 1e-9. Throws std::invalid_argument if the target's point is not in O.
std::optional<UnitaryGate> search_escape_v(const std::variant<DensityOperator, UnitaryGate> &target, int max_tries,
                                           const SamplerConfig &cfg);

}  // namespace qcause

#endif  // QCAUSE_BASIS_CHANGE_H_
