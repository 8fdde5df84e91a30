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


#include "qcause/basis_change.h"

#include <stdexcept>
#include <string>

#include "qcause/errors.h"

namespace qcause {

namespace {

constexpr double kRangeTol = 1e-9;
constexpr double kEscapeMargin = 1e-9;

void require_unitary(const UnitaryGate &u, const char *who) {
    if (!is_unitary(u, kInputTol)) {
        throw std::invalid_argument(std::string(who) + ": matrix is not unitary");
    }
}

void require_density(const DensityOperator &rho, const char *who) {
    std::string why = density_failure(rho, kInputTol);
    if (!why.empty()) {
        throw std::invalid_argument(std::string(who) + ": invalid density operator (" + why + ")");
    }
}

Mat2 rounded_matrix(double a, double b, double c, double d, double e, double f, double g, double h) {
    Mat2 m;
    m(0, 0) = Complex(a, b);
    m(0, 1) = Complex(c, d);
    m(1, 0) = Complex(e, f);
    m(1, 1) = Complex(g, h);
    return m;
}

PPoint rotated_point(CauseKind kind, const std::variant<DensityOperator, UnitaryGate> &obj, const UnitaryGate &v) {
    if (kind == CauseKind::kCommonCause) {
        return pprime_cc(std::get<DensityOperator>(obj), v);
    }
    return pprime_dc(std::get<UnitaryGate>(obj), v);
}

}  // namespace

DensityOperator transform_density(const DensityOperator &rho, const UnitaryGate &v) {
    require_density(rho, "transform_density");
    require_unitary(v, "transform_density");
    const Mat4 vv = tensor_product(v, v);
    DensityOperator out = dagger(vv) * rho * vv;
    if (!is_density(out, 1e-9)) {
        throw ConsistencyError("transform_density: result is not a density operator");
    }
    return out;
}

UnitaryGate transform_unitary(const UnitaryGate &u, const UnitaryGate &v) {
    require_unitary(u, "transform_unitary");
    require_unitary(v, "transform_unitary");
    UnitaryGate out = dagger(v) * u * v;
    if (!is_unitary(out, 1e-10)) {
        throw ConsistencyError("transform_unitary: result is not unitary");
    }
    return out;
}

PPoint pprime_cc(const DensityOperator &rho, const UnitaryGate &v) {
    require_density(rho, "pprime_cc");
    require_unitary(v, "pprime_cc");
    PPoint r;
    for (int i = 1; i <= 3; i++) {
        auto [m0, m1] = pauli_eigenbasis(i);
        const Vec2 r0 = v * m0;
        const Vec2 r1 = v * m1;
        Complex p = expectation(rho, tensor_product(r0, r0)) + expectation(rho, tensor_product(r1, r1));
        if (std::abs(p.imag()) > kResidueTol) {
            throw ConsistencyError("pprime_cc: imaginary residue on a probability");
        }
        r[i - 1] = 2 * p.real() - 1;
    }
    return r;
}

PPoint pprime_dc(const UnitaryGate &u, const UnitaryGate &v) {
    require_unitary(u, "pprime_dc");
    require_unitary(v, "pprime_dc");
    PPoint r;
    for (int i = 1; i <= 3; i++) {
        const Vec2 m0 = v * pauli_eigenbasis(i).first;
        r[i - 1] = 2 * std::norm(inner(m0, u * m0)) - 1;
    }
    return r;
}

UnitaryGate table2_v_rounded(int index) {
    switch (index) {
        case 1:
            return rounded_matrix(0.1813, -0.5744, 0.2656, 0.7527, -0.6807, 0.4170, -0.2213, 0.5602);
        case 2:
            return rounded_matrix(-0.1080, 0.7959, 0.4848, -0.3461, -0.4763, -0.3577, -0.0888, -0.7983);
        case 3:
            return rounded_matrix(-0.2947, 0.5266, 0.7483, -0.2754, -0.6926, -0.3950, -0.2039, -0.5680);
        case 4:
            return rounded_matrix(0.3482, 0.3352, -0.3442, 0.8050, -0.2069, 0.8507, 0.4796, -0.0597);
        default:
            throw std::invalid_argument("table2_v: index must be in 1..4");
    }
}

UnitaryGate table2_v(int index) {
    return nearest_unitary(table2_v_rounded(index));
}

std::array<double, 2> table2_reference_percent(int index) {
    switch (index) {
        case 1:
            return {36.44, 58.91};
        case 2:
            return {35.84, 57.32};
        case 3:
            return {29.9, 50.64};
        case 4:
            return {33.45, 52.56};
        default:
            throw std::invalid_argument("table2_reference_percent: index must be in 1..4");
    }
}

EscapeResult escape_experiment(CauseKind kind, const UnitaryGate &v, std::int64_t n, const SamplerConfig &cfg) {
    if (n < 1) {
        throw std::invalid_argument("escape_experiment: n must be >= 1");
    }
    require_unitary(v, "escape_experiment");
    cfg.validate();

    const bool cc = kind == CauseKind::kCommonCause;
    const Tetrahedron range = cc ? tcc() : tdc();
    EscapeResult out;
    out.kind = kind;
    out.v = v;
    out.n_samples = n;
    std::int64_t attempts = 0;
    std::int64_t accepted = 0;

    for (std::int64_t chunk = 0; chunk * kEscapeChunk < n; chunk++) {
        Sampler sampler(cfg.for_stream(static_cast<std::uint64_t>(chunk)));
        const std::int64_t count = std::min(kEscapeChunk, n - chunk * kEscapeChunk);
        for (std::int64_t s = 0; s < count; s++) {
            const auto obj = sampler.sample_in_region(kind, Region::kO);
            const PPoint q = rotated_point(kind, obj, v);
            if (!contains(range, q, kRangeTol)) {
                throw ConsistencyError("escape_experiment: rotated point left its tetrahedron");
            }
            const bool in_target = cc ? in_otc(q, 0.0) : in_otd(q, 0.0);
            const bool left_o = !in_overlap(q, 0.0);
            out.escaped += left_o ? 1 : 0;
            out.escaped_corner_free += (left_o && in_target) ? 1 : 0;
            out.image_in_target = out.image_in_target && in_target;
        }
        attempts += sampler.region_attempts();
        accepted += sampler.region_accepted();
    }
    out.proportion = static_cast<double>(out.escaped) / static_cast<double>(n);
    out.proportion_corner_free = static_cast<double>(out.escaped_corner_free) / static_cast<double>(n);
    out.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(attempts);
    return out;
}

std::optional<UnitaryGate> search_escape_v(const std::variant<DensityOperator, UnitaryGate> &target, int max_tries,
                                           const SamplerConfig &cfg) {
    if (max_tries < 1) {
        throw std::invalid_argument("search_escape_v: max_tries must be >= 1");
    }
    const CauseKind kind =
        std::holds_alternative<DensityOperator>(target) ? CauseKind::kCommonCause : CauseKind::kDirectCause;
    const PPoint p = kind == CauseKind::kCommonCause ? cc_pvector(std::get<DensityOperator>(target))
                                                     : dc_pvector(std::get<UnitaryGate>(target));
    if (!in_overlap(p, kEscapeMargin)) {
        throw std::invalid_argument("search_escape_v: target point is not in the overlap O");
    }
    const Tetrahedron range = kind == CauseKind::kCommonCause ? tcc() : tdc();
    Sampler sampler(cfg);
    for (int t = 0; t < max_tries; t++) {
        const UnitaryGate v = sampler.unitary();
        const PPoint q = rotated_point(kind, target, v);
        if (!in_overlap(q, kEscapeMargin) && contains(range, q, kRangeTol)) {
            return v;
        }
    }
    return std::nullopt;
}

}  // namespace qcause
