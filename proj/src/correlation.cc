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

#include <stdexcept>
#include <string>

#include "qcause/errors.h"

namespace qcause {

namespace {

void require_density(const DensityOperator &rho, const char *who) {
    std::string why = density_failure(rho, kInputTol);
    if (!why.empty()) {
        throw std::invalid_argument(std::string(who) + ": invalid density operator (" + why + ")");
    }
}

void require_unitary(const UnitaryGate &u, const char *who) {
    if (!is_unitary(u, kInputTol)) {
        throw std::invalid_argument(std::string(who) + ": matrix is not unitary");
    }
}

void require_axis(int i, const char *who) {
    if (i < 1 || i > 3) {
        throw std::invalid_argument(std::string(who) + ": axis must be in 1..3, got " + std::to_string(i));
    }
}

double real_part_checked(Complex z, const char *who) {
    if (std::abs(z.imag()) > kResidueTol) {
        throw ConsistencyError(std::string(who) + ": imaginary residue " + std::to_string(z.imag()) +
                               " on a real quantity");
    }
    return z.real();
}

// Probability of equal outcomes when sigma_i is measured on both qubits.
double equal_outcome_prob(const DensityOperator &rho, int i) {
    auto [m0, m1] = pauli_eigenbasis(i);
    Complex p = expectation(rho, tensor_product(m0, m0)) + expectation(rho, tensor_product(m1, m1));
    return real_part_checked(p, "cc_corr_index");
}

PPoint cc_pvector_unchecked(const DensityOperator &rho) {
    PPoint r;
    for (int i = 1; i <= 3; i++) {
        r[i - 1] = 2 * equal_outcome_prob(rho, i) - 1;
    }
    return r;
}

double cond_prob_unchecked(const UnitaryGate &u, int i, int k) {
    auto basis = pauli_eigenbasis(i);
    const Vec2 &m = k == 0 ? basis.first : basis.second;
    return std::norm(inner(m, u * m));
}

}  // namespace

void MixtureScenario::validate() const {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("MixtureScenario: p must be in [0, 1]");
    }
    require_density(rho, "MixtureScenario");
    require_unitary(u, "MixtureScenario");
}

double cc_corr_index(const DensityOperator &rho, int i) {
    require_axis(i, "cc_corr_index");
    require_density(rho, "cc_corr_index");
    return 2 * equal_outcome_prob(rho, i) - 1;
}

PPoint cc_pvector(const DensityOperator &rho) {
    require_density(rho, "cc_pvector");
    return cc_pvector_unchecked(rho);
}

PPoint cc_pvector(const Vec4 &phi) {
    if (std::abs(norm(phi) - 1) > 1e-10) {
        throw std::invalid_argument("cc_pvector: state is not unit norm");
    }
    return cc_pvector_unchecked(outer(phi));
}

double statistic_c(const PPoint &p) {
    return p.c11 * p.c22 * p.c33;
}

double dc_cond_prob(const UnitaryGate &u, int i, int k) {
    require_axis(i, "dc_cond_prob");
    if (k != 0 && k != 1) {
        throw std::invalid_argument("dc_cond_prob: eigenindex must be 0 or 1");
    }
    require_unitary(u, "dc_cond_prob");
    return cond_prob_unchecked(u, i, k);
}

double dc_corr_index(const UnitaryGate &u, int i) {
    return 2 * dc_cond_prob(u, i, 0) - 1;
}

PPoint dc_pvector(const UnitaryGate &u) {
    require_unitary(u, "dc_pvector");
    PPoint r;
    for (int i = 1; i <= 3; i++) {
        r[i - 1] = 2 * cond_prob_unchecked(u, i, 0) - 1;
    }
    return r;
}

UnitaryGate unitary_from_params(const UnitaryParams &q) {
    const Complex phase = std::polar(1.0, q.alpha);
    UnitaryGate u;
    u(0, 0) = Complex(q.a1, q.a2);
    u(0, 1) = Complex(q.b1, q.b2);
    u(1, 0) = -phase * Complex(q.b1, -q.b2);
    u(1, 1) = phase * Complex(q.a1, -q.a2);
    return u;
}

UnitaryParams unitary_params(const UnitaryGate &u) {
    require_unitary(u, "unitary_params");
    UnitaryParams q;
    q.alpha = std::arg(determinant(u));
    q.a1 = u(0, 0).real();
    q.a2 = u(0, 0).imag();
    q.b1 = u(0, 1).real();
    q.b2 = u(0, 1).imag();
    return q;
}

PPoint dc_pvector_closed_form(const UnitaryGate &u) {
    const UnitaryParams q = unitary_params(u);
    const double s = std::sin(q.alpha);
    const double c_alpha = std::cos(q.alpha);
    const double c = 0.5 + q.a1 * q.a2 * s + 0.5 * c_alpha * (q.a1 * q.a1 - q.a2 * q.a2);
    const double d = q.b1 * q.b2 * s + 0.5 * c_alpha * (q.b1 * q.b1 - q.b2 * q.b2);
    return {2 * (c - d) - 1, 2 * (c + d) - 1, 2 * (q.a1 * q.a1 + q.a2 * q.a2) - 1};
}

PPoint mixture_pvector(const MixtureScenario &s) {
    s.validate();
    return s.p * cc_pvector_unchecked(s.rho) + (1 - s.p) * dc_pvector(s.u);
}

PPoint mixture_pvector_from_joint(const MixtureScenario &s, const Vec2 &initial_a) {
    s.validate();
    if (std::abs(norm(initial_a) - 1) > 1e-10) {
        throw std::invalid_argument("mixture_pvector_from_joint: initial state is not unit norm");
    }
    PPoint r;
    for (int i = 1; i <= 3; i++) {
        auto [m0, m1] = pauli_eigenbasis(i);
        const std::array<Vec2, 2> basis{m0, m1};

        double p_equal_cc = 0;
        double p_equal_dc = 0;
        for (int k = 0; k < 2; k++) {
            const Vec4 kk = tensor_product(basis[k], basis[k]);
            p_equal_cc += real_part_checked(expectation(s.rho, kk), "mixture_pvector_from_joint");

            const double p_a = std::norm(inner(basis[k], initial_a));
            const Vec2 evolved = s.u * basis[k];
            p_equal_dc += p_a * std::norm(inner(basis[k], evolved));
        }
        const double p_equal = s.p * p_equal_cc + (1 - s.p) * p_equal_dc;
        r[i - 1] = p_equal - (1 - p_equal);
    }
    return r;
}

double dc_state_independence_check(const UnitaryGate &u, int i) {
    return std::abs(dc_cond_prob(u, i, 0) - dc_cond_prob(u, i, 1));
}

RealImagSplit split_real_imag(const Vec4 &phi) {
    RealImagSplit out;
    double re2 = 0;
    double im2 = 0;
    for (std::size_t k = 0; k < 4; k++) {
        re2 += phi[k].real() * phi[k].real();
        im2 += phi[k].imag() * phi[k].imag();
    }
    out.cos_alpha = std::sqrt(re2);
    out.sin_alpha = std::sqrt(im2);
    for (std::size_t k = 0; k < 4; k++) {
        out.x[k] = out.cos_alpha > 0 ? phi[k].real() / out.cos_alpha : 0.0;
        out.y[k] = out.sin_alpha > 0 ? phi[k].imag() / out.sin_alpha : 0.0;
    }
    return out;
}

}  // namespace qcause
