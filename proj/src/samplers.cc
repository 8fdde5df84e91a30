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


#include "qcause/samplers.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcause/errors.h"

namespace qcause {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u;
    double v;
    double s;
    do {
        u = 2 * uniform() - 1;
        v = 2 * uniform() - 1;
        s = u * u + v * v;
    } while (s >= 1 || s == 0);
    const double f = std::sqrt(-2 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void SamplerConfig::validate() const {
    if (density_rank < 1 || density_rank > 4) {
        throw std::invalid_argument("SamplerConfig: density_rank must be in 1..4");
    }
    if (max_rejections < 1) {
        throw std::invalid_argument("SamplerConfig: max_rejections must be >= 1");
    }
}

SamplerConfig SamplerConfig::for_stream(std::uint64_t index) const {
    SamplerConfig out = *this;
    out.seed = derive_seed(seed, index);
    return out;
}

std::string_view to_string(CauseKind kind) {
    return kind == CauseKind::kCommonCause ? "CC" : "DC";
}

std::string_view to_string(Region region) {
    switch (region) {
        case Region::kO:
            return "O";
        case Region::kTcc:
            return "TCC";
        case Region::kTdc:
            return "TDC";
        case Region::kOtc:
            return "OTC";
        case Region::kOtd:
            return "OTD";
    }
    return "?";
}

bool in_region(Region region, const PPoint &p, double tol) {
    switch (region) {
        case Region::kO:
            return in_overlap(p, tol);
        case Region::kTcc:
            return contains(tcc(), p, tol);
        case Region::kTdc:
            return contains(tdc(), p, tol);
        case Region::kOtc:
            return in_otc(p, tol);
        case Region::kOtd:
            return in_otd(p, tol);
    }
    return false;
}

Sampler::Sampler(const SamplerConfig &cfg) : cfg_(cfg), rng_(cfg.seed) {
    cfg_.validate();
}

Vec4 Sampler::real_pure() {
    Vec4 v;
    for (std::size_t k = 0; k < 4; k++) {
        v[k] = rng_.normal();
    }
    return normalized(v);
}

Vec4 Sampler::complex_pure() {
    Vec4 v;
    for (std::size_t k = 0; k < 4; k++) {
        const double re = rng_.normal();
        const double im = rng_.normal();
        v[k] = Complex(re, im);
    }
    return normalized(v);
}

DensityOperator Sampler::density_of_rank(int rank) {
    if (rank == 1) {
        return outer(complex_pure());
    }
    std::array<double, 4> lambda{};
    double total = 0;
    for (int j = 0; j < rank; j++) {
        lambda[j] = -std::log(1 - rng_.uniform());
        total += lambda[j];
    }
    DensityOperator rho;
    for (int j = 0; j < rank; j++) {
        rho = rho + Complex(lambda[j] / total) * outer(complex_pure());
    }
    return rho;
}

DensityOperator Sampler::density() {
    return density_of_rank(cfg_.density_rank);
}

UnitaryGate Sampler::unitary() {
    std::array<double, 4> a;
    double n2 = 0;
    for (double &x : a) {
        x = rng_.normal();
        n2 += x * x;
    }
    const double n = std::sqrt(n2);
    UnitaryParams q;
    q.a1 = a[0] / n;
    q.a2 = a[1] / n;
    q.b1 = a[2] / n;
    q.b2 = a[3] / n;
    q.alpha = 2 * std::numbers::pi * rng_.uniform();
    return unitary_from_params(q);
}

DensityOperator Sampler::sweep_density() {
    const std::uint64_t k = sweep_counter_++;
    switch (k % 3) {
        case 0:
            return outer(real_pure());
        case 1:
            return outer(complex_pure());
        default:
            return density_of_rank(2 + static_cast<int>((k / 3) % 3));
    }
}

DensityOperator Sampler::density_in_region(Region region) {
    if (region == Region::kTdc || region == Region::kOtd) {
        throw std::invalid_argument("sample_in_region: region " + std::string(to_string(region)) +
                                    " is not a common-cause region");
    }
    for (std::int64_t tries = 0; tries < cfg_.max_rejections; tries++) {
        DensityOperator rho = density();
        attempts_++;
        if (in_region(region, cc_pvector(rho), 0.0)) {
            accepted_++;
            return rho;
        }
    }
    throw SamplingExhausted("sample_in_region: no density operator landed in " + std::string(to_string(region)) +
                                " within max_rejections (acceptance so far " +
                                std::to_string(attempts_ ? double(accepted_) / double(attempts_) : 0.0) + ")",
                            attempts_, accepted_);
}

UnitaryGate Sampler::unitary_in_region(Region region) {
    if (region == Region::kTcc || region == Region::kOtc) {
        throw std::invalid_argument("sample_in_region: region " + std::string(to_string(region)) +
                                    " is not a direct-cause region");
    }
    for (std::int64_t tries = 0; tries < cfg_.max_rejections; tries++) {
        UnitaryGate u = unitary();
        attempts_++;
        if (in_region(region, dc_pvector(u), 0.0)) {
            accepted_++;
            return u;
        }
    }
    throw SamplingExhausted("sample_in_region: no unitary landed in " + std::string(to_string(region)) +
                                " within max_rejections (acceptance so far " +
                                std::to_string(attempts_ ? double(accepted_) / double(attempts_) : 0.0) + ")",
                            attempts_, accepted_);
}

std::variant<DensityOperator, UnitaryGate> Sampler::sample_in_region(CauseKind kind, Region region) {
    if (kind == CauseKind::kCommonCause) {
        return density_in_region(region);
    }
    return unitary_in_region(region);
}

double shot_cc_corr_index(const DensityOperator &rho, int i, int shots, Rng &rng) {
    if (shots < 1) {
        throw std::invalid_argument("shot_cc_corr_index: shots must be >= 1");
    }
    const double p_equal = 0.5 * (cc_corr_index(rho, i) + 1);
    int equal = 0;
    for (int s = 0; s < shots; s++) {
        if (rng.uniform() < p_equal) {
            equal++;
        }
    }
    return (2.0 * equal - shots) / shots;
}

}  // namespace qcause
