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


#ifndef QCAUSE_SAMPLERS_H_
#define QCAUSE_SAMPLERS_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <variant>

#include "qcause/correlation.h"
#include "qcause/geometry.h"

namespace qcause {

/// mt19937_64 bit stream with uniform and normal transforms defined here, so
/// a seed yields the same numbers with every standard library.
class Rng {
   public:
    static constexpr std::string_view kName = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }
    std::uint64_t next_u64() {
        return engine_();
    }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    /// Standard normal (Marsaglia polar method).
    double normal();

   private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0;
};

/// Seed of stream `index` derived from a base seed: SplitMix64 applied to
/// seed + (index + 1) * 0x9E3779B97F4A7C15. Chunked Monte Carlo runs give
/// chunk k the generator Rng(derive_seed(seed, k)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct SamplerConfig {
    std::uint64_t seed = 42;
    int density_rank = 4;
    std::int64_t max_rejections = 1'000'000;

    /// Throws std::invalid_argument.
    void validate() const;
    /// Same settings on the derived stream `index`.
    SamplerConfig for_stream(std::uint64_t index) const;
};

enum class CauseKind { kCommonCause, kDirectCause };
enum class Region { kO, kTcc, kTdc, kOtc, kOtd };

std::string_view to_string(CauseKind kind);
std::string_view to_string(Region region);

/// Closed membership of p in the region.
bool in_region(Region region, const PPoint &p, double tol);

/// Stateful source of random quantum objects.
///
/// Laws:
///   real_pure     4 standard normals, normalized (uniform on the real 3-sphere)
///   complex_pure  8 standard normals as 4 complex amplitudes, normalized
///   density       sum_{j<=rank} lambda_j |phi_j><phi_j|, phi_j complex_pure,
///                 lambda uniform on the simplex
///   unitary       unitary_from_params with (a1, a2, b1, b2) uniform on the
///                 real 3-sphere and alpha uniform on [0, 2 pi)
class Sampler {
   public:
    explicit Sampler(const SamplerConfig &cfg);

    Vec4 real_pure();
    Vec4 complex_pure();
    DensityOperator density();
    UnitaryGate unitary();

    /// Cycles real pure, complex pure and mixed (rank 2, 3, 4) draws. Used for
    /// bound sweeps that must also approach the Bell vertices, which complex
    /// or mixed draws essentially never do.
    DensityOperator sweep_density();

    /// Rejection sampling from density() until P lies in the region. Throws
    /// std::invalid_argument for a DC-only region and SamplingExhausted after
    /// max_rejections consecutive rejections.
    DensityOperator density_in_region(Region region);
    UnitaryGate unitary_in_region(Region region);
    std::variant<DensityOperator, UnitaryGate> sample_in_region(CauseKind kind, Region region);

    const SamplerConfig &config() const {
        return cfg_;
    }
    Rng &rng() {
        return rng_;
    }
    /// Region-sampling statistics since construction.
    std::int64_t region_attempts() const {
        return attempts_;
    }
    std::int64_t region_accepted() const {
        return accepted_;
    }

   private:
    DensityOperator density_of_rank(int rank);

    SamplerConfig cfg_;
    Rng rng_;
    std::uint64_t sweep_counter_ = 0;
    std::int64_t attempts_ = 0;
    std::int64_t accepted_ = 0;
};

/// C_ii estimated from `shots` simulated joint measurements. For
/// demonstration; the exact cc_corr_index is used everywhere else.
double shot_cc_corr_index(const DensityOperator &rho, int i, int shots, Rng &rng);

}  // namespace qcause

#endif  // QCAUSE_SAMPLERS_H_
