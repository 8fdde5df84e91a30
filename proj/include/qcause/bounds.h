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


#ifndef QCAUSE_BOUNDS_H_
#define QCAUSE_BOUNDS_H_

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcause/correlation.h"
#include "qcause/geometry.h"
#include "qcause/samplers.h"

/// Numerical certification of the extrema of C over T_CC and T_DC.
///
/// Two independent routes are provided and are expected to agree:
///   * a barycentric grid over the 3-simplex of the tetrahedron, followed by a
///     simplex-constrained compass search (grid_extremum, polish_extremum);
///   * Nelder-Mead restarts over the quantum objects themselves: real unit
///     states for T_CC and U(2) parameters for T_DC (multistart_*).
///
/// Expected values: max C_CC = 1/27, min C_CC = -1, max C_DC = 1,
/// min C_DC = -1/27.
namespace qcause {

enum class Direction { kMin, kMax };
enum class BoundTarget { kCcMax, kCcMin, kDcMax, kDcMin };

std::string_view to_string(BoundTarget target);
std::string_view to_string(Direction direction);
BoundTarget bound_target(CauseKind kind, Direction direction);
CauseKind cause_kind(BoundTarget target);
Direction direction(BoundTarget target);
double expected_extremum(BoundTarget target);

/// Bound on |grad(c11 c22 c33)| over the cube.
inline constexpr double kTrilinearLipschitz = 5.196152422706632;  // 3 sqrt(3)

struct BoundReport {
    BoundTarget target = BoundTarget::kCcMax;
    double value = 0;
    BaryWeights witness;
    PPoint witness_point;
    std::variant<Vec4, UnitaryGate> witness_object;
    std::string method;
    double grid_step = 0;
    /// kTrilinearLipschitz * grid_step for grid results, else 0.
    double grid_error_bound = 0;
    int starts = 0;
    /// Accepted moves (polish) or Nelder-Mead iterations summed over starts.
    int iterations = 0;
    bool converged = true;
};

/// Best value of C over the barycentric lattice with spacing
/// 1/ceil(1/step). t must be tcc() or tdc(). Throws std::invalid_argument
/// unless 0 < step <= 0.1.
BoundReport grid_extremum(const Tetrahedron &t, Direction direction, double step);

/// Compass search over pair transfers w_i += h, w_j -= h on the simplex,
/// starting from the report's witness, halving h until h < tol. Stops after
/// 10^4 sweeps with converged = false. Never returns a worse value.
BoundReport polish_extremum(const BoundReport &report, double tol);

/// Nelder-Mead over real unit states (three hyperspherical angles) from
/// `starts` random initializations; optimizes statistic_c(cc_pvector(phi)).
BoundReport multistart_state_extremum(Direction direction, int starts, const SamplerConfig &cfg);

/// Nelder-Mead over (a1, a2, b1, b2) on the 3-sphere (three angles) and
/// alpha; optimizes statistic_c(dc_pvector(U)).
BoundReport multistart_unitary_extremum(Direction direction, int starts, const SamplerConfig &cfg);

struct NelderMeadOptions {
    double initial_step = 0.5;
    double f_tol = 1e-15;
    double x_tol = 1e-10;
    int max_iterations = 10000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0;
    int iterations = 0;
    bool converged = false;
};

/// Minimizes f from x0.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)> &f, std::vector<double> x0,
                             const NelderMeadOptions &options = {});

}  // namespace qcause

#endif  // QCAUSE_BOUNDS_H_
