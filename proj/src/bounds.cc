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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qcause/errors.h"

namespace qcause {

namespace {

constexpr double kWitnessTol = 1e-8;
constexpr int kMaxPolishSweeps = 10000;

// Sign that turns every target into a minimization.
double objective_sign(Direction d) {
    return d == Direction::kMin ? 1.0 : -1.0;
}

double c_from_weights(const Tetrahedron &t, const BaryWeights &w) {
    return statistic_c(from_barycentric(t, w));
}

// Rebuilds the witness object from weights and cross-checks the value
// through the correlation module.
void attach_witness(BoundReport &r) {
    const Tetrahedron t = cause_kind(r.target) == CauseKind::kCommonCause ? tcc() : tdc();
    r.witness_point = from_barycentric(t, r.witness);
    PPoint realized;
    if (cause_kind(r.target) == CauseKind::kCommonCause) {
        Vec4 phi = state_from_weights(r.witness);
        realized = cc_pvector(phi);
        r.witness_object = phi;
    } else {
        UnitaryGate u = unitary_from_probs(r.witness);
        realized = dc_pvector(u);
        r.witness_object = u;
    }
    if (std::abs(statistic_c(realized) - r.value) > kWitnessTol) {
        throw ConsistencyError("bound witness does not reproduce its value");
    }
}

std::array<double, 4> sphere_point(double t1, double t2, double t3) {
    return {std::cos(t1), std::sin(t1) * std::cos(t2), std::sin(t1) * std::sin(t2) * std::cos(t3),
            std::sin(t1) * std::sin(t2) * std::sin(t3)};
}

Vec4 state_from_angles(std::span<const double> x) {
    auto s = sphere_point(x[0], x[1], x[2]);
    Vec4 phi;
    for (std::size_t k = 0; k < 4; k++) {
        phi[k] = s[k];
    }
    return phi;
}

UnitaryGate unitary_from_angles(std::span<const double> x) {
    auto s = sphere_point(x[0], x[1], x[2]);
    return unitary_from_params(UnitaryParams{s[0], s[1], s[2], s[3], x[3]});
}

}  // namespace

std::string_view to_string(BoundTarget target) {
    switch (target) {
        case BoundTarget::kCcMax:
            return "CC_MAX";
        case BoundTarget::kCcMin:
            return "CC_MIN";
        case BoundTarget::kDcMax:
            return "DC_MAX";
        case BoundTarget::kDcMin:
            return "DC_MIN";
    }
    return "?";
}

std::string_view to_string(Direction direction) {
    return direction == Direction::kMin ? "MIN" : "MAX";
}

BoundTarget bound_target(CauseKind kind, Direction d) {
    if (kind == CauseKind::kCommonCause) {
        return d == Direction::kMax ? BoundTarget::kCcMax : BoundTarget::kCcMin;
    }
    return d == Direction::kMax ? BoundTarget::kDcMax : BoundTarget::kDcMin;
}

CauseKind cause_kind(BoundTarget target) {
    return target == BoundTarget::kCcMax || target == BoundTarget::kCcMin ? CauseKind::kCommonCause
                                                                           : CauseKind::kDirectCause;
}

Direction direction(BoundTarget target) {
    return target == BoundTarget::kCcMax || target == BoundTarget::kDcMax ? Direction::kMax : Direction::kMin;
}

double expected_extremum(BoundTarget target) {
    switch (target) {
        case BoundTarget::kCcMax:
            return 1.0 / 27;
        case BoundTarget::kCcMin:
            return -1;
        case BoundTarget::kDcMax:
            return 1;
        case BoundTarget::kDcMin:
            return -1.0 / 27;
    }
    return 0;
}

BoundReport grid_extremum(const Tetrahedron &t, Direction d, double step) {
    if (!(step > 0 && step <= 0.1)) {
        throw std::invalid_argument("grid_extremum: step must be in (0, 0.1]");
    }
    CauseKind kind;
    if (t == tcc()) {
        kind = CauseKind::kCommonCause;
    } else if (t == tdc()) {
        kind = CauseKind::kDirectCause;
    } else {
        throw std::invalid_argument("grid_extremum: tetrahedron must be tcc() or tdc()");
    }
    const int n = static_cast<int>(std::ceil(1 / step - 1e-9));
    const double h = 1.0 / n;
    const double sign = objective_sign(d);

    double best = std::numeric_limits<double>::infinity();
    BaryWeights best_w;
    for (int i = 0; i <= n; i++) {
        for (int j = 0; i + j <= n; j++) {
            for (int k = 0; i + j + k <= n; k++) {
                const int l = n - i - j - k;
                BaryWeights w{{i * h, j * h, k * h, l * h}};
                const double f = sign * c_from_weights(t, w);
                if (f < best) {
                    best = f;
                    best_w = w;
                }
            }
        }
    }

    BoundReport r;
    r.target = bound_target(kind, d);
    r.value = sign * best;
    r.witness = best_w;
    r.method = "grid";
    r.grid_step = h;
    r.grid_error_bound = kTrilinearLipschitz * h;
    attach_witness(r);
    return r;
}

BoundReport polish_extremum(const BoundReport &report, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("polish_extremum: tol must be > 0");
    }
    const Tetrahedron t = cause_kind(report.target) == CauseKind::kCommonCause ? tcc() : tdc();
    const double sign = objective_sign(direction(report.target));

    BaryWeights w = report.witness;
    double f = sign * c_from_weights(t, w);
    double h = std::max(report.grid_step, 16 * tol);
    int moves = 0;
    int sweeps = 0;
    while (h >= tol && sweeps < kMaxPolishSweeps) {
        sweeps++;
        bool improved = false;
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                if (i == j || w.w[j] <= 0) {
                    continue;
                }
                const double amount = std::min(h, w.w[j]);
                BaryWeights trial = w;
                trial.w[i] += amount;
                trial.w[j] -= amount;
                const double ft = sign * c_from_weights(t, trial);
                if (ft < f) {
                    w = trial;
                    f = ft;
                    improved = true;
                    moves++;
                }
            }
        }
        if (!improved) {
            h /= 2;
        }
    }

    BoundReport r = report;
    r.method = report.method + "+polish";
    r.witness = w;
    r.value = sign * f;
    r.iterations = moves;
    r.converged = h < tol;
    attach_witness(r);
    return r;
}

BoundReport multistart_state_extremum(Direction d, int starts, const SamplerConfig &cfg) {
    if (starts < 1) {
        throw std::invalid_argument("multistart_state_extremum: starts must be >= 1");
    }
    Sampler sampler(cfg);
    const double sign = objective_sign(d);
    auto objective = [sign](std::span<const double> x) { return sign * statistic_c(cc_pvector(state_from_angles(x))); };

    NelderMeadResult best;
    best.f = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool all_converged = true;
    for (int s = 0; s < starts; s++) {
        std::vector<double> x0{std::numbers::pi * sampler.rng().uniform(), std::numbers::pi * sampler.rng().uniform(),
                               2 * std::numbers::pi * sampler.rng().uniform()};
        NelderMeadResult res = nelder_mead(objective, x0);
        iterations += res.iterations;
        all_converged = all_converged && res.converged;
        if (res.f < best.f) {
            best = res;
        }
    }

    BoundReport r;
    r.target = bound_target(CauseKind::kCommonCause, d);
    r.method = "multistart";
    r.starts = starts;
    r.iterations = iterations;
    r.converged = all_converged;
    const Vec4 phi = state_from_angles(best.x);
    r.witness_object = phi;
    r.witness_point = cc_pvector(phi);
    r.value = statistic_c(r.witness_point);
    r.witness = barycentric(tcc(), r.witness_point);
    return r;
}

BoundReport multistart_unitary_extremum(Direction d, int starts, const SamplerConfig &cfg) {
    if (starts < 1) {
        throw std::invalid_argument("multistart_unitary_extremum: starts must be >= 1");
    }
    Sampler sampler(cfg);
    const double sign = objective_sign(d);
    auto objective = [sign](std::span<const double> x) { return sign * statistic_c(dc_pvector(unitary_from_angles(x))); };

    NelderMeadResult best;
    best.f = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool all_converged = true;
    for (int s = 0; s < starts; s++) {
        std::vector<double> x0{std::numbers::pi * sampler.rng().uniform(), std::numbers::pi * sampler.rng().uniform(),
                               2 * std::numbers::pi * sampler.rng().uniform(),
                               2 * std::numbers::pi * sampler.rng().uniform()};
        NelderMeadResult res = nelder_mead(objective, x0);
        iterations += res.iterations;
        all_converged = all_converged && res.converged;
        if (res.f < best.f) {
            best = res;
        }
    }

    BoundReport r;
    r.target = bound_target(CauseKind::kDirectCause, d);
    r.method = "multistart";
    r.starts = starts;
    r.iterations = iterations;
    r.converged = all_converged;
    const UnitaryGate u = unitary_from_angles(best.x);
    r.witness_object = u;
    r.witness_point = dc_pvector(u);
    r.value = statistic_c(r.witness_point);
    r.witness = barycentric(tdc(), r.witness_point);
    return r;
}

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)> &f, std::vector<double> x0,
                             const NelderMeadOptions &options) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t k = 0; k < n; k++) {
        simplex[k + 1][k] += options.initial_step;
    }
    std::vector<double> fv(n + 1);
    for (std::size_t k = 0; k <= n; k++) {
        fv[k] = f(simplex[k]);
    }

    std::vector<std::size_t> order(n + 1);
    NelderMeadResult out;
    int iter = 0;
    for (; iter < options.max_iterations; iter++) {
        for (std::size_t k = 0; k <= n; k++) {
            order[k] = k;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order[0];
        const std::size_t worst = order[n];
        const std::size_t second = order[n - 1];

        double diameter = 0;
        for (std::size_t k = 0; k <= n; k++) {
            for (std::size_t c = 0; c < n; c++) {
                diameter = std::max(diameter, std::abs(simplex[k][c] - simplex[best][c]));
            }
        }
        if (fv[worst] - fv[best] <= options.f_tol && diameter <= options.x_tol) {
            out.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k <= n; k++) {
            if (k == worst) {
                continue;
            }
            for (std::size_t c = 0; c < n; c++) {
                centroid[c] += simplex[k][c] / static_cast<double>(n);
            }
        }
        auto along = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t c = 0; c < n; c++) {
                p[c] = centroid[c] + t * (simplex[worst][c] - centroid[c]);
            }
            return p;
        };

        std::vector<double> reflected = along(-1.0);
        const double fr = f(reflected);
        if (fr < fv[best]) {
            std::vector<double> expanded = along(-2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                fv[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[second]) {
            simplex[worst] = std::move(reflected);
            fv[worst] = fr;
            continue;
        }
        const bool outside = fr < fv[worst];
        std::vector<double> contracted = along(outside ? -0.5 : 0.5);
        const double fc = f(contracted);
        if (fc < (outside ? fr : fv[worst])) {
            simplex[worst] = std::move(contracted);
            fv[worst] = fc;
            continue;
        }
        for (std::size_t k = 0; k <= n; k++) {
            if (k == best) {
                continue;
            }
            for (std::size_t c = 0; c < n; c++) {
                simplex[k][c] = simplex[best][c] + 0.5 * (simplex[k][c] - simplex[best][c]);
            }
            fv[k] = f(simplex[k]);
        }
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k <= n; k++) {
        if (fv[k] < fv[best]) {
            best = k;
        }
    }
    out.x = simplex[best];
    out.f = fv[best];
    out.iterations = iter;
    return out;
}

}  // namespace qcause
