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


#include "qcause/geometry.h"

#include <cmath>
#include <stdexcept>

namespace qcause {

namespace {

constexpr double kWeightTol = 1e-12;
constexpr double kBaryContainTol = 1e-9;

double dot(const PPoint &a, const PPoint &b) {
    return a.c11 * b.c11 + a.c22 * b.c22 + a.c33 * b.c33;
}

PPoint cross(const PPoint &a, const PPoint &b) {
    return {a.c22 * b.c33 - a.c33 * b.c22, a.c33 * b.c11 - a.c11 * b.c33, a.c11 * b.c22 - a.c22 * b.c11};
}

double det3(const PPoint &a, const PPoint &b, const PPoint &c) {
    return dot(a, cross(b, c));
}

// Returns the weight sum.
double check_weights(const BaryWeights &w, const char *who) {
    double sum = 0;
    for (double x : w.w) {
        if (!(x >= -kWeightTol)) {
            throw std::invalid_argument(std::string(who) + ": negative weight");
        }
        sum += x;
    }
    if (std::abs(sum - 1) > 1e-10) {
        throw std::invalid_argument(std::string(who) + ": weights do not sum to 1");
    }
    return sum;
}

double safe_sqrt(double x) {
    return std::sqrt(std::max(0.0, x));
}

}  // namespace

Tetrahedron::Tetrahedron(const std::array<PPoint, 4> &vertices) : vertices_(vertices) {
    if (volume() < 1e-12) {
        throw std::invalid_argument("Tetrahedron: degenerate vertices");
    }
    for (int k = 0; k < 4; k++) {
        const PPoint &a = vertices_[(k + 1) % 4];
        const PPoint &b = vertices_[(k + 2) % 4];
        const PPoint &c = vertices_[(k + 3) % 4];
        PPoint n = cross(b - a, c - a);
        double offset = dot(n, a);
        double gap = offset - dot(n, vertices_[k]);
        // Orient outward and normalize the opposite-vertex gap to 4.
        double scale = 4 / gap;
        faces_[k] = HalfSpace{scale * n, scale * offset};
    }
}

double Tetrahedron::volume() const {
    return std::abs(det3(vertices_[1] - vertices_[0], vertices_[2] - vertices_[0], vertices_[3] - vertices_[0])) / 6;
}

PPoint Tetrahedron::centroid() const {
    return 0.25 * (vertices_[0] + vertices_[1] + vertices_[2] + vertices_[3]);
}

std::string_view to_string(RegionLabel label) {
    switch (label) {
        case RegionLabel::kCcOnly:
            return "CC_ONLY";
        case RegionLabel::kDcOnly:
            return "DC_ONLY";
        case RegionLabel::kAmbiguous:
            return "AMBIGUOUS";
        case RegionLabel::kMixtureRequired:
            return "MIXTURE_REQUIRED";
    }
    return "?";
}

Tetrahedron tcc() {
    return Tetrahedron({PPoint{1, -1, 1}, PPoint{-1, 1, 1}, PPoint{1, 1, -1}, PPoint{-1, -1, -1}});
}

Tetrahedron tdc() {
    return Tetrahedron({PPoint{1, 1, 1}, PPoint{1, -1, -1}, PPoint{-1, 1, -1}, PPoint{-1, -1, 1}});
}

Tetrahedron otc_dugout() {
    return Tetrahedron({PPoint{1, 1, -1}, PPoint{1, 0, 0}, PPoint{0, 1, 0}, PPoint{0, 0, -1}});
}

Tetrahedron otd_dugout() {
    return Tetrahedron({PPoint{-1, -1, 1}, PPoint{-1, 0, 0}, PPoint{0, -1, 0}, PPoint{0, 0, 1}});
}

bool contains(const Tetrahedron &t, const PPoint &p, double tol) {
    if (tol < 0) {
        throw std::invalid_argument("contains: tol must be >= 0");
    }
    for (const HalfSpace &h : t.faces()) {
        if (dot(h.normal, p) > h.offset + tol) {
            return false;
        }
    }
    return true;
}

bool in_overlap(const PPoint &p, double tol) {
    return std::abs(p.c11) + std::abs(p.c22) + std::abs(p.c33) <= 1 + tol;
}

bool in_otc(const PPoint &p, double tol) {
    return contains(tcc(), p, tol) && !(p.c11 + p.c22 - p.c33 > 1 + tol);
}

bool in_otd(const PPoint &p, double tol) {
    return contains(tdc(), p, tol) && !(-p.c11 - p.c22 + p.c33 > 1 + tol);
}

bool in_cube(const PPoint &p, double tol) {
    return std::abs(p.c11) <= 1 + tol && std::abs(p.c22) <= 1 + tol && std::abs(p.c33) <= 1 + tol;
}

RegionLabel classify(const PPoint &p, double tol) {
    if (!in_cube(p, tol)) {
        throw std::invalid_argument("classify: point lies outside the correlation cube");
    }
    if (in_overlap(p, tol)) {
        return RegionLabel::kAmbiguous;
    }
    if (contains(tcc(), p, tol)) {
        return RegionLabel::kCcOnly;
    }
    if (contains(tdc(), p, tol)) {
        return RegionLabel::kDcOnly;
    }
    return RegionLabel::kMixtureRequired;
}

BaryWeights barycentric(const Tetrahedron &t, const PPoint &p) {
    if (!contains(t, p, kBaryContainTol)) {
        throw std::domain_error("barycentric: point lies outside the tetrahedron");
    }
    const double x = p.c11;
    const double y = p.c22;
    const double z = p.c33;
    BaryWeights out;
    if (t == tdc()) {
        out.w = {(x + y + z + 1) / 4, (x - y - z + 1) / 4, (-x + y - z + 1) / 4, (-x - y + z + 1) / 4};
    } else if (t == tcc()) {
        out.w = {(x - y + z + 1) / 4, (-x + y + z + 1) / 4, (x + y - z + 1) / 4, (-x - y - z + 1) / 4};
    } else {
        const auto &v = t.vertices();
        const PPoint e1 = v[1] - v[0];
        const PPoint e2 = v[2] - v[0];
        const PPoint e3 = v[3] - v[0];
        const PPoint r = p - v[0];
        const double d = det3(e1, e2, e3);
        const double l1 = det3(r, e2, e3) / d;
        const double l2 = det3(e1, r, e3) / d;
        const double l3 = det3(e1, e2, r) / d;
        out.w = {1 - l1 - l2 - l3, l1, l2, l3};
    }
    // Points admitted by the containment tolerance may carry tiny negative weights.
    double sum = 0;
    for (double &w : out.w) {
        w = std::max(0.0, w);
        sum += w;
    }
    for (double &w : out.w) {
        w /= sum;
    }
    return out;
}

PPoint from_barycentric(const Tetrahedron &t, const BaryWeights &w) {
    PPoint r;
    for (int k = 0; k < 4; k++) {
        r = r + w.w[k] * t.vertices()[k];
    }
    return r;
}

Vec4 state_from_weights(const BaryWeights &w) {
    const double sum = check_weights(w, "state_from_weights");
    Vec4 phi;
    for (int j = 0; j < 4; j++) {
        phi = phi + Complex(safe_sqrt(w.w[j] / sum)) * bell(j + 1);
    }
    return phi;
}

UnitaryGate unitary_from_probs(const BaryWeights &w) {
    const double sum = check_weights(w, "unitary_from_probs");
    UnitaryParams q;
    q.a1 = safe_sqrt(w.w[0] / sum);
    q.a2 = safe_sqrt(w.w[3] / sum);
    q.b1 = safe_sqrt(w.w[2] / sum);
    q.b2 = safe_sqrt(w.w[1] / sum);
    q.alpha = 0;
    return unitary_from_params(q);
}

}  // namespace qcause
