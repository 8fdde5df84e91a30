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


#ifndef QCAUSE_GEOMETRY_H_
#define QCAUSE_GEOMETRY_H_

#include <array>
#include <string_view>

#include "qcause/correlation.h"

/// Polytopes of the correlation cube.
///
///   T_CC  vertices P(|b1>..|b4>) = (1,-1,1), (-1,1,1), (1,1,-1), (-1,-1,-1);
///         half-spaces s.c <= 1 for sign vectors s with an even number of -1.
///   T_DC  vertices P(sigma_0..sigma_3) = (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1);
///         half-spaces with an odd number of -1.
///   O     T_CC cap T_DC, the octahedron |c11| + |c22| + |c33| <= 1 whose
///         vertices are the six face centers of the cube.
///   OTC   T_CC without the open corner at P(|b3>) cut off by the face centers
///         (1,0,0), (0,1,0), (0,0,-1), i.e. c11 + c22 - c33 > 1 is removed.
///   OTD   T_DC without the open corner at P(Z) cut off by the face centers
///         (-1,0,0), (0,-1,0), (0,0,1), i.e. -c11 - c22 + c33 > 1 is removed.
namespace qcause {

/// n.p <= offset
struct HalfSpace {
    PPoint normal;
    double offset = 0;
};

class Tetrahedron {
   public:
    /// Throws std::invalid_argument if the vertices are (nearly) coplanar.
    explicit Tetrahedron(const std::array<PPoint, 4> &vertices);

    const std::array<PPoint, 4> &vertices() const {
        return vertices_;
    }
    /// Face k is opposite vertex k; scaled so that the opposite vertex sits at
    /// offset - 4 (which yields the +-1 sign vectors for the cube tetrahedra).
    const std::array<HalfSpace, 4> &faces() const {
        return faces_;
    }
    double volume() const;
    PPoint centroid() const;
    bool operator==(const Tetrahedron &other) const {
        return vertices_ == other.vertices_;
    }

   private:
    std::array<PPoint, 4> vertices_;
    std::array<HalfSpace, 4> faces_;
};

struct BaryWeights {
    std::array<double, 4> w{};

    double operator[](int k) const {
        return w[k];
    }
    bool operator==(const BaryWeights &) const = default;
};

enum class RegionLabel { kCcOnly, kDcOnly, kAmbiguous, kMixtureRequired };

std::string_view to_string(RegionLabel label);

Tetrahedron tcc();
Tetrahedron tdc();

/// Corner removed from T_CC to form OTC: P(|b3>), (1,0,0), (0,1,0), (0,0,-1).
Tetrahedron otc_dugout();
/// Corner removed from T_DC to form OTD: P(Z), (-1,0,0), (0,-1,0), (0,0,1).
Tetrahedron otd_dugout();

/// Closed containment: every face inequality holds within tol.
bool contains(const Tetrahedron &t, const PPoint &p, double tol);

bool in_overlap(const PPoint &p, double tol);
bool in_otc(const PPoint &p, double tol);
bool in_otd(const PPoint &p, double tol);
bool in_cube(const PPoint &p, double tol);

/// Throws std::invalid_argument if p lies outside the cube by more than tol.
RegionLabel classify(const PPoint &p, double tol);

/// Weights with sum_j w_j vertex_j = p and sum_j w_j = 1. The two cube
/// tetrahedra use their closed forms, e.g. for T_DC
///   w0 = (c11 + c22 + c33 + 1)/4, w1 = (c11 - c22 - c33 + 1)/4, ...
/// Other tetrahedra solve the 3x3 linear system. Throws std::domain_error if
/// p is outside t by more than 1e-9.
BaryWeights barycentric(const Tetrahedron &t, const PPoint &p);

/// sum_j w_j vertex_j
PPoint from_barycentric(const Tetrahedron &t, const BaryWeights &w);

/// Real state sum_j sqrt(w_j)|b_j>; weights in Bell order.
Vec4 state_from_weights(const BaryWeights &w);

/// U with a1 = sqrt(w0), a2 = sqrt(w3), b1 = sqrt(w2), b2 = sqrt(w1),
/// alpha = 0; weights in Pauli order.
UnitaryGate unitary_from_probs(const BaryWeights &w);

}  // namespace qcause

#endif  // QCAUSE_GEOMETRY_H_
