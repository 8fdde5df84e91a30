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

#include "qcause/qmath.h"

#include <sstream>
#include <stdexcept>

namespace qcause {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_tol(double tol, const char *who) {
    if (!(tol > 0)) {
        throw std::invalid_argument(std::string(who) + ": tol must be > 0");
    }
}

}  // namespace

Mat4 tensor_product(const Mat2 &a, const Mat2 &b) {
    Mat4 r;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            for (std::size_t k = 0; k < 2; k++) {
                for (std::size_t l = 0; l < 2; l++) {
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return r;
}

Vec4 tensor_product(const Vec2 &a, const Vec2 &b) {
    Vec4 r;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t k = 0; k < 2; k++) {
            r[2 * i + k] = a[i] * b[k];
        }
    }
    return r;
}

Complex determinant(const Mat2 &m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <std::size_t N>
bool is_unitary(const Matrix<N> &m, double tol) {
    check_tol(tol, "is_unitary");
    if (!is_finite(m)) {
        return false;
    }
    return max_abs_diff(m * dagger(m), Matrix<N>::identity()) <= tol;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N> &m, double tol) {
    check_tol(tol, "is_hermitian");
    if (!is_finite(m)) {
        return false;
    }
    return max_abs_diff(m, dagger(m)) <= tol;
}

template bool is_unitary<2>(const Mat2 &, double);
template bool is_unitary<4>(const Mat4 &, double);
template bool is_hermitian<2>(const Mat2 &, double);
template bool is_hermitian<4>(const Mat4 &, double);

std::array<double, 4> hermitian_eigenvalues(const Mat4 &m) {
    // H = A + iB maps to the real symmetric [[A, -B], [B, A]], whose spectrum
    // is the spectrum of H with every eigenvalue doubled.
    constexpr int n = 8;
    double s[n][n];
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
            s[i][j] = h.real();
            s[i + 4][j + 4] = h.real();
            s[i][j + 4] = -h.imag();
            s[i + 4][j] = h.imag();
        }
    }

    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0;
        double total = 0;
        for (int p = 0; p < n; p++) {
            for (int q = 0; q < n; q++) {
                total += s[p][q] * s[p][q];
                if (p != q) {
                    off += s[p][q] * s[p][q];
                }
            }
        }
        if (off <= 1e-30 * total || off == 0) {
            break;
        }
        for (int p = 0; p < n - 1; p++) {
            for (int q = p + 1; q < n; q++) {
                if (s[p][q] == 0) {
                    continue;
                }
                double theta = (s[q][q] - s[p][p]) / (2 * s[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double sn = t * c;
                for (int k = 0; k < n; k++) {
                    double skp = s[k][p];
                    double skq = s[k][q];
                    s[k][p] = c * skp - sn * skq;
                    s[k][q] = sn * skp + c * skq;
                }
                for (int k = 0; k < n; k++) {
                    double spk = s[p][k];
                    double sqk = s[q][k];
                    s[p][k] = c * spk - sn * sqk;
                    s[q][k] = sn * spk + c * sqk;
                }
            }
        }
    }

    std::array<double, n> diag;
    for (int k = 0; k < n; k++) {
        diag[k] = s[k][k];
    }
    std::sort(diag.begin(), diag.end());
    std::array<double, 4> out;
    for (int k = 0; k < 4; k++) {
        out[k] = 0.5 * (diag[2 * k] + diag[2 * k + 1]);
    }
    return out;
}

std::string density_failure(const Mat4 &m, double tol) {
    check_tol(tol, "is_density");
    if (!is_finite(m)) {
        return "non-finite entry";
    }
    if (!is_hermitian(m, tol)) {
        return "not Hermitian";
    }
    Complex t = trace(m);
    if (std::abs(t - 1.0) > tol) {
        std::ostringstream out;
        out << "trace " << t.real() << " != 1";
        return out.str();
    }
    auto ev = hermitian_eigenvalues(m);
    if (ev[0] < -tol) {
        std::ostringstream out;
        out << "negative eigenvalue " << ev[0];
        return out.str();
    }
    return "";
}

bool is_density(const Mat4 &m, double tol) {
    return density_failure(m, tol).empty();
}

Mat2 pauli(int i) {
    Mat2 m;
    switch (i) {
        case 0:
            m(0, 0) = 1;
            m(1, 1) = 1;
            break;
        case 1:
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case 2:
            m(0, 1) = Complex(0, -1);
            m(1, 0) = Complex(0, 1);
            break;
        case 3:
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
        default:
            throw std::invalid_argument("pauli: index must be in 0..3, got " + std::to_string(i));
    }
    return m;
}

Vec4 bell(int j) {
    Vec4 v;
    switch (j) {
        case 1:
            v[0] = kInvSqrt2;
            v[3] = kInvSqrt2;
            break;
        case 2:
            v[0] = kInvSqrt2;
            v[3] = -kInvSqrt2;
            break;
        case 3:
            v[1] = kInvSqrt2;
            v[2] = kInvSqrt2;
            break;
        case 4:
            v[1] = kInvSqrt2;
            v[2] = -kInvSqrt2;
            break;
        default:
            throw std::invalid_argument("bell: index must be in 1..4, got " + std::to_string(j));
    }
    return v;
}

std::pair<Vec2, Vec2> pauli_eigenbasis(int i) {
    Vec2 m0;
    Vec2 m1;
    switch (i) {
        case 1:
            m0 = Vec2{{kInvSqrt2, kInvSqrt2}};
            m1 = Vec2{{kInvSqrt2, -kInvSqrt2}};
            break;
        case 2:
            m0 = Vec2{{kInvSqrt2, Complex(0, kInvSqrt2)}};
            m1 = Vec2{{kInvSqrt2, Complex(0, -kInvSqrt2)}};
            break;
        case 3:
            m0 = Vec2{{1.0, 0.0}};
            m1 = Vec2{{0.0, 1.0}};
            break;
        default:
            throw std::invalid_argument("pauli_eigenbasis: index must be in 1..3, got " + std::to_string(i));
    }
    return {m0, m1};
}

Mat2 hadamard() {
    Mat2 h;
    h(0, 0) = kInvSqrt2;
    h(0, 1) = kInvSqrt2;
    h(1, 0) = kInvSqrt2;
    h(1, 1) = -kInvSqrt2;
    return h;
}

Mat2 inverse(const Mat2 &m) {
    Complex det = determinant(m);
    if (std::abs(det) < 1e-300) {
        throw std::invalid_argument("inverse: singular 2x2 matrix");
    }
    Mat2 r;
    r(0, 0) = m(1, 1) / det;
    r(0, 1) = -m(0, 1) / det;
    r(1, 0) = -m(1, 0) / det;
    r(1, 1) = m(0, 0) / det;
    return r;
}

Mat2 nearest_unitary(const Mat2 &m) {
    if (!is_finite(m) || std::abs(determinant(m)) < 1e-12) {
        throw std::invalid_argument("nearest_unitary: matrix is singular or non-finite");
    }
    Mat2 x = m;
    for (int iter = 0; iter < 100; iter++) {
        Mat2 next = Complex(0.5) * (x + dagger(inverse(x)));
        double delta = max_abs_diff(next, x);
        x = next;
        if (delta < 1e-15) {
            break;
        }
    }
    return x;
}

}  // namespace qcause
