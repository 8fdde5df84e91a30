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

#ifndef QCAUSE_QMATH_H_
#define QCAUSE_QMATH_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>

/// Dense complex linear algebra for one and two qubits.
///
/// Two-qubit objects use the basis order |00>, |01>, |10>, |11>, i.e. the
/// first tensor factor is the outer (slow) index. Every routine in the
/// library relies on this order.
namespace qcause {

using Complex = std::complex<double>;

template <std::size_t N>
struct Vector {
    std::array<Complex, N> amp{};

    static constexpr std::size_t dim() {
        return N;
    }
    Complex &operator[](std::size_t k) {
        return amp[k];
    }
    const Complex &operator[](std::size_t k) const {
        return amp[k];
    }
    bool operator==(const Vector &) const = default;
};

/// Square matrix, row-major.
template <std::size_t N>
struct Matrix {
    std::array<Complex, N * N> e{};

    static constexpr std::size_t dim() {
        return N;
    }
    static Matrix identity() {
        Matrix m;
        for (std::size_t k = 0; k < N; k++) {
            m(k, k) = 1.0;
        }
        return m;
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return e[r * N + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return e[r * N + c];
    }
    bool operator==(const Matrix &) const = default;
};

using Vec2 = Vector<2>;
using Vec4 = Vector<4>;
using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <std::size_t N>
Matrix<N> operator*(const Matrix<N> &a, const Matrix<N> &b) {
    Matrix<N> r;
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t k = 0; k < N; k++) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < N; j++) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

template <std::size_t N>
Vector<N> operator*(const Matrix<N> &a, const Vector<N> &v) {
    Vector<N> r;
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t k = 0; k < N; k++) {
            r[i] += a(i, k) * v[k];
        }
    }
    return r;
}

template <std::size_t N>
Matrix<N> operator*(Complex s, Matrix<N> m) {
    for (auto &x : m.e) {
        x *= s;
    }
    return m;
}

template <std::size_t N>
Vector<N> operator*(Complex s, Vector<N> v) {
    for (auto &x : v.amp) {
        x *= s;
    }
    return v;
}

template <std::size_t N>
Matrix<N> operator+(Matrix<N> a, const Matrix<N> &b) {
    for (std::size_t k = 0; k < N * N; k++) {
        a.e[k] += b.e[k];
    }
    return a;
}

template <std::size_t N>
Matrix<N> operator-(Matrix<N> a, const Matrix<N> &b) {
    for (std::size_t k = 0; k < N * N; k++) {
        a.e[k] -= b.e[k];
    }
    return a;
}

template <std::size_t N>
Vector<N> operator+(Vector<N> a, const Vector<N> &b) {
    for (std::size_t k = 0; k < N; k++) {
        a[k] += b[k];
    }
    return a;
}

template <std::size_t N>
Vector<N> operator-(Vector<N> a, const Vector<N> &b) {
    for (std::size_t k = 0; k < N; k++) {
        a[k] -= b[k];
    }
    return a;
}

/// Conjugate transpose.
template <std::size_t N>
Matrix<N> dagger(const Matrix<N> &m) {
    Matrix<N> r;
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t j = 0; j < N; j++) {
            r(i, j) = std::conj(m(j, i));
        }
    }
    return r;
}

template <std::size_t N>
Complex trace(const Matrix<N> &m) {
    Complex t = 0;
    for (std::size_t k = 0; k < N; k++) {
        t += m(k, k);
    }
    return t;
}

/// <a|b>, antilinear in the first argument.
template <std::size_t N>
Complex inner(const Vector<N> &a, const Vector<N> &b) {
    Complex s = 0;
    for (std::size_t k = 0; k < N; k++) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

template <std::size_t N>
double norm(const Vector<N> &v) {
    return std::sqrt(std::real(inner(v, v)));
}

template <std::size_t N>
Vector<N> normalized(const Vector<N> &v) {
    return Complex(1.0 / norm(v)) * v;
}

/// |v><v|
template <std::size_t N>
Matrix<N> outer(const Vector<N> &v) {
    Matrix<N> r;
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t j = 0; j < N; j++) {
            r(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return r;
}

/// <v|M|v>
template <std::size_t N>
Complex expectation(const Matrix<N> &m, const Vector<N> &v) {
    return inner(v, m * v);
}

template <std::size_t N>
double max_abs_diff(const Matrix<N> &a, const Matrix<N> &b) {
    double r = 0;
    for (std::size_t k = 0; k < N * N; k++) {
        r = std::max(r, std::abs(a.e[k] - b.e[k]));
    }
    return r;
}

template <std::size_t N>
double max_abs_diff(const Vector<N> &a, const Vector<N> &b) {
    double r = 0;
    for (std::size_t k = 0; k < N; k++) {
        r = std::max(r, std::abs(a[k] - b[k]));
    }
    return r;
}

template <std::size_t N>
bool is_finite(const Matrix<N> &m) {
    for (const auto &x : m.e) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            return false;
        }
    }
    return true;
}

/// Kronecker product; the first factor indexes the outer block.
Mat4 tensor_product(const Mat2 &a, const Mat2 &b);
Vec4 tensor_product(const Vec2 &a, const Vec2 &b);

Complex determinant(const Mat2 &m);

/// true iff max|M M^dagger - I| <= tol. Throws std::invalid_argument if tol <= 0.
template <std::size_t N>
bool is_unitary(const Matrix<N> &m, double tol);

template <std::size_t N>
bool is_hermitian(const Matrix<N> &m, double tol);

/// Eigenvalues of a Hermitian 4x4 matrix in ascending order (cyclic Jacobi
/// on the real 8x8 embedding). Only the Hermitian part of the input is used.
std::array<double, 4> hermitian_eigenvalues(const Mat4 &m);

/// Hermitian within tol, trace within tol of 1, all eigenvalues >= -tol.
bool is_density(const Mat4 &m, double tol);

/// Why is_density rejected m; empty when it is a valid density operator.
std::string density_failure(const Mat4 &m, double tol);

/// sigma_0 .. sigma_3 = I, X, Y, Z.
Mat2 pauli(int i);

/// |b1> = (|00>+|11>)/sqrt2, |b2> = (|00>-|11>)/sqrt2,
/// |b3> = (|01>+|10>)/sqrt2, |b4> = (|01>-|10>)/sqrt2.
Vec4 bell(int j);

/// (|m0>, |m1>) with sigma_i|m0> = +|m0> and sigma_i|m1> = -|m1>, i in 1..3.
/// The first nonzero amplitude of each vector is real and positive.
std::pair<Vec2, Vec2> pauli_eigenbasis(int i);

Mat2 hadamard();

/// Closest unitary in Frobenius norm (the unitary factor of the polar
/// decomposition), computed by the Newton iteration X <- (X + X^-dagger)/2.
/// Throws std::invalid_argument for singular input.
Mat2 nearest_unitary(const Mat2 &m);

Mat2 inverse(const Mat2 &m);

}  // namespace qcause

#endif  // QCAUSE_QMATH_H_
