/*
   Copyright 2026 The polhist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef POLHIST_LINALG_HPP
#define POLHIST_LINALG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

// Small fixed-size dense linear algebra: 3-vectors, 3x3/4x4 real matrices,
// 2x2 complex matrices, a cyclic-Jacobi symmetric eigensolver and a
// Gauss-Jordan inverse. Everything is deterministic; no external solver.

namespace polhist {

using complexd = std::complex<double>;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double norm_sq() const { return x * x + y * y + z * z; }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// 3x3 real matrix, row-major.
struct Mat3 {
    std::array<double, 9> a{};

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }

    static Mat3 identity();
    Mat3 transposed() const;
    double det() const;
};

Mat3 operator*(const Mat3& lhs, const Mat3& rhs);
Vec3 operator*(const Mat3& m, const Vec3& v);
Mat3 operator+(const Mat3& lhs, const Mat3& rhs);
Mat3 operator*(double s, const Mat3& m);
double frobenius_norm(const Mat3& m);

/// 4x4 real matrix, row-major.
struct Mat4 {
    std::array<double, 16> a{};

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(4 * r + c)]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(4 * r + c)]; }

    static Mat4 identity();
};

Mat4 operator*(const Mat4& lhs, const Mat4& rhs);
Mat4 operator-(const Mat4& lhs, const Mat4& rhs);
double frobenius_norm(const Mat4& m);

/// Gauss-Jordan inverse with partial pivoting. Returns false when the
/// pivot magnitude drops below 1e-14 (matrix singular for our purposes).
bool invert4(const Mat4& m, Mat4& out);

/// 2x2 complex matrix, row-major.
struct Mat2c {
    std::array<complexd, 4> a{};

    complexd& operator()(int r, int c) { return a[static_cast<std::size_t>(2 * r + c)]; }
    complexd operator()(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }

    static Mat2c identity();
    Mat2c adjoint() const;
    complexd trace() const { return a[0] + a[3]; }
    complexd det() const { return a[0] * a[3] - a[1] * a[2]; }
};

Mat2c operator*(const Mat2c& lhs, const Mat2c& rhs);
Mat2c operator*(complexd s, const Mat2c& m);
Mat2c operator+(const Mat2c& lhs, const Mat2c& rhs);
Mat2c operator-(const Mat2c& lhs, const Mat2c& rhs);
double frobenius_norm(const Mat2c& m);

/// Pauli matrices in the {|H>, |V>} basis; index 0 is the identity.
const Mat2c& pauli(int mu);

/// Eigen-decomposition of a real symmetric n x n matrix (n <= 8) by cyclic
/// Jacobi sweeps. `a` is row-major and left untouched. Eigenvalues are
/// written descending; `vectors`, when non-null, receives the matching
/// eigenvectors as columns (row-major n x n). Deterministic sweep order.
void jacobi_eigh(int n, const double* a, double* values, double* vectors);

/// Deterministic pairwise (cascade) summation; the result depends only on
/// the buffer contents, never on threading.
double pairwise_sum(std::span<const double> values);

}  // namespace polhist

#endif  // POLHIST_LINALG_HPP
