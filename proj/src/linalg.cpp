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
#include "polhist/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>

namespace polhist {

Mat3 Mat3::identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
}

Mat3 Mat3::transposed() const {
    Mat3 t;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
}

double Mat3::det() const {
    const Mat3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 operator*(const Mat3& lhs, const Mat3& rhs) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += lhs(r, k) * rhs(k, c);
            out(r, c) = s;
        }
    return out;
}

Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
            m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
            m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

Mat3 operator+(const Mat3& lhs, const Mat3& rhs) {
    Mat3 out;
    for (std::size_t i = 0; i < 9; ++i) out.a[i] = lhs.a[i] + rhs.a[i];
    return out;
}

Mat3 operator*(double s, const Mat3& m) {
    Mat3 out;
    for (std::size_t i = 0; i < 9; ++i) out.a[i] = s * m.a[i];
    return out;
}

double frobenius_norm(const Mat3& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

Mat4 Mat4::identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Mat4 operator*(const Mat4& lhs, const Mat4& rhs) {
    Mat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += lhs(r, k) * rhs(k, c);
            out(r, c) = s;
        }
    return out;
}

Mat4 operator-(const Mat4& lhs, const Mat4& rhs) {
    Mat4 out;
    for (std::size_t i = 0; i < 16; ++i) out.a[i] = lhs.a[i] - rhs.a[i];
    return out;
}

double frobenius_norm(const Mat4& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

bool invert4(const Mat4& m, Mat4& out) {
    // Gauss-Jordan with partial pivoting on an augmented 4x8 system.
    double w[4][8];
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            w[r][c] = m(r, c);
            w[r][c + 4] = (r == c) ? 1.0 : 0.0;
        }
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(w[r][col]) > std::abs(w[pivot][col])) pivot = r;
        if (std::abs(w[pivot][col]) < 1e-14) return false;
        if (pivot != col)
            for (int c = 0; c < 8; ++c) std::swap(w[pivot][c], w[col][c]);
        const double inv = 1.0 / w[col][col];
        for (int c = 0; c < 8; ++c) w[col][c] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = w[r][col];
            if (f == 0.0) continue;
            for (int c = 0; c < 8; ++c) w[r][c] -= f * w[col][c];
        }
    }
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = w[r][c + 4];
    return true;
}

Mat2c Mat2c::identity() {
    Mat2c m;
    m(0, 0) = m(1, 1) = 1.0;
    return m;
}

Mat2c Mat2c::adjoint() const {
    Mat2c t;
    t(0, 0) = std::conj((*this)(0, 0));
    t(0, 1) = std::conj((*this)(1, 0));
    t(1, 0) = std::conj((*this)(0, 1));
    t(1, 1) = std::conj((*this)(1, 1));
    return t;
}

Mat2c operator*(const Mat2c& lhs, const Mat2c& rhs) {
    Mat2c out;
    out(0, 0) = lhs(0, 0) * rhs(0, 0) + lhs(0, 1) * rhs(1, 0);
    out(0, 1) = lhs(0, 0) * rhs(0, 1) + lhs(0, 1) * rhs(1, 1);
    out(1, 0) = lhs(1, 0) * rhs(0, 0) + lhs(1, 1) * rhs(1, 0);
    out(1, 1) = lhs(1, 0) * rhs(0, 1) + lhs(1, 1) * rhs(1, 1);
    return out;
}

Mat2c operator*(complexd s, const Mat2c& m) {
    Mat2c out;
    for (std::size_t i = 0; i < 4; ++i) out.a[i] = s * m.a[i];
    return out;
}

Mat2c operator+(const Mat2c& lhs, const Mat2c& rhs) {
    Mat2c out;
    for (std::size_t i = 0; i < 4; ++i) out.a[i] = lhs.a[i] + rhs.a[i];
    return out;
}

Mat2c operator-(const Mat2c& lhs, const Mat2c& rhs) {
    Mat2c out;
    for (std::size_t i = 0; i < 4; ++i) out.a[i] = lhs.a[i] - rhs.a[i];
    return out;
}

double frobenius_norm(const Mat2c& m) {
    double s = 0.0;
    for (const complexd& v : m.a) s += std::norm(v);
    return std::sqrt(s);
}

const Mat2c& pauli(int mu) {
    static const std::array<Mat2c, 4> sigma = [] {
        std::array<Mat2c, 4> s;
        s[0] = Mat2c::identity();
        s[1](0, 1) = 1.0;  // sigma_x
        s[1](1, 0) = 1.0;
        s[2](0, 1) = complexd(0.0, -1.0);  // sigma_y
        s[2](1, 0) = complexd(0.0, 1.0);
        s[3](0, 0) = 1.0;  // sigma_z
        s[3](1, 1) = -1.0;
        return s;
    }();
    assert(mu >= 0 && mu < 4);
    return sigma[static_cast<std::size_t>(mu)];
}

namespace {

constexpr int kMaxJacobiDim = 8;

double off_diagonal_sq(int n, const double (*a)[kMaxJacobiDim]) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += a[p][q] * a[p][q];
    return 2.0 * s;
}

}  // namespace

void jacobi_eigh(int n, const double* in, double* values, double* vectors) {
    assert(n >= 1 && n <= kMaxJacobiDim);
    double a[kMaxJacobiDim][kMaxJacobiDim];
    double v[kMaxJacobiDim][kMaxJacobiDim];
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            a[r][c] = in[r * n + c];
            v[r][c] = (r == c) ? 1.0 : 0.0;
        }

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_sq(n, a) < 1e-30) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                // Smaller-angle root keeps the iteration stable.
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[k][p];
                    const double vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    int order[kMaxJacobiDim];
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order, order + n,
                     [&](int lhs, int rhs) { return a[lhs][lhs] > a[rhs][rhs]; });
    for (int i = 0; i < n; ++i) values[i] = a[order[i]][order[i]];
    if (vectors != nullptr)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) vectors[r * n + c] = v[r][order[c]];
}

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace polhist
