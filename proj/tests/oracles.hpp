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
#ifndef POLHIST_TESTS_ORACLES_HPP
#define POLHIST_TESTS_ORACLES_HPP

// Test-only reference implementations, kept independent of the library
// code paths they are used to check.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "polhist/history.hpp"
#include "polhist/linalg.hpp"

namespace oracles {

using polhist::complexd;
using polhist::Mat2c;
using polhist::Mat3;
using polhist::Mat4;
using polhist::Vec3;

/// Pauli matrix attached to Stokes index mu (0 -> I, 1 -> sigma_z,
/// 2 -> sigma_x, 3 -> sigma_y), written out literally.
inline Mat2c stokes_sigma(int mu) {
    Mat2c m;
    switch (mu) {
        case 0:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case 1:  // sigma_z
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        case 2:  // sigma_x
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        default:  // sigma_y
            m(0, 1) = complexd(0.0, -1.0);
            m(1, 0) = complexd(0.0, 1.0);
            break;
    }
    return m;
}

/// Standard Jones -> Mueller map in the library's Stokes convention:
/// M_{mu nu} = Tr(sigma_mu J sigma_nu J^dag) / 2.
inline Mat4 jones_to_mueller(const Mat2c& jones) {
    Mat4 m;
    const Mat2c jdag = jones.adjoint();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            m(mu, nu) =
                0.5 * (stokes_sigma(mu) * (jones * (stokes_sigma(nu) * jdag))).trace().real();
    return m;
}

/// Rodrigues rotation matrix: angle about a unit axis, right-handed.
inline Mat3 rodrigues(const Vec3& axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double k[3] = {axis.x, axis.y, axis.z};
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = c * (i == j ? 1.0 : 0.0) + (1.0 - c) * k[i] * k[j];
    r(0, 1) -= s * k[2];
    r(0, 2) += s * k[1];
    r(1, 0) += s * k[2];
    r(1, 2) -= s * k[0];
    r(2, 0) -= s * k[1];
    r(2, 1) += s * k[0];
    return r;
}

/// Retarder-form Mueller matrix from a 3x3 Stokes rotation block.
inline Mat4 retarder_mueller(const Mat3& block) {
    Mat4 m;
    m(0, 0) = 1.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r + 1, c + 1) = block(r, c);
    return m;
}

/// Eigenvalues (descending) of a 2x2 Hermitian matrix, quadratic formula.
inline std::array<double, 2> eig2(const Mat2c& h) {
    const double tr = h.trace().real();
    const double det = (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real();
    const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
    return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

/// Reduced system state of a history via the full 2N x 2N projector:
/// rho_S[i][j] = sum_t Psi[2t+i] conj(Psi[2t+j]) over the first n slots
/// of the renormalized partial history.
inline Mat2c reduced_by_partial_trace(const polhist::HistoryState& h, int n) {
    Mat2c rho;
    const double w = 1.0 / n;
    for (int t = 0; t < n; ++t) {
        const auto& s = h.slot(t);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                rho(i, j) += w * s[static_cast<std::size_t>(i)] *
                             std::conj(s[static_cast<std::size_t>(j)]);
    }
    return rho;
}

/// Von Neumann entropy in bits from 2x2 Hermitian eigenvalues.
inline double entropy_bits(const Mat2c& rho) {
    const auto ev = eig2(rho);
    double e = 0.0;
    for (double v : ev)
        if (v > 1e-15) e -= v * std::log2(v);
    return e;
}

/// Plain arithmetic mean of per-step Pauli means (column average).
inline double column_mean(const std::vector<double>& values) {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

}  // namespace oracles

#endif  // POLHIST_TESTS_ORACLES_HPP
