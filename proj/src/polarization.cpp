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
#include "polhist/polarization.hpp"

#include <cmath>
#include <sstream>

namespace polhist {

StokesVector::StokesVector(double s0, double s1, double s2, double s3)
    : s0_(s0), s1_(s1), s2_(s2), s3_(s3) {
    if (!(s0 > 0.0)) {
        std::ostringstream os;
        os << "Stokes S0 must be positive, got " << s0;
        throw InvalidStokes(os.str());
    }
    const double pol_sq = s1 * s1 + s2 * s2 + s3 * s3;
    if (pol_sq > s0 * s0 * (1.0 + kStokesSlack)) {
        std::ostringstream os;
        os << "Stokes vector outside the polarization cone: degree "
           << std::sqrt(pol_sq) / s0 << " > 1";
        throw InvalidStokes(os.str());
    }
}

double StokesVector::degree_of_polarization() const {
    return std::sqrt(s1_ * s1_ + s2_ * s2_ + s3_ * s3_) / s0_;
}

BlochVector::BlochVector(double x, double y, double z) : v_{x, y, z} {
    if (v_.norm() > 1.0 + 1e-9)
        throw ValidationError("Bloch vector outside the unit ball: norm " +
                              std::to_string(v_.norm()));
}

bool BlochVector::is_pure(double tol) const { return std::abs(norm() - 1.0) <= tol; }

PureQubit::PureQubit(complexd a, complexd b) : a_(a), b_(b) {
    const double n = std::norm(a) + std::norm(b);
    if (std::abs(n - 1.0) > 1e-12)
        throw ValidationError("pure-state amplitudes not normalized: |a|^2+|b|^2 = " +
                              std::to_string(n));
    // Canonical global phase: first significant amplitude real, >= 0.
    complexd lead = (std::abs(a_) > 1e-12) ? a_ : b_;
    const complexd phase = std::conj(lead) / std::abs(lead);
    a_ *= phase;
    b_ *= phase;
}

PureQubit PureQubit::from_bloch(const BlochVector& r) {
    if (!r.is_pure())
        throw ValidationError("from_bloch requires a unit Bloch vector, norm " +
                              std::to_string(r.norm()));
    const double x = r.x(), y = r.y(), z = r.z();
    if (1.0 + z < 1e-15) return vertical();
    const double a = std::sqrt((1.0 + z) / 2.0);
    // b = (x + i y) / sqrt(2 (1 + z)) gives <sigma> = (x, y, z).
    const complexd b = complexd(x, y) / std::sqrt(2.0 * (1.0 + z));
    const double n = std::sqrt(a * a + std::norm(b));
    return PureQubit(a / n, b / n);
}

BlochVector PureQubit::bloch() const {
    const complexd cross = std::conj(a_) * b_;
    return BlochVector(2.0 * cross.real(), 2.0 * cross.imag(),
                       std::norm(a_) - std::norm(b_));
}

QubitState::QubitState(const Mat2c& rho) : rho_(rho) {
    const double herm = frobenius_norm(rho - rho.adjoint());
    if (herm > 1e-12)
        throw ValidationError("density matrix not Hermitian: |rho - rho^dag| = " +
                              std::to_string(herm));
    if (std::abs(rho.trace() - complexd(1.0)) > 1e-12)
        throw ValidationError("density matrix trace != 1");
    const auto ev = eigenvalues();
    if (ev[1] < -1e-12)
        throw ValidationError("density matrix has negative eigenvalue " +
                              std::to_string(ev[1]));
}

QubitState::QubitState(const PureQubit& psi) : rho_() {
    rho_(0, 0) = std::norm(psi.a());
    rho_(0, 1) = psi.a() * std::conj(psi.b());
    rho_(1, 0) = psi.b() * std::conj(psi.a());
    rho_(1, 1) = std::norm(psi.b());
}

std::array<double, 2> QubitState::eigenvalues() const {
    const double tr = rho_.trace().real();
    const double det = rho_.det().real();
    const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

double QubitState::purity() const {
    return std::norm(rho_(0, 0)) + std::norm(rho_(1, 1)) + 2.0 * std::norm(rho_(0, 1));
}

BlochVector stokes_to_bloch(const StokesVector& s) {
    const double s3v[3] = {s.s1(), s.s2(), s.s3()};
    double b[3];
    for (int i = 0; i < 3; ++i) b[kBlochOfStokes[i]] = s3v[i] / s.s0();
    return BlochVector(b[0], b[1], b[2]);
}

QubitState bloch_to_density(const BlochVector& r) {
    Mat2c rho;
    rho(0, 0) = complexd(0.5 * (1.0 + r.z()), 0.0);
    rho(0, 1) = complexd(0.5 * r.x(), -0.5 * r.y());
    rho(1, 0) = complexd(0.5 * r.x(), 0.5 * r.y());
    rho(1, 1) = complexd(0.5 * (1.0 - r.z()), 0.0);
    return QubitState(rho);
}

BlochVector density_to_bloch(const QubitState& rho) {
    return BlochVector(pauli_expectation(rho, Axis::X), pauli_expectation(rho, Axis::Y),
                       pauli_expectation(rho, Axis::Z));
}

PureQubit purify(const BlochVector& r, double min_norm) {
    const double n = r.norm();
    if (n < min_norm)
        throw BelowPurityThreshold("Bloch norm " + std::to_string(n) +
                                   " below purity threshold " + std::to_string(min_norm));
    return PureQubit::from_bloch(BlochVector(r.x() / n, r.y() / n, r.z() / n));
}

double pauli_expectation(const PureQubit& psi, Axis axis) {
    const BlochVector r = psi.bloch();
    switch (axis) {
        case Axis::X: return r.x();
        case Axis::Y: return r.y();
        case Axis::Z: return r.z();
    }
    return 0.0;
}

double pauli_expectation(const QubitState& rho, Axis axis) {
    const Mat2c& sigma = pauli(axis == Axis::X ? 1 : axis == Axis::Y ? 2 : 3);
    return (rho.matrix() * sigma).trace().real();
}

double overlap(const PureQubit& a, const PureQubit& b) {
    const complexd inner = std::conj(a.a()) * b.a() + std::conj(a.b()) * b.b();
    return std::min(std::abs(inner), 1.0);
}

StokesVector stokes_from_projections(double p_h, double p_v, double p_d, double p_a,
                                     double p_r, double p_l) {
    const double ps[6] = {p_h, p_v, p_d, p_a, p_r, p_l};
    for (double p : ps)
        if (p < 0.0)
            throw ValidationError("projection intensities must be non-negative, got " +
                                  std::to_string(p));
    return StokesVector(p_h + p_v, p_h - p_v, p_d + p_a, p_r + p_l);
}

}  // namespace polhist
