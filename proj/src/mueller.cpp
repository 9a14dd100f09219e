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
#include "polhist/mueller.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace polhist {

namespace {

constexpr double kRotationTol = 1e-9;

/// Bloch-space rotation from the retarder's Stokes-space block: both are
/// the same rotation expressed on permuted axes.
Mat3 stokes_block_to_bloch(const Mat3& m_r) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = m_r(kStokesOfBloch[i], kStokesOfBloch[j]);
    return r;
}

Mat3 bloch_to_stokes_block(const Mat3& r) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m(i, j) = r(kBlochOfStokes[i], kBlochOfStokes[j]);
    return m;
}

/// Unit quaternion (w, v) with U = w I - i v.sigma for the rotation R,
/// extracted on the largest-diagonal branch (stable near pi rotations).
void quaternion_from_rotation(const Mat3& r, double& w, Vec3& v) {
    const double t = r(0, 0) + r(1, 1) + r(2, 2);
    if (t >= r(0, 0) && t >= r(1, 1) && t >= r(2, 2)) {
        w = 0.5 * std::sqrt(std::max(1.0 + t, 0.0));
        const double inv = 0.25 / w;
        v = {(r(2, 1) - r(1, 2)) * inv, (r(0, 2) - r(2, 0)) * inv,
             (r(1, 0) - r(0, 1)) * inv};
    } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
        v.x = 0.5 * std::sqrt(std::max(1.0 + r(0, 0) - r(1, 1) - r(2, 2), 0.0));
        const double inv = 0.25 / v.x;
        w = (r(2, 1) - r(1, 2)) * inv;
        v.y = (r(0, 1) + r(1, 0)) * inv;
        v.z = (r(0, 2) + r(2, 0)) * inv;
    } else if (r(1, 1) >= r(2, 2)) {
        v.y = 0.5 * std::sqrt(std::max(1.0 - r(0, 0) + r(1, 1) - r(2, 2), 0.0));
        const double inv = 0.25 / v.y;
        w = (r(0, 2) - r(2, 0)) * inv;
        v.x = (r(0, 1) + r(1, 0)) * inv;
        v.z = (r(1, 2) + r(2, 1)) * inv;
    } else {
        v.z = 0.5 * std::sqrt(std::max(1.0 - r(0, 0) - r(1, 1) + r(2, 2), 0.0));
        const double inv = 0.25 / v.z;
        w = (r(1, 0) - r(0, 1)) * inv;
        v.x = (r(0, 2) + r(2, 0)) * inv;
        v.y = (r(1, 2) + r(2, 1)) * inv;
    }
    const double n = std::sqrt(w * w + v.norm_sq());
    w /= n;
    v = (1.0 / n) * v;
}

Mat2c unitary_from_quaternion(double w, const Vec3& v) {
    Mat2c u;
    u(0, 0) = complexd(w, -v.z);
    u(0, 1) = complexd(-v.y, -v.x);
    u(1, 0) = complexd(v.y, -v.x);
    u(1, 1) = complexd(w, v.z);
    return u;
}

void check_rotation_block(const Mat3& block) {
    const Mat3 gram = block * block.transposed();
    Mat3 dev = gram;
    for (int i = 0; i < 3; ++i) dev(i, i) -= 1.0;
    const double ortho = frobenius_norm(dev);
    const double det_dev = std::abs(block.det() - 1.0);
    if (ortho > kRotationTol || det_dev > kRotationTol) {
        std::ostringstream os;
        os << "retarder block is not a rotation: |m m^T - I| = " << ortho
           << ", |det - 1| = " << det_dev;
        throw NotARotation(os.str());
    }
}

/// The 26 unit Stokes directions with components in {-1, 0, 1}.
const std::vector<Vec3>& cone_probe_directions() {
    static const std::vector<Vec3> dirs = [] {
        std::vector<Vec3> d;
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j)
                for (int k = -1; k <= 1; ++k) {
                    if (i == 0 && j == 0 && k == 0) continue;
                    Vec3 v{static_cast<double>(i), static_cast<double>(j),
                           static_cast<double>(k)};
                    const double n = v.norm();
                    d.push_back({v.x / n, v.y / n, v.z / n});
                }
        return d;
    }();
    return dirs;
}

}  // namespace

MuellerMatrix::MuellerMatrix(const Mat4& m) : m_(m) {
    if (!(m(0, 0) > 0.0))
        throw UnphysicalMatrix("Mueller m00 must be positive, got " +
                               std::to_string(m(0, 0)));
    const double bound = m(0, 0) * (1.0 + 1e-9);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (std::abs(m(r, c)) > bound) {
                std::ostringstream os;
                os << "Mueller entry m" << r << c << " = " << m(r, c)
                   << " exceeds m00 = " << m(0, 0);
                throw UnphysicalMatrix(os.str());
            }
}

RetarderMatrix::RetarderMatrix(const Mat4& m) {
    for (int i = 1; i < 4; ++i)
        if (std::abs(m(0, i)) > kRotationTol || std::abs(m(i, 0)) > kRotationTol)
            throw NotARotation("retarder first row/column must be (1, 0, 0, 0)");
    if (std::abs(m(0, 0) - 1.0) > kRotationTol)
        throw NotARotation("retarder m00 must be 1");
    Mat3 block;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) block(r, c) = m(r + 1, c + 1);
    check_rotation_block(block);
    block_ = block;
}

RetarderMatrix::RetarderMatrix(const Mat3& block) {
    check_rotation_block(block);
    block_ = block;
}

Mat4 RetarderMatrix::matrix() const {
    Mat4 m;
    m(0, 0) = 1.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r + 1, c + 1) = block_(r, c);
    return m;
}

Unitary2::Unitary2(const Mat2c& u) : u_(u) {
    const double dev = frobenius_norm(u.adjoint() * u - Mat2c::identity());
    if (dev > 1e-12)
        throw ValidationError("matrix is not unitary: |U^dag U - I| = " +
                              std::to_string(dev));
    // Canonical form: det +1, then fix the residual +-1 ambiguity.
    const complexd root = std::sqrt(u_.det());
    u_ = (complexd(1.0, 0.0) / root) * u_;
    const complexd tr = u_.trace();
    if (std::abs(tr) > 1e-12) {
        if (tr.real() < 0.0) u_ = complexd(-1.0, 0.0) * u_;
    } else {
        for (const complexd& e : u_.a) {
            if (std::abs(e) <= 1e-12) continue;
            if (e.real() < -1e-12 || (std::abs(e.real()) <= 1e-12 && e.imag() < 0.0))
                u_ = complexd(-1.0, 0.0) * u_;
            break;
        }
    }
}

Unitary2 Unitary2::from_axis_angle(const Vec3& axis, double angle) {
    const double n = axis.norm();
    if (std::abs(n - 1.0) > 1e-9)
        throw ValidationError("rotation axis must be a unit vector");
    const double w = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return Unitary2(unitary_from_quaternion(w, {s * axis.x / n, s * axis.y / n,
                                                s * axis.z / n}));
}

StokesVector apply(const MuellerMatrix& m, const StokesVector& s) {
    const double in[4] = {s.s0(), s.s1(), s.s2(), s.s3()};
    double out[4] = {0.0, 0.0, 0.0, 0.0};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += m(r, c) * in[c];
    try {
        return StokesVector(out[0], out[1], out[2], out[3]);
    } catch (const InvalidStokes& e) {
        throw UnphysicalOutput(std::string("Mueller output leaves the Stokes cone: ") +
                               e.what());
    }
}

bool passes_physicality_screen(const MuellerMatrix& m, double* max_violation) {
    double worst = 0.0;
    const double m00 = m(0, 0);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            worst = std::max(worst, std::abs(m(r, c)) / m00 - 1.0);
    for (const Vec3& d : cone_probe_directions()) {
        const double in[4] = {1.0, d.x, d.y, d.z};
        double out[4] = {0.0, 0.0, 0.0, 0.0};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) out[r] += m(r, c) * in[c] / m00;
        worst = std::max(worst, -out[0]);
        const double pol = std::sqrt(out[1] * out[1] + out[2] * out[2] + out[3] * out[3]);
        worst = std::max(worst, pol - out[0]);
    }
    if (max_violation != nullptr) *max_violation = std::max(worst, 0.0);
    return worst <= 1e-9;
}

LuChipmanFactors lu_chipman(const MuellerMatrix& m) {
    const double t_u = m(0, 0);  // unpolarized transmittance, kept on M_D

    Mat4 mn;  // m00-normalized input
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) mn(r, c) = m(r, c) / t_u;

    const Vec3 dia{mn(0, 1), mn(0, 2), mn(0, 3)};
    const double d = dia.norm();
    if (d >= 1.0 - 1e-9)
        throw SingularDiattenuator("diattenuation " + std::to_string(d) +
                                   " at the polarizer limit");

    // Pure diattenuator: sqrt(1-d^2) on the complement of D plus the
    // rank-one part that keeps row/column 0 equal to (1, D).
    Mat4 md = Mat4::identity();
    if (d > 0.0) {
        const double s = std::sqrt(1.0 - d * d);
        const Vec3 dh = (1.0 / d) * dia;
        const double dhv[3] = {dh.x, dh.y, dh.z};
        const double dv[3] = {dia.x, dia.y, dia.z};
        for (int i = 0; i < 3; ++i) {
            md(0, i + 1) = dv[i];
            md(i + 1, 0) = dv[i];
            for (int j = 0; j < 3; ++j)
                md(i + 1, j + 1) = s * (i == j ? 1.0 : 0.0) + (1.0 - s) * dhv[i] * dhv[j];
        }
    }

    Mat4 md_inv;
    if (!invert4(md, md_inv))
        throw SingularDiattenuator("diattenuator factor is numerically singular");
    const Mat4 mp = mn * md_inv;  // depolarizer . retarder

    Mat3 m3;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m3(r, c) = mp(r + 1, c + 1);

    // Polar decomposition m3 = m_depol . m_rot through the eigensystem of
    // the Gram matrix m3^T m3 (singular values and right vectors).
    const Mat3 gram = m3.transposed() * m3;
    double evals[3];
    double evecs[9];
    jacobi_eigh(3, gram.a.data(), evals, evecs);
    Mat3 vmat;
    for (int i = 0; i < 9; ++i) vmat.a[static_cast<std::size_t>(i)] = evecs[i];
    if (vmat.det() < 0.0)
        for (int r = 0; r < 3; ++r) vmat(r, 2) = -vmat(r, 2);

    double sing[3];
    for (int i = 0; i < 3; ++i) sing[i] = std::sqrt(std::max(evals[i], 0.0));
    if (sing[2] <= 1e-12 * std::max(sing[0], 1.0))
        throw DegenerateDepolarizer("3x3 polar factor rank-deficient: singular values " +
                                    std::to_string(sing[0]) + ", " + std::to_string(sing[1]) +
                                    ", " + std::to_string(sing[2]));

    Mat3 umat;
    for (int j = 0; j < 3; ++j) {
        const Vec3 vj{vmat(0, j), vmat(1, j), vmat(2, j)};
        const Vec3 uj = (1.0 / sing[j]) * (m3 * vj);
        umat(0, j) = uj.x;
        umat(1, j) = uj.y;
        umat(2, j) = uj.z;
    }
    // Reflection case: flip the column of the smallest singular value so
    // the retarder lands in SO(3); the sign moves into the depolarizer.
    if (m3.det() < 0.0)
        for (int r = 0; r < 3; ++r) umat(r, 2) = -umat(r, 2);

    const Mat3 rot = umat * vmat.transposed();
    Mat3 depol3 = m3 * rot.transposed();
    depol3 = 0.5 * (depol3 + depol3.transposed());

    Mat4 depol4 = Mat4::identity();
    for (int r = 0; r < 3; ++r) {
        depol4(r + 1, 0) = mp(r + 1, 0);  // polarizance stays with the depolarizer
        for (int c = 0; c < 3; ++c) depol4(r + 1, c + 1) = depol3(r, c);
    }

    Mat4 diat4 = md;
    for (auto& v : diat4.a) v *= t_u;

    LuChipmanFactors factors{MuellerMatrix(depol4), RetarderMatrix(rot),
                             MuellerMatrix(diat4), 0.0};
    const Mat4 rebuilt =
        factors.depolarizer.matrix() * (factors.retarder.matrix() * factors.diattenuator.matrix());
    factors.residual = frobenius_norm(rebuilt - m.matrix()) / frobenius_norm(m.matrix());
    return factors;
}

Unitary2 retarder_to_unitary(const RetarderMatrix& r) {
    const Mat3 bloch_rot = stokes_block_to_bloch(r.block());
    double w;
    Vec3 v;
    quaternion_from_rotation(bloch_rot, w, v);
    return Unitary2(unitary_from_quaternion(w, v));
}

RetarderMatrix unitary_to_rotation(const Unitary2& u) {
    return RetarderMatrix(bloch_to_stokes_block(rotation_of_unitary(u.matrix())));
}

Mat3 rotation_of_unitary(const Mat2c& u) {
    const Mat2c udag = u.adjoint();
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = 0.5 * (pauli(i + 1) * (u * (pauli(j + 1) * udag))).trace().real();
    return r;
}

double projective_distance(const Unitary2& u, const Unitary2& v) {
    // The optimal phase is arg Tr(U^dag V); the entrywise difference at
    // that phase avoids the cancellation of sqrt(4 - 2 |Tr|) near zero.
    const complexd t = (u.matrix().adjoint() * v.matrix()).trace();
    if (std::abs(t) < 1e-15) return 2.0;
    const complexd phase = t / std::abs(t);
    return frobenius_norm(u.matrix() - phase * v.matrix());
}

}  // namespace polhist
