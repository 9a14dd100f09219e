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
#ifndef POLHIST_MUELLER_HPP
#define POLHIST_MUELLER_HPP

#include "polhist/linalg.hpp"
#include "polhist/polarization.hpp"

namespace polhist {

/// 4x4 real Mueller matrix. Construction enforces the basic bounds
/// m00 > 0 and |m_ij| <= m00 (1 + 1e-9); the fuller physicality screen is
/// a separate check (see passes_physicality_screen).
class MuellerMatrix {
public:
    explicit MuellerMatrix(const Mat4& m);

    const Mat4& matrix() const { return m_; }
    double operator()(int r, int c) const { return m_(r, c); }

    static MuellerMatrix identity() { return MuellerMatrix(Mat4::identity()); }

private:
    Mat4 m_;
};

/// Ideal-retarder Mueller matrix diag(1, m_R) with m_R in SO(3).
/// Orthogonality and det +1 are enforced to 1e-9 at construction.
class RetarderMatrix {
public:
    explicit RetarderMatrix(const Mat4& m);
    /// From the 3x3 rotation block acting on (S1, S2, S3).
    explicit RetarderMatrix(const Mat3& block);

    const Mat3& block() const { return block_; }
    Mat4 matrix() const;
    MuellerMatrix mueller() const { return MuellerMatrix(matrix()); }

    static RetarderMatrix identity() { return RetarderMatrix(Mat3::identity()); }

private:
    Mat3 block_;
};

/// 2x2 polarization unitary, stored canonically: det U = +1 and, when
/// |Tr U| > 1e-12, Tr U real and non-negative (traceless case falls back
/// to a sign rule on the first significant entry). U and -U canonicalize
/// to the same object, matching the SU(2) -> SO(3) double cover.
class Unitary2 {
public:
    /// Accepts any matrix with U^dag U = I to 1e-12 (arbitrary phase).
    explicit Unitary2(const Mat2c& u);

    const Mat2c& matrix() const { return u_; }
    complexd operator()(int r, int c) const { return u_(r, c); }

    static Unitary2 identity() { return Unitary2(Mat2c::identity()); }
    /// exp(-i angle (axis . sigma) / 2) for a unit Bloch-space axis.
    static Unitary2 from_axis_angle(const Vec3& axis, double angle);

private:
    Mat2c u_;
};

struct LuChipmanFactors {
    MuellerMatrix depolarizer;
    RetarderMatrix retarder;
    MuellerMatrix diattenuator;
    /// |M_depol M_R M_D - M|_F / |M|_F; reported, never hidden.
    double residual = 0.0;
};

/// S' = M S. Throws UnphysicalOutput when S' leaves the Stokes cone
/// beyond slack (a sign of a non-physical M).
StokesVector apply(const MuellerMatrix& m, const StokesVector& s);

/// Necessary-conditions screen: positive m00, entry bounds, and cone
/// preservation sampled on the 26 canonical Stokes directions. Not a full
/// positivity test. Optionally reports the worst violation magnitude.
bool passes_physicality_screen(const MuellerMatrix& m, double* max_violation = nullptr);

/// M = M_depol . M_R . M_D with M_D the pure diattenuator built from the
/// diattenuation vector D = (m01, m02, m03)/m00, M_R an ideal retarder
/// and M_depol the depolarizer (symmetric 3x3 block plus polarizance
/// column). The m00 scale is carried by the diattenuator.
LuChipmanFactors lu_chipman(const MuellerMatrix& m);

/// SU(2) lift of the retarder's rotation under the fixed axis convention:
/// density(apply(R, S)) = U density(S) U^dag.
Unitary2 retarder_to_unitary(const RetarderMatrix& r);

/// The unique retarder whose Stokes action matches rho -> U rho U^dag.
RetarderMatrix unitary_to_rotation(const Unitary2& u);

/// Bloch-space rotation of a unitary: (U (r.sigma) U^dag) = (R r).sigma.
/// Phase-insensitive; accepts any unitary 2x2 matrix.
Mat3 rotation_of_unitary(const Mat2c& u);

/// min_phi |U - e^{i phi} V|_F = sqrt(4 - 2 |Tr(U^dag V)|).
double projective_distance(const Unitary2& u, const Unitary2& v);

}  // namespace polhist

#endif  // POLHIST_MUELLER_HPP
