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
#ifndef POLHIST_POLARIZATION_HPP
#define POLHIST_POLARIZATION_HPP

#include <array>

#include "polhist/errors.hpp"
#include "polhist/linalg.hpp"

namespace polhist {

// Stokes <-> Pauli axis convention, fixed once for the whole library:
//
//     S1 <-> <sigma_z>,  S2 <-> <sigma_x>,  S3 <-> <sigma_y>
//
// so a Bloch vector reads (x, y, z) = (S2, S3, S1) / S0. Every conversion
// between Stokes space and Bloch space goes through these tables; nothing
// else in the code base is allowed to reorder axes.

/// kBlochOfStokes[i] = Bloch component (0=x,1=y,2=z) carried by S_{i+1}.
inline constexpr int kBlochOfStokes[3] = {2, 0, 1};
/// kStokesOfBloch[b] = index into (S1,S2,S3) carried by Bloch component b.
inline constexpr int kStokesOfBloch[3] = {1, 2, 0};

static_assert(kBlochOfStokes[kStokesOfBloch[0]] == 0 &&
              kBlochOfStokes[kStokesOfBloch[1]] == 1 &&
              kBlochOfStokes[kStokesOfBloch[2]] == 2);

enum class Axis { X, Y, Z };

/// Validity slack for measured Stokes data (experimental rounding).
inline constexpr double kStokesSlack = 1e-9;

/// Four Stokes intensities (S0..S3) of a measured polarization state.
/// Construction enforces S0 > 0 and the polarization cone
/// S1^2 + S2^2 + S3^2 <= S0^2 (1 + slack).
class StokesVector {
public:
    StokesVector(double s0, double s1, double s2, double s3);

    double s0() const { return s0_; }
    double s1() const { return s1_; }
    double s2() const { return s2_; }
    double s3() const { return s3_; }

    double degree_of_polarization() const;

private:
    double s0_, s1_, s2_, s3_;
};

/// Bloch-ball vector; unit length (within tolerance) for pure states.
class BlochVector {
public:
    BlochVector(double x, double y, double z);
    explicit BlochVector(const Vec3& v) : BlochVector(v.x, v.y, v.z) {}

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    const Vec3& vec() const { return v_; }

    double norm() const { return v_.norm(); }
    bool is_pure(double tol = 1e-9) const;

private:
    Vec3 v_;
};

/// Normalized pure polarization qubit in the {|H>, |V>} basis, stored with
/// a canonical global phase: the first amplitude of magnitude > 1e-12 is
/// real and non-negative. Canonicalization makes equality testable.
class PureQubit {
public:
    /// Amplitudes must already be normalized to 1e-12.
    PureQubit(complexd a, complexd b);

    static PureQubit horizontal() { return PureQubit(1.0, 0.0); }
    static PureQubit vertical() { return PureQubit(0.0, 1.0); }
    /// Pure state with the given unit Bloch vector.
    static PureQubit from_bloch(const BlochVector& r);

    complexd a() const { return a_; }
    complexd b() const { return b_; }

    BlochVector bloch() const;

private:
    complexd a_, b_;
};

/// 2x2 density matrix: Hermitian, unit trace, positive semi-definite
/// (eigenvalues >= -1e-12), all checked at construction.
class QubitState {
public:
    explicit QubitState(const Mat2c& rho);
    explicit QubitState(const PureQubit& psi);

    const Mat2c& matrix() const { return rho_; }

    /// Eigenvalues, descending (closed form for 2x2 Hermitian).
    std::array<double, 2> eigenvalues() const;
    double purity() const;

private:
    Mat2c rho_;
};

// --- operations ---

/// (S2, S3, S1)/S0 under the fixed axis convention.
BlochVector stokes_to_bloch(const StokesVector& s);

/// rho = (I + r . sigma) / 2.
QubitState bloch_to_density(const BlochVector& r);

/// Inverse of bloch_to_density: reads <sigma_x>, <sigma_y>, <sigma_z>.
BlochVector density_to_bloch(const QubitState& rho);

/// Nearest pure state r/|r|; throws BelowPurityThreshold when |r| < min_norm.
PureQubit purify(const BlochVector& r, double min_norm = 0.9);

double pauli_expectation(const PureQubit& psi, Axis axis);
double pauli_expectation(const QubitState& rho, Axis axis);

/// |<a|b>|, in [0, 1]; invariant under global phases.
double overlap(const PureQubit& a, const PureQubit& b);

/// Stokes vector from the six projective measurements
/// (H, V, +45, -45, right circular, left circular intensities):
///   S = (P_h + P_v, P_h - P_v, P_d + P_a, P_r + P_l).
/// All inputs must be non-negative; the result must pass the cone check.
StokesVector stokes_from_projections(double p_h, double p_v, double p_d,
                                     double p_a, double p_r, double p_l);

}  // namespace polhist

#endif  // POLHIST_POLARIZATION_HPP
