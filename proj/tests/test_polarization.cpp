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
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "polhist/polarization.hpp"
#include "polhist/rng.hpp"

using namespace polhist;

TEST_SUITE("polarization") {

TEST_CASE("stokes_to_bloch applies the fixed axis convention") {
    // The measured input state of the SLM runs.
    const BlochVector r = stokes_to_bloch(StokesVector(1.000, 0.040, 0.951, -0.026));
    CHECK(r.x() == doctest::Approx(0.951).epsilon(1e-12));
    CHECK(r.y() == doctest::Approx(-0.026).epsilon(1e-12));
    CHECK(r.z() == doctest::Approx(0.040).epsilon(1e-12));

    const BlochVector unpolarized = stokes_to_bloch(StokesVector(1, 0, 0, 0));
    CHECK(unpolarized.norm() == 0.0);

    const BlochVector scaled = stokes_to_bloch(StokesVector(2, 2, 0, 0));
    CHECK(scaled.x() == 0.0);
    CHECK(scaled.y() == 0.0);
    CHECK(scaled.z() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("stokes validity") {
    CHECK_THROWS_AS(StokesVector(0.0, 0, 0, 0), InvalidStokes);
    CHECK_THROWS_AS(StokesVector(-1.0, 0, 0, 0), InvalidStokes);
    CHECK_THROWS_AS(StokesVector(1.0, 1.0, 1.0, 0.0), InvalidStokes);
    // Slack admits measured rounding right at the cone.
    CHECK_NOTHROW(StokesVector(1.0, 1.0, 0.0, 0.0));
}

TEST_CASE("bloch_to_density basics") {
    const QubitState h = bloch_to_density(BlochVector(0, 0, 1));
    CHECK(h.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(h.matrix()(1, 1)) == doctest::Approx(0.0).epsilon(1e-15));

    const QubitState mixed = bloch_to_density(BlochVector(0, 0, 0));
    CHECK(mixed.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mixed.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(mixed.matrix()(0, 1)) == 0.0);

    const QubitState plus = bloch_to_density(BlochVector(1, 0, 0));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            CHECK(plus.matrix()(r, c).real() == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(BlochVector(1.0, 1.0, 0.0), ValidationError);
}

TEST_CASE("purify normalizes and rejects depolarized data") {
    const PureQubit h = purify(BlochVector(0, 0, 0.5), 0.4);
    CHECK(h.a().real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(h.b()) == doctest::Approx(0.0).epsilon(1e-15));

    CHECK_THROWS_AS(purify(BlochVector(0, 0, 0.1), 0.9), BelowPurityThreshold);

    // Measured trajectory-1 step-1 Pauli means; oracle is direct arithmetic.
    const double mx = -0.7328, my = -0.6621, mz = 0.0541;
    const double norm = std::sqrt(mx * mx + my * my + mz * mz);
    CHECK(norm == doctest::Approx(0.989090016).epsilon(1e-9));
    const PureQubit psi = purify(BlochVector(mx, my, mz));
    const BlochVector r = psi.bloch();
    CHECK(r.x() == doctest::Approx(mx / norm).epsilon(1e-12));
    CHECK(r.y() == doctest::Approx(my / norm).epsilon(1e-12));
    CHECK(r.z() == doctest::Approx(mz / norm).epsilon(1e-12));
    CHECK(r.x() == doctest::Approx(-0.7408830).epsilon(1e-6));
    CHECK(r.y() == doctest::Approx(-0.6694032).epsilon(1e-6));
    CHECK(r.z() == doctest::Approx(0.0546967).epsilon(1e-5));
}

TEST_CASE("pauli expectations") {
    CHECK(pauli_expectation(PureQubit::horizontal(), Axis::Z) == doctest::Approx(1.0));
    const QubitState mixed = bloch_to_density(BlochVector(0, 0, 0));
    for (Axis a : {Axis::X, Axis::Y, Axis::Z})
        CHECK(pauli_expectation(mixed, a) == doctest::Approx(0.0).epsilon(1e-15));

    // Explicit 2x2 trace as the oracle for the purified measured state.
    const PureQubit psi = purify(BlochVector(-0.7328, -0.6621, 0.0541));
    const QubitState rho(psi);
    const double via_trace =
        (rho.matrix() * oracles::stokes_sigma(2)).trace().real();  // sigma_x
    CHECK(pauli_expectation(psi, Axis::X) == doctest::Approx(via_trace).epsilon(1e-12));
    CHECK(pauli_expectation(psi, Axis::X) == doctest::Approx(-0.7408830).epsilon(1e-6));
}

TEST_CASE("overlap") {
    const PureQubit h = PureQubit::horizontal();
    const PureQubit v = PureQubit::vertical();
    CHECK(overlap(h, h) == doctest::Approx(1.0));
    CHECK(overlap(h, v) == doctest::Approx(0.0));

    // Bloch vectors at right angles overlap at cos(pi/4).
    const PureQubit plus = purify(BlochVector(1, 0, 0), 0.5);
    CHECK(overlap(h, plus) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("stokes_from_projections matches the measurement combination") {
    CHECK_THROWS_AS(stokes_from_projections(1, 0, 0.5, 0.5, 0.5, 0.5), InvalidStokes);
    CHECK_THROWS_AS(stokes_from_projections(0.5, 0.5, 0.5, 0.5, 0.5, 0.5), InvalidStokes);
    CHECK_THROWS_AS(stokes_from_projections(1, 1, 1, 1, 1, -0.1), ValidationError);

    const StokesVector s = stokes_from_projections(0.5, 0.5, 0.5, 0.0, 0.25, 0.25);
    // Direct formula: (p_h+p_v, p_h-p_v, p_d+p_a, p_r+p_l).
    CHECK(s.s0() == doctest::Approx(1.0));
    CHECK(s.s1() == doctest::Approx(0.0));
    CHECK(s.s2() == doctest::Approx(0.5));
    CHECK(s.s3() == doctest::Approx(0.5));
    CHECK(s.degree_of_polarization() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("bloch/density round trip and expectation consistency") {
    Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        const double z = rng.next_symmetric();
        const double phi = 2.0 * 3.14159265358979323846 * rng.next_unit();
        const double rad = std::cbrt(rng.next_unit());
        const double s = std::sqrt(1.0 - z * z);
        const BlochVector r(rad * s * std::cos(phi), rad * s * std::sin(phi), rad * z);
        const QubitState rho = bloch_to_density(r);
        const BlochVector back = density_to_bloch(rho);
        CHECK(back.x() == doctest::Approx(r.x()).epsilon(1e-12));
        CHECK(back.y() == doctest::Approx(r.y()).epsilon(1e-12));
        CHECK(back.z() == doctest::Approx(r.z()).epsilon(1e-12));
        CHECK(pauli_expectation(rho, Axis::X) == doctest::Approx(r.x()).epsilon(1e-12));
        CHECK(pauli_expectation(rho, Axis::Y) == doctest::Approx(r.y()).epsilon(1e-12));
        CHECK(pauli_expectation(rho, Axis::Z) == doctest::Approx(r.z()).epsilon(1e-12));
    }
}

TEST_CASE("overlap is symmetric and phase-invariant") {
    Rng rng(102);
    for (int i = 0; i < 100; ++i) {
        const double z1 = rng.next_symmetric(), z2 = rng.next_symmetric();
        const double p1 = 2.0 * 3.14159265358979323846 * rng.next_unit();
        const double p2 = 2.0 * 3.14159265358979323846 * rng.next_unit();
        const auto mk = [](double z, double p) {
            const double s = std::sqrt(1.0 - z * z);
            return purify(BlochVector(s * std::cos(p), s * std::sin(p), z), 0.5);
        };
        const PureQubit a = mk(z1, p1);
        const PureQubit b = mk(z2, p2);
        CHECK(overlap(a, b) == doctest::Approx(overlap(b, a)).epsilon(1e-14));
        // Global phases are stripped at construction, so rebuilding from
        // rotated amplitudes must not change the overlap.
        const complexd phase = std::exp(complexd(0.0, 1.234));
        const PureQubit a2(phase * a.a(), phase * a.b());
        CHECK(overlap(a2, b) == doctest::Approx(overlap(a, b)).epsilon(1e-14));
    }
}

TEST_CASE("valid projection sets stay inside the Bloch ball") {
    Rng rng(103);
    int accepted = 0;
    for (int i = 0; i < 500; ++i) {
        const double p[6] = {rng.next_unit(), rng.next_unit(), rng.next_unit(),
                             rng.next_unit(), rng.next_unit(), rng.next_unit()};
        try {
            const StokesVector s = stokes_from_projections(p[0], p[1], p[2], p[3], p[4], p[5]);
            const BlochVector r = stokes_to_bloch(s);
            CHECK(r.norm() <= 1.0 + 1e-9);
            ++accepted;
        } catch (const InvalidStokes&) {
        }
    }
    CHECK(accepted > 0);
}

TEST_CASE("pure qubit canonical phase makes equality testable") {
    const complexd phase = std::exp(complexd(0.0, 0.77));
    const PureQubit a(complexd(0.6, 0.0), complexd(0.0, 0.8));
    const PureQubit b(phase * complexd(0.6, 0.0), phase * complexd(0.0, 0.8));
    CHECK(a.a().real() == doctest::Approx(b.a().real()).epsilon(1e-14));
    CHECK(a.a().imag() == doctest::Approx(b.a().imag()).epsilon(1e-14));
    CHECK(a.b().real() == doctest::Approx(b.b().real()).epsilon(1e-14));
    CHECK(a.b().imag() == doctest::Approx(b.b().imag()).epsilon(1e-14));
    CHECK(a.a().imag() == 0.0);
    CHECK(a.a().real() >= 0.0);

    CHECK_THROWS_AS(PureQubit(complexd(1.0, 0.0), complexd(0.1, 0.0)), ValidationError);
}

}  // TEST_SUITE
