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
#include "polhist/evolution.hpp"

#include <cmath>
#include <numbers>

namespace polhist {

namespace {

/// Bloch vector of the Haar draw (z, then azimuth) from one substream.
/// Shares the draw order with haar_random_pure by construction.
Vec3 haar_bloch(Rng& rng) {
    const double z = rng.next_symmetric();
    const double phi = 2.0 * std::numbers::pi * rng.next_unit();
    const double s = std::sqrt(std::max(1.0 - z * z, 0.0));
    return {s * std::cos(phi), s * std::sin(phi), z};
}

}  // namespace

EvolutionOperator::EvolutionOperator(std::vector<Unitary2> unitaries)
    : unitaries_(std::move(unitaries)) {
    if (unitaries_.empty()) throw ValidationError("evolution operator needs N >= 1");
}

std::array<complexd, 4> pauli_coefficients(const Mat2c& u) {
    std::array<complexd, 4> r;
    for (int mu = 0; mu < 4; ++mu) r[static_cast<std::size_t>(mu)] = (u * pauli(mu)).trace();
    return r;
}

std::array<complexd, 4> pauli_coefficients(const Unitary2& u) {
    return pauli_coefficients(u.matrix());
}

SchmidtSpectrum schmidt_spectrum(const EvolutionOperator& w) {
    const int n = w.size();

    // 4x4 Hermitian Gram matrix G = C C^dag of the normalized coefficient
    // matrix C[mu][t] = Tr(U_t sigma_mu) / (2 sqrt(N)); Tr G = 1 for
    // unitary columns. Accumulated as r_mu conj(r_nu) / (4N) to keep
    // Pauli-frame entries exact.
    const double denom = 4.0 * n;
    complexd gram[4][4] = {};
    for (int t = 0; t < n; ++t) {
        const auto r = pauli_coefficients(w[t]);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                gram[mu][nu] += r[static_cast<std::size_t>(mu)] *
                                std::conj(r[static_cast<std::size_t>(nu)]) / denom;
    }

    // Realified embedding [[Re G, -Im G], [Im G, Re G]]: real symmetric,
    // every eigenvalue of G appears twice.
    double h[64];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            h[i * 8 + j] = gram[i][j].real();
            h[i * 8 + (j + 4)] = -gram[i][j].imag();
            h[(i + 4) * 8 + j] = gram[i][j].imag();
            h[(i + 4) * 8 + (j + 4)] = gram[i][j].real();
        }
    double evals[8];
    jacobi_eigh(8, h, evals, nullptr);

    SchmidtSpectrum spectrum;
    const int max_rank = std::min(4, n);
    for (int i = 0; i < max_rank; ++i) {
        const double lambda = std::sqrt(std::max(evals[2 * i], 0.0));
        if (lambda <= 1e-12 && !spectrum.lambdas.empty()) continue;
        spectrum.lambdas.push_back(lambda);
    }
    return spectrum;
}

double operator_entanglement(const EvolutionOperator& w) {
    const SchmidtSpectrum s = schmidt_spectrum(w);
    double quartic = 0.0;
    for (double l : s.lambdas) quartic += l * l * l * l;
    return 2.0 * (1.0 - quartic);
}

PureQubit haar_random_pure(Rng& rng) {
    const Vec3 r = haar_bloch(rng);
    return PureQubit::from_bloch(BlochVector(r.x, r.y, r.z));
}

Unitary2 haar_random_unitary(Rng& rng) {
    // Uniform unit quaternion (subgroup algorithm), then the SU(2) element.
    const double u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    const double u3 = rng.next_unit();
    const double a = std::sqrt(1.0 - u1);
    const double b = std::sqrt(u1);
    const double theta1 = 2.0 * std::numbers::pi * u2;
    const double theta2 = 2.0 * std::numbers::pi * u3;
    const double w = a * std::sin(theta1);
    const Vec3 v{a * std::cos(theta1), b * std::sin(theta2), b * std::cos(theta2)};
    Mat2c u;
    u(0, 0) = complexd(w, -v.z);
    u(0, 1) = complexd(-v.y, -v.x);
    u(1, 0) = complexd(v.y, -v.x);
    u(1, 1) = complexd(w, v.z);
    return Unitary2(u);
}

double entangling_power_mc(const EvolutionOperator& w, int samples, std::uint64_t seed) {
    if (samples < 1) throw ValidationError("samples must be >= 1");
    const int n = w.size();

    // For a qubit, E2 of the history is |r0|^2 - |mean_t R_t r0|^2, so the
    // mean rotation matrix can be folded once before sampling. Writing it
    // as a norm difference (|r0| = 1 by construction) keeps the stationary
    // case at exactly zero.
    Mat3 mean_rot;
    for (int t = 0; t < n; ++t) mean_rot = mean_rot + rotation_of_unitary(w[t].matrix());
    mean_rot = (1.0 / n) * mean_rot;

    std::vector<double> vals(static_cast<std::size_t>(samples));
    // Per-sample substreams keep the fill order-free; the pairwise
    // reduction below fixes the result for any thread count.
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        const Vec3 r0 = haar_bloch(rng);
        const Vec3 rbar = mean_rot * r0;
        vals[static_cast<std::size_t>(i)] = r0.norm_sq() - rbar.norm_sq();
    }
    return pairwise_sum(vals) / samples;
}

double entangling_power_mc_serial(const EvolutionOperator& w, int samples,
                                  std::uint64_t seed) {
    if (samples < 1) throw ValidationError("samples must be >= 1");
    std::vector<double> vals(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        const PureQubit psi0 = haar_random_pure(rng);
        const HistoryState h = make_history(psi0, w.unitaries());
        vals[static_cast<std::size_t>(i)] = quadratic_entanglement(h, w.size());
    }
    return pairwise_sum(vals) / samples;
}

double verify_entangling_relation(const EvolutionOperator& w, int samples,
                                  std::uint64_t seed) {
    const double d_s = 2.0;
    const double closed_form = d_s / (d_s + 1.0) * operator_entanglement(w);
    return std::abs(entangling_power_mc(w, samples, seed) - closed_form);
}

}  // namespace polhist
