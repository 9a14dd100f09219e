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
#ifndef POLHIST_EVOLUTION_HPP
#define POLHIST_EVOLUTION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "polhist/history.hpp"
#include "polhist/mueller.hpp"
#include "polhist/rng.hpp"

namespace polhist {

/// Controlled-evolution operator W = sum_t U_t (x) |t><t| as its ordered
/// list of polarization unitaries.
class EvolutionOperator {
public:
    explicit EvolutionOperator(std::vector<Unitary2> unitaries);

    int size() const { return static_cast<int>(unitaries_.size()); }
    const Unitary2& operator[](int i) const { return unitaries_[static_cast<std::size_t>(i)]; }
    const std::vector<Unitary2>& unitaries() const { return unitaries_; }

private:
    std::vector<Unitary2> unitaries_;
};

/// Schmidt coefficients of W: singular values of the normalized Pauli-by-
/// time coefficient matrix, descending, sum of squares 1. Trailing zeros
/// (below 1e-12) are dropped; at most min(4, N) entries.
struct SchmidtSpectrum {
    std::vector<double> lambdas;
};

/// r_mu = Tr(U sigma_mu) for sigma = (I, sigma_x, sigma_y, sigma_z), so
/// that U = (1/2) sum_mu r_mu sigma_mu and sum_mu |r_mu|^2 = 4 for any
/// unitary input. Canonicalizing a matrix into a Unitary2 may rotate the
/// coefficients by the global phase it strips; everything downstream
/// (Gram matrix, Schmidt spectrum) is phase-insensitive.
std::array<complexd, 4> pauli_coefficients(const Mat2c& u);
std::array<complexd, 4> pauli_coefficients(const Unitary2& u);

SchmidtSpectrum schmidt_spectrum(const EvolutionOperator& w);

/// Quadratic operator entanglement E2(W) = 2 (1 - sum lambda^4).
double operator_entanglement(const EvolutionOperator& w);

/// Pure qubit uniform on the Bloch sphere: z uniform in [-1, 1], azimuth
/// uniform in [0, 2 pi). Draw order (z first, then azimuth) is part of
/// the reproducibility contract.
PureQubit haar_random_pure(Rng& rng);

/// Haar-uniform SU(2) element (uniform unit quaternion, canonical form).
Unitary2 haar_random_unitary(Rng& rng);

/// Monte-Carlo entangling power: mean over Haar-random |psi0> of the
/// quadratic entanglement of make_history(psi0, W). Sample i draws from
/// the substream (seed, i) and results are reduced with a fixed pairwise
/// order, so the value is bit-identical for any OpenMP thread count.
double entangling_power_mc(const EvolutionOperator& w, int samples, std::uint64_t seed);

/// Serial reference for entangling_power_mc: builds each history through
/// the history module and evaluates quadratic_entanglement directly.
/// Same substreams and reduction order; kept for tests and the benchmark.
double entangling_power_mc_serial(const EvolutionOperator& w, int samples, std::uint64_t seed);

/// |entangling_power_mc - (d_S/(d_S+1)) E2(W)| with d_S = 2.
double verify_entangling_relation(const EvolutionOperator& w, int samples, std::uint64_t seed);

}  // namespace polhist

#endif  // POLHIST_EVOLUTION_HPP
