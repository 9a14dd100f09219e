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
#ifndef POLHIST_HISTORY_HPP
#define POLHIST_HISTORY_HPP

#include <utility>
#include <vector>

#include "polhist/mueller.hpp"
#include "polhist/polarization.hpp"

namespace polhist {

/// Ordered step unitaries U_{t,t-1} (t = 1..N-1) with the wraparound
/// U_{0,N-1} last. The cyclic product steps[N-1]...steps[0] is measured at
/// construction: its distance from e^{i gamma} I is recorded as
/// cyclic_deviation() and the phase gamma as cyclic_phase().
class StepUnitaries {
public:
    explicit StepUnitaries(std::vector<Unitary2> steps);

    int size() const { return static_cast<int>(steps_.size()); }
    const Unitary2& operator[](int i) const { return steps_[static_cast<std::size_t>(i)]; }
    const std::vector<Unitary2>& steps() const { return steps_; }

    double cyclic_deviation() const { return cyclic_deviation_; }
    double cyclic_phase() const { return cyclic_phase_; }

private:
    std::vector<Unitary2> steps_;
    double cyclic_deviation_;
    double cyclic_phase_;
};

/// Discrete history state (1/sqrt(N)) sum_t |psi_t>|t>: N conditional pure
/// system states with uniform clock weights. Slots keep the relative
/// phases they were constructed with (needed for the eigenstate check);
/// conditional_state() canonicalizes the phase on the way out.
class HistoryState {
public:
    /// From canonical pure states (relative phases as given by each state).
    static HistoryState from_states(const std::vector<PureQubit>& states);

    int n_clock() const { return static_cast<int>(slots_.size()); }

    /// |psi_t> = sqrt(N) <t|Psi>, canonical phase. Throws on bad index.
    PureQubit conditional_state(int t) const;

    /// Joint 2N-amplitude vector; amplitude of |s>|t> at index 2 t + s.
    std::vector<complexd> joint_vector() const;

    /// Raw (phase-preserving) slot amplitudes, |<slot|slot>| = 1.
    const std::array<complexd, 2>& slot(int t) const;

private:
    friend HistoryState make_history(const PureQubit&, const std::vector<Unitary2>&);
    friend HistoryState make_history_from_steps(const PureQubit&, const StepUnitaries&, int);

    explicit HistoryState(std::vector<std::array<complexd, 2>> slots)
        : slots_(std::move(slots)) {}

    std::vector<std::array<complexd, 2>> slots_;
};

struct EntropyCurve {
    struct Point {
        int n;
        double von_neumann_bits;
        double quadratic;
    };
    std::vector<Point> points;
};

/// History with states[t] = U_t |psi0> and uniform clock amplitudes.
HistoryState make_history(const PureQubit& psi0, const std::vector<Unitary2>& unitaries);

/// History generated by step unitaries on the eigenvalue branch k:
/// states[t] = e^{-i(2 pi k + gamma) t / N} U_{t,t-1}...U_{1,0} |psi0>,
/// where gamma is the recorded cyclic phase. The result is an exact
/// eigenstate of the cyclic step operator (see verify_eigenstate).
/// Throws CyclicConditionViolated when the cyclic deviation exceeds 1e-9.
HistoryState make_history_from_steps(const PureQubit& psi0, const StepUnitaries& steps, int k);

/// Reduced system state of the partial history over the first n slots:
/// rho_S = (1/n) sum_{t<n} |psi_t><psi_t|.
QubitState reduced_system(const HistoryState& psi, int n);

/// E_n(S,T) in bits: von Neumann entropy of reduced_system(psi, n).
double entanglement_entropy(const HistoryState& psi, int n);

/// Quadratic (linear) entanglement entropy of the first n slots, computed
/// by two independent routes, 2(1 - Tr rho_S^2) and the pairwise-overlap
/// sum, which are asserted equal to 1e-10 before returning.
double quadratic_entanglement(const HistoryState& psi, int n);

/// E_n and quadratic E_n for n = 1..N.
EntropyCurve entropy_curve(const HistoryState& psi);

/// Closed-form eigenvalues {p+, p-} of the reduced state of an alternating
/// two-state history with overlap c over n slots:
///   n even: (1 +- c)/2
///   n odd : (1 +- sqrt(c^2 (1 - 1/n^2) + 1/n^2))/2.
std::pair<double, double> two_state_probabilities(double c, int n);

/// Time-averaged Pauli expectation, computed by both routes, sequential
/// (1/N) sum_t <psi_t|sigma|psi_t> and global <Psi|sigma x I|Psi>, which
/// are asserted equal to 1e-12 before the common value is returned.
double time_average(const HistoryState& psi, Axis axis);

/// Residual |U_step Psi - e^{i phi_k} Psi| with U_step the cyclic step
/// operator of `steps` and phi_k = (2 pi k + gamma)/N.
double verify_eigenstate(const HistoryState& psi, const StepUnitaries& steps, int k);

}  // namespace polhist

#endif  // POLHIST_HISTORY_HPP
