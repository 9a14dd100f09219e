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
#include "polhist/history.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace polhist {

namespace {

constexpr double kCyclicTol = 1e-9;

std::array<complexd, 2> apply2(const Mat2c& u, const std::array<complexd, 2>& v) {
    return {u(0, 0) * v[0] + u(0, 1) * v[1], u(1, 0) * v[0] + u(1, 1) * v[1]};
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

/// Eigenvalues of a trace-1 Hermitian 2x2, clamped into [0, 1] after a
/// -1e-12 numerical floor.
std::array<double, 2> clamped_eigenvalues(const QubitState& rho) {
    auto ev = rho.eigenvalues();
    for (double& v : ev) {
        if (v < -1e-12)
            throw ValidationError("reduced-state eigenvalue " + std::to_string(v) +
                                  " below the numerical floor");
        v = std::min(std::max(v, 0.0), 1.0);
    }
    return ev;
}

void check_slot_range(const HistoryState& psi, int n) {
    if (n < 1 || n > psi.n_clock())
        throw ValidationError("slot count " + std::to_string(n) + " outside 1.." +
                              std::to_string(psi.n_clock()));
}

}  // namespace

StepUnitaries::StepUnitaries(std::vector<Unitary2> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw ValidationError("step list must be non-empty");
    Mat2c product = Mat2c::identity();
    for (const Unitary2& u : steps_) product = u.matrix() * product;
    const complexd tr = product.trace();
    cyclic_phase_ = std::abs(tr) > 1e-12 ? std::arg(tr) : 0.0;
    const complexd phase = std::exp(complexd(0.0, cyclic_phase_));
    cyclic_deviation_ = frobenius_norm(product - phase * Mat2c::identity());
}

HistoryState HistoryState::from_states(const std::vector<PureQubit>& states) {
    if (states.empty()) throw ValidationError("history needs at least one state");
    std::vector<std::array<complexd, 2>> slots;
    slots.reserve(states.size());
    for (const PureQubit& s : states) slots.push_back({s.a(), s.b()});
    return HistoryState(std::move(slots));
}

PureQubit HistoryState::conditional_state(int t) const {
    const auto& s = slot(t);
    return PureQubit(s[0], s[1]);
}

std::vector<complexd> HistoryState::joint_vector() const {
    const double w = 1.0 / std::sqrt(static_cast<double>(slots_.size()));
    std::vector<complexd> joint(2 * slots_.size());
    for (std::size_t t = 0; t < slots_.size(); ++t) {
        joint[2 * t] = w * slots_[t][0];
        joint[2 * t + 1] = w * slots_[t][1];
    }
    return joint;
}

const std::array<complexd, 2>& HistoryState::slot(int t) const {
    if (t < 0 || t >= n_clock())
        throw ValidationError("time index " + std::to_string(t) + " outside 0.." +
                              std::to_string(n_clock() - 1));
    return slots_[static_cast<std::size_t>(t)];
}

HistoryState make_history(const PureQubit& psi0, const std::vector<Unitary2>& unitaries) {
    if (unitaries.empty()) throw ValidationError("unitary list must be non-empty");
    const std::array<complexd, 2> v0{psi0.a(), psi0.b()};
    std::vector<std::array<complexd, 2>> slots;
    slots.reserve(unitaries.size());
    for (const Unitary2& u : unitaries) slots.push_back(apply2(u.matrix(), v0));
    return HistoryState(std::move(slots));
}

HistoryState make_history_from_steps(const PureQubit& psi0, const StepUnitaries& steps,
                                     int k) {
    const int n = steps.size();
    if (k < 0 || k >= n)
        throw ValidationError("eigenvalue branch k = " + std::to_string(k) +
                              " outside 0.." + std::to_string(n - 1));
    if (steps.cyclic_deviation() > kCyclicTol) {
        std::ostringstream os;
        os << "cyclic condition violated: |U_{0,N-1}...U_{1,0} - e^{i gamma} I| = "
           << steps.cyclic_deviation();
        throw CyclicConditionViolated(os.str(), steps.cyclic_deviation());
    }

    // Branch phase per step; the recorded cyclic phase gamma is spread
    // uniformly so the history is an exact eigenstate of the step operator.
    const double phi = (2.0 * std::numbers::pi * k + steps.cyclic_phase()) / n;

    std::vector<std::array<complexd, 2>> slots;
    slots.reserve(static_cast<std::size_t>(n));
    std::array<complexd, 2> v{psi0.a(), psi0.b()};
    slots.push_back(v);
    for (int t = 1; t < n; ++t) {
        v = apply2(steps[t - 1].matrix(), v);
        const complexd phase = std::exp(complexd(0.0, -phi * t));
        slots.push_back({phase * v[0], phase * v[1]});
    }
    return HistoryState(std::move(slots));
}

QubitState reduced_system(const HistoryState& psi, int n) {
    check_slot_range(psi, n);
    Mat2c rho;
    for (int t = 0; t < n; ++t) {
        const auto& s = psi.slot(t);
        rho(0, 0) += s[0] * std::conj(s[0]);
        rho(0, 1) += s[0] * std::conj(s[1]);
        rho(1, 0) += s[1] * std::conj(s[0]);
        rho(1, 1) += s[1] * std::conj(s[1]);
    }
    const double w = 1.0 / n;
    for (auto& v : rho.a) v *= w;
    // Scrub rounding asymmetry so the QubitState invariants hold exactly.
    rho(0, 0) = complexd(rho(0, 0).real(), 0.0);
    rho(1, 1) = complexd(rho(1, 1).real(), 0.0);
    const complexd off = 0.5 * (rho(0, 1) + std::conj(rho(1, 0)));
    rho(0, 1) = off;
    rho(1, 0) = std::conj(off);
    return QubitState(rho);
}

double entanglement_entropy(const HistoryState& psi, int n) {
    const auto ev = clamped_eigenvalues(reduced_system(psi, n));
    return -(xlog2x(ev[0]) + xlog2x(ev[1]));
}

double quadratic_entanglement(const HistoryState& psi, int n) {
    check_slot_range(psi, n);
    // Route (a): purity of the reduced state.
    const double via_purity = 2.0 * (1.0 - reduced_system(psi, n).purity());
    // Route (b): pairwise-overlap sum.
    double overlap_sq = 0.0;
    for (int t = 0; t < n; ++t) {
        const auto& st = psi.slot(t);
        for (int u = t + 1; u < n; ++u) {
            const auto& su = psi.slot(u);
            overlap_sq += std::norm(std::conj(st[0]) * su[0] + std::conj(st[1]) * su[1]);
        }
    }
    const double nn = static_cast<double>(n);
    const double via_overlaps = (2.0 / nn) * (nn - 1.0 - (2.0 / nn) * overlap_sq);
    if (std::abs(via_purity - via_overlaps) > 1e-10)
        throw ValidationError("quadratic-entropy routes disagree: purity " +
                              std::to_string(via_purity) + " vs overlaps " +
                              std::to_string(via_overlaps));
    return via_purity;
}

EntropyCurve entropy_curve(const HistoryState& psi) {
    EntropyCurve curve;
    curve.points.reserve(static_cast<std::size_t>(psi.n_clock()));
    for (int n = 1; n <= psi.n_clock(); ++n)
        curve.points.push_back({n, entanglement_entropy(psi, n), quadratic_entanglement(psi, n)});
    return curve;
}

std::pair<double, double> two_state_probabilities(double c, int n) {
    if (c < 0.0 || c > 1.0)
        throw ValidationError("overlap c must be in [0, 1], got " + std::to_string(c));
    if (n < 1) throw ValidationError("n must be >= 1");
    double spread;
    if (n % 2 == 0) {
        spread = c;
    } else {
        const double inv_nsq = 1.0 / (static_cast<double>(n) * n);
        spread = std::sqrt(c * c * (1.0 - inv_nsq) + inv_nsq);
    }
    return {0.5 * (1.0 + spread), 0.5 * (1.0 - spread)};
}

double time_average(const HistoryState& psi, Axis axis) {
    const int mu = axis == Axis::X ? 1 : axis == Axis::Y ? 2 : 3;
    const Mat2c& sigma = pauli(mu);
    const int n = psi.n_clock();

    // Sequential route: average the per-slot expectations.
    double sequential = 0.0;
    for (int t = 0; t < n; ++t) {
        const auto& s = psi.slot(t);
        const complexd sv0 = sigma(0, 0) * s[0] + sigma(0, 1) * s[1];
        const complexd sv1 = sigma(1, 0) * s[0] + sigma(1, 1) * s[1];
        sequential += (std::conj(s[0]) * sv0 + std::conj(s[1]) * sv1).real();
    }
    sequential /= n;

    // Global route: one expectation in the joint state.
    const std::vector<complexd> joint = psi.joint_vector();
    complexd global = 0.0;
    for (int t = 0; t < n; ++t) {
        const complexd j0 = joint[static_cast<std::size_t>(2 * t)];
        const complexd j1 = joint[static_cast<std::size_t>(2 * t + 1)];
        global += std::conj(j0) * (sigma(0, 0) * j0 + sigma(0, 1) * j1);
        global += std::conj(j1) * (sigma(1, 0) * j0 + sigma(1, 1) * j1);
    }

    if (std::abs(sequential - global.real()) > 1e-12)
        throw ValidationError("time-average routes disagree: sequential " +
                              std::to_string(sequential) + " vs global " +
                              std::to_string(global.real()));
    return sequential;
}

double verify_eigenstate(const HistoryState& psi, const StepUnitaries& steps, int k) {
    const int n = psi.n_clock();
    if (steps.size() != n)
        throw ValidationError("step count " + std::to_string(steps.size()) +
                              " does not match clock dimension " + std::to_string(n));
    const std::vector<complexd> joint = psi.joint_vector();

    // (U_step Psi) slot t = U_{t,t-1} (Psi slot t-1), indices cyclic.
    std::vector<complexd> shifted(joint.size());
    for (int t = 0; t < n; ++t) {
        const int prev = (t + n - 1) % n;
        const Mat2c& u = steps[prev].matrix();
        const complexd p0 = joint[static_cast<std::size_t>(2 * prev)];
        const complexd p1 = joint[static_cast<std::size_t>(2 * prev + 1)];
        shifted[static_cast<std::size_t>(2 * t)] = u(0, 0) * p0 + u(0, 1) * p1;
        shifted[static_cast<std::size_t>(2 * t + 1)] = u(1, 0) * p0 + u(1, 1) * p1;
    }

    const double phi = (2.0 * std::numbers::pi * k + steps.cyclic_phase()) / n;
    const complexd eig = std::exp(complexd(0.0, phi));
    double dev_sq = 0.0;
    for (std::size_t i = 0; i < joint.size(); ++i) dev_sq += std::norm(shifted[i] - eig * joint[i]);
    return std::sqrt(dev_sq);
}

}  // namespace polhist
