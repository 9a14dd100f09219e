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
#include "polhist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "polhist/evolution.hpp"
#include "polhist/fixtures.hpp"
#include "polhist/rng.hpp"

namespace polhist {

namespace {

BlochVector random_ball_vector(Rng& rng) {
    const double z = rng.next_symmetric();
    const double phi = 2.0 * std::numbers::pi * rng.next_unit();
    const double radius = std::cbrt(rng.next_unit());
    const double s = std::sqrt(std::max(1.0 - z * z, 0.0));
    return BlochVector(radius * s * std::cos(phi), radius * s * std::sin(phi), radius * z);
}


using CheckFn = std::function<std::string()>;  // returns detail, throws on failure

void run_check(std::vector<CheckResult>& results, const std::string& name, const CheckFn& fn) {
    try {
        results.push_back({name, true, fn()});
    } catch (const std::exception& e) {
        results.push_back({name, false, e.what()});
    }
}

}  // namespace

std::vector<CheckResult> run_verification(const std::vector<MeasuredTrajectory>& fixtures,
                                          const VerifyOptions& options) {
    std::vector<CheckResult> results;
    const std::uint64_t seed = options.seed;

    run_check(results, "bloch-density round trip", [&] {
        Rng rng(seed, 1);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const BlochVector r = random_ball_vector(rng);
            const BlochVector back = density_to_bloch(bloch_to_density(r));
            worst = std::max({worst, std::abs(back.x() - r.x()), std::abs(back.y() - r.y()),
                              std::abs(back.z() - r.z())});
        }
        if (worst > 1e-12) throw Error("round-trip error " + std::to_string(worst));
        return "max round-trip error " + format_number(worst);
    });

    run_check(results, "su2-so3 round trip", [&] {
        Rng rng(seed, 2);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const Unitary2 u = haar_random_unitary(rng);
            const Unitary2 back = retarder_to_unitary(unitary_to_rotation(u));
            worst = std::max(worst, projective_distance(u, back));
        }
        if (worst > 1e-10) throw Error("projective distance " + std::to_string(worst));
        return "max projective distance " + format_number(worst);
    });

    run_check(results, "lu-chipman retarder fixed point", [&] {
        Rng rng(seed, 3);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Unitary2 u = haar_random_unitary(rng);
            const RetarderMatrix r = unitary_to_rotation(u);
            const LuChipmanFactors f = lu_chipman(r.mueller());
            worst = std::max(worst, f.residual);
            Mat3 diff = f.retarder.block();
            for (std::size_t j = 0; j < 9; ++j) diff.a[j] -= r.block().a[j];
            worst = std::max(worst, frobenius_norm(diff));
        }
        if (worst > 1e-12) throw Error("fixed-point error " + std::to_string(worst));
        return "max fixed-point error " + format_number(worst);
    });

    run_check(results, "eigenstate residual", [&] {
        Rng rng(seed, 4);
        double worst = 0.0;
        for (int n = 2; n <= 6; ++n) {
            std::vector<Unitary2> steps;
            Mat2c product = Mat2c::identity();
            for (int t = 0; t < n - 1; ++t) {
                steps.push_back(haar_random_unitary(rng));
                product = steps.back().matrix() * product;
            }
            steps.push_back(Unitary2(product.adjoint()));
            const StepUnitaries cyc(steps);
            const PureQubit psi0 = [&] {
                Rng sub(seed, 40 + static_cast<std::uint64_t>(n));
                return haar_random_pure(sub);
            }();
            for (int k = 0; k < n; ++k) {
                const HistoryState h = make_history_from_steps(psi0, cyc, k);
                worst = std::max(worst, verify_eigenstate(h, cyc, k));
            }
        }
        if (worst > 1e-12) throw Error("residual " + std::to_string(worst));
        return "max residual " + format_number(worst);
    });

    run_check(results, "two-state probabilities vs diagonalization", [&] {
        double worst = 0.0;
        for (int ci = 0; ci <= 10; ++ci) {
            const double c = 0.1 * ci;
            const PureQubit psi0 = PureQubit::horizontal();
            const PureQubit psi1 = PureQubit(complexd(c, 0.0),
                                             complexd(std::sqrt(1.0 - c * c), 0.0));
            std::vector<PureQubit> states;
            for (int t = 0; t < 32; ++t) states.push_back(t % 2 == 0 ? psi0 : psi1);
            const HistoryState h = HistoryState::from_states(states);
            for (int n = 1; n <= 32; ++n) {
                const auto [p_plus, p_minus] = two_state_probabilities(c, n);
                const auto ev = reduced_system(h, n).eigenvalues();
                worst = std::max({worst, std::abs(ev[0] - p_plus), std::abs(ev[1] - p_minus)});
            }
        }
        if (worst > 1e-12) throw Error("max deviation " + std::to_string(worst));
        return "max deviation " + format_number(worst);
    });

    run_check(results, "time-average duality", [&] {
        // time_average itself asserts the two routes agree to 1e-12.
        Rng rng(seed, 5);
        int evaluated = 0;
        for (const auto& m : fixtures) {
            const HistoryState h = trajectory_to_history(m);
            for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
                (void)time_average(h, axis);
                ++evaluated;
            }
        }
        for (int i = 0; i < 50; ++i) {
            std::vector<PureQubit> states;
            const int n = 2 + static_cast<int>(rng.next_u64() % 7);
            for (int t = 0; t < n; ++t) states.push_back(haar_random_pure(rng));
            const HistoryState h = HistoryState::from_states(states);
            for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
                (void)time_average(h, axis);
                ++evaluated;
            }
        }
        return std::to_string(evaluated) + " sequential/global pairs agree to 1e-12";
    });

    run_check(results, "fixture validity", [&] {
        for (const auto& m : fixtures) {
            validate(m);
            (void)trajectory_to_history(m);  // purifiable at the default threshold
        }
        return std::to_string(fixtures.size()) + " trajectories valid and purifiable";
    });

    run_check(results, "fixture entropies", [&] {
        std::ostringstream detail;
        for (std::size_t i = 0; i < fixtures.size(); ++i) {
            const HistoryState h = trajectory_to_history(fixtures[i]);
            const EntropyCurve curve = entropy_curve(h);
            for (const auto& p : curve.points) {
                const double bound = std::min(1.0, std::log2(std::max(p.n, 1)) + 1e-12);
                if (p.von_neumann_bits < -1e-12 || p.von_neumann_bits > bound + 1e-9)
                    throw Error("entropy bound violated for " + fixtures[i].label);
            }
            if (options.verbose) {
                if (i > 0) detail << "; ";
                detail << fixtures[i].label << " E_N = "
                       << format_number(curve.points.back().von_neumann_bits);
            }
        }
        if (!options.verbose)
            return "0 <= E_n <= min(1, log2 n) on all " + std::to_string(fixtures.size()) +
                   " trajectories";
        return detail.str();
    });

    run_check(results, "average order-invariance", [&] {
        double worst = 0.0;
        for (const auto& m : fixtures) {
            if (m.steps.size() < 2) continue;
            std::vector<PureQubit> states;
            for (const auto& s : m.steps) states.push_back(purify(s.bloch()));
            std::vector<PureQubit> reversed(states.rbegin(), states.rend());
            const HistoryState a = HistoryState::from_states(states);
            const HistoryState b = HistoryState::from_states(reversed);
            for (Axis axis : {Axis::X, Axis::Y, Axis::Z})
                worst = std::max(worst, std::abs(time_average(a, axis) - time_average(b, axis)));
            worst = std::max(worst, std::abs(entanglement_entropy(a, a.n_clock()) -
                                             entanglement_entropy(b, b.n_clock())));
        }
        if (worst > 1e-12) throw Error("order dependence " + std::to_string(worst));
        return "max order dependence " + format_number(worst);
    });

    run_check(results, "document round trip", [&] {
        // Measured documents.
        if (!fixtures.empty()) {
            const std::string once = write_measured(fixtures);
            const std::string twice = write_measured(parse_measured(once));
            if (once != twice) throw Error("measured document round trip not byte-exact");
        }
        // Calibration documents over synthetic retarders.
        Rng rng(seed, 6);
        CalibrationTable table;
        table.source = "verification synthetic retarders";
        table.wavelength = "660nm";
        for (int g = 0; g <= 10; g += 5) {
            const Unitary2 u = haar_random_unitary(rng);
            table.entries.push_back({g, unitary_to_rotation(u).mueller()});
        }
        const std::string once = write_calibration(table);
        const CalibrationTable loaded = parse_calibration(once);
        const std::string twice = write_calibration(loaded);
        if (once != twice) throw Error("calibration document round trip not byte-exact");
        for (std::size_t i = 0; i < table.entries.size(); ++i)
            for (std::size_t j = 0; j < 16; ++j)
                if (table.entries[i].matrix.matrix().a[j] != loaded.entries[i].matrix.matrix().a[j])
                    throw Error("calibration matrix bits changed in round trip");
        return "measured and calibration documents round-trip byte-exactly";
    });

    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace polhist
