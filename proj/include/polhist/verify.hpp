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
#ifndef POLHIST_VERIFY_HPP
#define POLHIST_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polhist/calibration.hpp"

namespace polhist {

/// One line of the self-check battery.
struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifyOptions {
    bool verbose = false;
    std::uint64_t seed = 20260810;
};

/// Runs the full property battery over the given measured trajectories
/// (normally bundled_fixtures()): conversion round trips, SU(2)/SO(3)
/// round trips, decomposition fixed points, eigenstate residuals,
/// two-state probabilities vs. diagonalization, time-average duality,
/// fixture validity, average order-invariance and document round trips.
/// Deterministic for a fixed seed.
std::vector<CheckResult> run_verification(const std::vector<MeasuredTrajectory>& fixtures,
                                          const VerifyOptions& options = {});

/// True when every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace polhist

#endif  // POLHIST_VERIFY_HPP
