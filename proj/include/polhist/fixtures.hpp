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
#ifndef POLHIST_FIXTURES_HPP
#define POLHIST_FIXTURES_HPP

#include <vector>

#include "polhist/calibration.hpp"

namespace polhist {

/// The seven measured SLM trajectories bundled with the library (two,
/// four and eight time-step runs over gray levels 0..40, all starting
/// from Stokes (1.000, 0.040, 0.951, -0.026)). Values are embedded
/// exactly as measured, four decimal places, no re-rounding.
std::vector<MeasuredTrajectory> bundled_fixtures();

/// bundled_fixtures()[number-1] for trajectory numbers 1..7.
MeasuredTrajectory bundled_fixture(int number);

}  // namespace polhist

#endif  // POLHIST_FIXTURES_HPP
