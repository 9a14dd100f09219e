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
#ifndef POLHIST_CALIBRATION_HPP
#define POLHIST_CALIBRATION_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "polhist/evolution.hpp"
#include "polhist/history.hpp"
#include "polhist/mueller.hpp"

// Calibration/trajectory documents: a line-based, self-describing text
// format ("# polhist document v1") with [metadata], [calibration],
// [trajectory] and [measured] sections. Numbers are written with 17
// significant digits via to_chars, so write -> load -> write round-trips
// byte-identically.

namespace polhist {

enum class Physicality { Strict, Lenient };

/// Shortest-unambiguous decimal form (to_chars, general, 17 significant
/// digits): locale-independent and bit-exact on the way back in.
std::string format_number(double v);

/// Gray level -> Mueller matrix map, sorted ascending by gray level.
struct CalibrationTable {
    struct Entry {
        int gray_level;
        MuellerMatrix matrix;
    };

    std::string source;
    std::string wavelength;
    std::vector<Entry> entries;
    std::vector<std::string> warnings;

    const MuellerMatrix* find(int gray_level) const;
    /// Like find, but throws MissingGrayLevel.
    const MuellerMatrix& at(int gray_level) const;
};

/// A trajectory to simulate: initial Stokes state plus the gray-level
/// sequence selecting one calibration matrix per time step.
struct TrajectorySpec {
    std::string label;
    StokesVector initial;
    std::vector<int> gray_levels;
};

/// A measured trajectory: per step, the gray level and the measured Pauli
/// means (<sigma_x>, <sigma_y>, <sigma_z>). Step norms must be <= 1 + 1e-6.
struct MeasuredTrajectory {
    struct Step {
        int gray_level;
        double sx, sy, sz;

        BlochVector bloch() const { return BlochVector(sx, sy, sz); }
    };

    std::string label;
    StokesVector initial;
    std::vector<Step> steps;
};

/// Throws ValidationError when a step's Pauli-mean norm exceeds 1 + 1e-6.
void validate(const MeasuredTrajectory& m);

CalibrationTable parse_calibration(const std::string& text,
                                   Physicality mode = Physicality::Strict);
CalibrationTable load_calibration(const std::filesystem::path& path,
                                  Physicality mode = Physicality::Strict);
std::string write_calibration(const CalibrationTable& table);
void save_calibration(const std::filesystem::path& path, const CalibrationTable& table);

std::vector<TrajectorySpec> parse_trajectories(const std::string& text);
std::vector<TrajectorySpec> load_trajectories(const std::filesystem::path& path);
std::string write_trajectories(const std::vector<TrajectorySpec>& specs);
void save_trajectories(const std::filesystem::path& path,
                       const std::vector<TrajectorySpec>& specs);

std::vector<MeasuredTrajectory> parse_measured(const std::string& text);
std::vector<MeasuredTrajectory> load_measured(const std::filesystem::path& path);
std::string write_measured(const std::vector<MeasuredTrajectory>& trajectories);
void save_measured(const std::filesystem::path& path,
                   const std::vector<MeasuredTrajectory>& trajectories);

/// Per gray level in the spec: lu_chipman -> retarder -> unitary, ordered
/// as in the spec. Throws MissingGrayLevel; SingularDiattenuator
/// propagates from the decomposition.
EvolutionOperator resolve_unitaries(const TrajectorySpec& spec, const CalibrationTable& table);

/// History state whose slots are the purified measured Bloch vectors, in
/// listed order. BelowPurityThreshold identifies the offending step.
HistoryState trajectory_to_history(const MeasuredTrajectory& m, double min_norm = 0.9);

}  // namespace polhist

#endif  // POLHIST_CALIBRATION_HPP
