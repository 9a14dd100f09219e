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
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "polhist/calibration.hpp"
#include "polhist/fixtures.hpp"
#include "polhist/rng.hpp"

using namespace polhist;

namespace {

std::string identity_table_text() {
    std::ostringstream os;
    os << "# polhist document v1\n\n[metadata]\nsource = unit test\n\n[calibration]\n";
    for (int g : {0, 30}) {
        os << "gray = " << g << "\n";
        os << "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
    }
    return os.str();
}

/// Synthetic retarder table: rotation angle theta(g) = g * pi / 300 about
/// a fixed Stokes axis, built from the Rodrigues oracle.
CalibrationTable synthetic_retarder_table(const std::vector<int>& levels) {
    CalibrationTable table;
    table.source = "synthetic monotone retardance";
    table.wavelength = "660nm";
    for (int g : levels) {
        const Mat3 rot = oracles::rodrigues({0, 1, 0}, g * std::numbers::pi / 300.0);
        table.entries.push_back({g, MuellerMatrix(oracles::retarder_mueller(rot))});
    }
    return table;
}

}  // namespace

TEST_SUITE("calibration") {

TEST_CASE("parse_calibration basics") {
    const CalibrationTable table = parse_calibration(identity_table_text());
    CHECK(table.entries.size() == 2);
    CHECK(table.source == "unit test");
    CHECK(table.find(0) != nullptr);
    CHECK(table.find(30) != nullptr);
    CHECK(table.find(5) == nullptr);
    CHECK_THROWS_AS(table.at(5), MissingGrayLevel);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_calibration("gray = 0\n"), ParseError);  // no header
    CHECK_THROWS_AS(parse_calibration("# polhist document v1\n[calibration]\ngray = 0\n1 0 0\n"),
                    ParseError);  // short row
    CHECK_THROWS_AS(parse_calibration("# polhist document v1\n[calibration]\n1 0 0 0\n"),
                    ParseError);  // row before gray
    CHECK_THROWS_AS(parse_calibration("# polhist document v1\n[metadata]\nsource = x\n"),
                    ParseError);  // no calibration section

    std::string dup = identity_table_text();
    dup += "gray = 30\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
    CHECK_THROWS_AS(parse_calibration(dup), DuplicateGrayLevel);

    // m00 = 0 violates the matrix invariants in any mode.
    const std::string zero_m00 =
        "# polhist document v1\n[calibration]\ngray = 0\n"
        "0 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
    CHECK_THROWS_AS(parse_calibration(zero_m00), UnphysicalMatrix);
    CHECK_THROWS_AS(parse_calibration(zero_m00, Physicality::Lenient), UnphysicalMatrix);
}

TEST_CASE("strict vs lenient physicality") {
    // Polarizance + gain combination passes entry bounds but not the
    // cone screen.
    const std::string text =
        "# polhist document v1\n[calibration]\ngray = 0\n"
        "1 0 0 0\n0.6 0.6 0 0\n0 0 1 0\n0 0 0 1\n";
    CHECK_THROWS_AS(parse_calibration(text), UnphysicalMatrix);
    const CalibrationTable lenient = parse_calibration(text, Physicality::Lenient);
    CHECK(lenient.entries.size() == 1);
    REQUIRE(lenient.warnings.size() >= 1);
    CHECK(lenient.warnings[0].find("gray level 0") != std::string::npos);
}

TEST_CASE("52-level synthetic table round trips and decomposes to itself") {
    std::vector<int> levels;
    for (int g = 0; g <= 255; g += 5) levels.push_back(g);
    REQUIRE(levels.size() == 52);
    const CalibrationTable table = synthetic_retarder_table(levels);

    const std::string once = write_calibration(table);
    const CalibrationTable loaded = parse_calibration(once);
    CHECK(loaded.entries.size() == 52);
    CHECK(write_calibration(loaded) == once);  // byte-exact round trip
    for (std::size_t i = 0; i < loaded.entries.size(); ++i)
        for (std::size_t j = 0; j < 16; ++j)
            CHECK(loaded.entries[i].matrix.matrix().a[j] ==
                  table.entries[i].matrix.matrix().a[j]);  // bit-exact values

    // Levels above the usable modulation range are ingested with a warning.
    CHECK_FALSE(loaded.warnings.empty());

    for (const auto& e : loaded.entries) {
        const LuChipmanFactors f = lu_chipman(e.matrix);
        CHECK(f.residual <= 1e-12);
        Mat3 diff = f.retarder.block();
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) diff(r, c) -= e.matrix(r + 1, c + 1);
        CHECK(frobenius_norm(diff) <= 1e-12);
    }

    // Full pipeline reproduction: resolve the unitaries for every level,
    // then map them back to rotations; each block must match its source.
    TrajectorySpec all_levels{"all", StokesVector(1, 0, 0.9, 0), levels};
    const EvolutionOperator w = resolve_unitaries(all_levels, loaded);
    for (int i = 0; i < w.size(); ++i) {
        const Mat3 back = unitary_to_rotation(w[i]).block();
        const MuellerMatrix& src = loaded.entries[static_cast<std::size_t>(i)].matrix;
        double dev = 0.0;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                dev = std::max(dev, std::abs(back(r, c) - src(r + 1, c + 1)));
        CHECK(dev <= 1e-10);
    }
}

TEST_CASE("resolve_unitaries") {
    SUBCASE("identity table yields identity unitaries") {
        const CalibrationTable table = parse_calibration(identity_table_text());
        const TrajectorySpec spec{"s", StokesVector(1, 0, 0.9, 0), {0, 30, 0, 30}};
        const EvolutionOperator w = resolve_unitaries(spec, table);
        REQUIRE(w.size() == 4);
        for (int i = 0; i < 4; ++i)
            CHECK(projective_distance(w[i], Unitary2::identity()) <= 1e-12);
        // Table lookups are deterministic: repeated levels give equal bits.
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(w[0].matrix().a[j] == w[2].matrix().a[j]);
            CHECK(w[1].matrix().a[j] == w[3].matrix().a[j]);
        }
    }

    SUBCASE("missing level") {
        const CalibrationTable table = parse_calibration(identity_table_text());
        const TrajectorySpec spec{"s", StokesVector(1, 0, 0.9, 0), {0, 7}};
        CHECK_THROWS_AS(resolve_unitaries(spec, table), MissingGrayLevel);
    }

    SUBCASE("monotone retardance maps to monotone rotation angles") {
        const std::vector<int> levels{0, 10, 15, 20, 25, 30, 35, 40};
        const CalibrationTable table = synthetic_retarder_table(levels);
        const TrajectorySpec spec{"traj7-shape", StokesVector(1, 0, 0.9, 0), levels};
        const EvolutionOperator w = resolve_unitaries(spec, table);
        REQUIRE(w.size() == 8);
        // Angle oracle: canonical SU(2) has trace 2 cos(theta/2) >= 0.
        double prev = -1.0;
        for (int i = 0; i < w.size(); ++i) {
            const double half_trace =
                std::clamp(w[i].matrix().trace().real() / 2.0, -1.0, 1.0);
            const double angle = 2.0 * std::acos(half_trace);
            const double expected = levels[static_cast<std::size_t>(i)] *
                                    std::numbers::pi / 300.0;
            CHECK(angle == doctest::Approx(expected).epsilon(1e-9));
            CHECK(angle > prev);
            prev = angle;
        }
    }

    SUBCASE("polarizer propagates SingularDiattenuator") {
        CalibrationTable table;
        Mat4 pol;
        pol(0, 0) = 0.5;
        pol(0, 1) = 0.5;
        pol(1, 0) = 0.5;
        pol(1, 1) = 0.5;
        table.entries.push_back({0, MuellerMatrix(pol)});
        const TrajectorySpec spec{"p", StokesVector(1, 0, 0.9, 0), {0}};
        CHECK_THROWS_AS(resolve_unitaries(spec, table), SingularDiattenuator);
    }
}

TEST_CASE("trajectory documents round trip") {
    std::vector<TrajectorySpec> specs;
    specs.push_back({"demo", StokesVector(1.000, 0.040, 0.951, -0.026), {0, 30, 0, 30}});
    specs.push_back({"sweep", StokesVector(1, 0, 0.9, 0.1), {0, 10, 15, 20, 25, 30, 35, 40}});
    const std::string once = write_trajectories(specs);
    const auto loaded = parse_trajectories(once);
    REQUIRE(loaded.size() == 2);
    CHECK(loaded[0].label == "demo");
    CHECK(loaded[0].initial.s2() == 0.951);
    CHECK(loaded[1].gray_levels.size() == 8);
    CHECK(write_trajectories(loaded) == once);
}

TEST_CASE("measured documents round trip") {
    const auto fixtures = bundled_fixtures();
    const std::string once = write_measured(fixtures);
    const auto loaded = parse_measured(once);
    REQUIRE(loaded.size() == fixtures.size());
    CHECK(write_measured(loaded) == once);
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        CHECK(loaded[i].label == fixtures[i].label);
        REQUIRE(loaded[i].steps.size() == fixtures[i].steps.size());
        for (std::size_t s = 0; s < fixtures[i].steps.size(); ++s) {
            CHECK(loaded[i].steps[s].gray_level == fixtures[i].steps[s].gray_level);
            CHECK(loaded[i].steps[s].sx == fixtures[i].steps[s].sx);
            CHECK(loaded[i].steps[s].sy == fixtures[i].steps[s].sy);
            CHECK(loaded[i].steps[s].sz == fixtures[i].steps[s].sz);
        }
    }

    // Out-of-ball steps are rejected at parse time.
    const std::string bad =
        "# polhist document v1\n[measured]\nlabel = bad\n"
        "initial = 1 0 0.9 0\nstep = 0 0.9 0.9 0.9\n";
    CHECK_THROWS_AS(parse_measured(bad), ValidationError);
}

TEST_CASE("trajectory_to_history") {
    const HistoryState h1 = trajectory_to_history(bundled_fixture(1));
    CHECK(h1.n_clock() == 2);

    const HistoryState h4 = trajectory_to_history(bundled_fixture(4));
    CHECK(h4.n_clock() == 8);
    // Two-level run: even/odd slots pair up into two tight clusters.
    for (int t = 0; t + 2 < 8; t += 2)
        CHECK(overlap(h4.conditional_state(t), h4.conditional_state(t + 2)) > 0.95);

    MeasuredTrajectory depolarized{"dull", StokesVector(1, 0, 0.9, 0),
                                   {{0, 0.1, 0.1, 0.1}}};
    CHECK_THROWS_AS(trajectory_to_history(depolarized), BelowPurityThreshold);
    try {
        trajectory_to_history(depolarized);
    } catch (const BelowPurityThreshold& e) {
        CHECK(std::string(e.what()).find("step 0") != std::string::npos);
    }
}

TEST_CASE("bundled fixtures carry the measured values verbatim") {
    const auto fixtures = bundled_fixtures();
    REQUIRE(fixtures.size() == 7);

    const MeasuredTrajectory& t1 = fixtures[0];
    REQUIRE(t1.steps.size() == 2);
    CHECK(t1.steps[1].sx == -0.3183);
    CHECK(t1.steps[1].sy == -0.9365);
    CHECK(t1.steps[1].sz == 0.0385);
    CHECK(t1.initial.s0() == 1.000);
    CHECK(t1.initial.s1() == 0.040);
    CHECK(t1.initial.s2() == 0.951);
    CHECK(t1.initial.s3() == -0.026);

    const MeasuredTrajectory& t7 = fixtures[6];
    REQUIRE(t7.steps.size() == 8);
    CHECK(t7.steps[7].sx == -0.0965);
    CHECK(t7.steps[7].sy == -0.9867);
    CHECK(t7.steps[7].sz == 0.0009);
    CHECK(t7.steps[7].gray_level == 40);

    // Step counts per run: 2, 4, 4, 8, 4, 4, 8.
    const std::size_t expected[7] = {2, 4, 4, 8, 4, 4, 8};
    for (std::size_t i = 0; i < 7; ++i) CHECK(fixtures[i].steps.size() == expected[i]);

    CHECK_THROWS_AS(bundled_fixture(0), ValidationError);
    CHECK_THROWS_AS(bundled_fixture(8), ValidationError);
}

}  // TEST_SUITE
