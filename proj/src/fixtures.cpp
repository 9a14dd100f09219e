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
#include "polhist/fixtures.hpp"

namespace polhist {

namespace {

StokesVector shared_initial() { return StokesVector(1.000, 0.040, 0.951, -0.026); }

MeasuredTrajectory make(const char* label,
                        std::vector<MeasuredTrajectory::Step> steps) {
    MeasuredTrajectory m{label, shared_initial(), std::move(steps)};
    validate(m);
    return m;
}

}  // namespace

std::vector<MeasuredTrajectory> bundled_fixtures() {
    // Measured Pauli means per step, exactly as recorded (four decimals).
    // Step entries are (gray level, <sigma_x>, <sigma_y>, <sigma_z>).
    std::vector<MeasuredTrajectory> all;
    all.reserve(7);

    all.push_back(make("trajectory-1", {
        {0, -0.7328, -0.6621, 0.0541},
        {30, -0.3183, -0.9365, 0.0385},
    }));

    all.push_back(make("trajectory-2", {
        {0, -0.7358, -0.6505, 0.0447},
        {30, -0.3465, -0.9306, 0.0273},
        {0, -0.7122, -0.6802, 0.0452},
        {30, -0.3147, -0.9299, 0.0271},
    }));

    all.push_back(make("trajectory-3", {
        {0, -0.7093, -0.6787, 0.0453},
        {30, -0.2996, -0.9404, 0.0253},
        {30, -0.3614, -0.9214, 0.0365},
        {0, -0.7277, -0.6551, 0.0442},
    }));

    all.push_back(make("trajectory-4", {
        {0, -0.7110, -0.6614, 0.0382},
        {30, -0.3183, -0.9382, 0.0288},
        {0, -0.6849, -0.7017, 0.0433},
        {30, -0.2957, -0.9303, 0.0183},
        {0, -0.7112, -0.6475, 0.0334},
        {30, -0.3432, -0.9263, 0.0322},
        {0, -0.7315, -0.6473, 0.0376},
        {30, -0.3496, -0.9180, 0.0337},
    }));

    all.push_back(make("trajectory-5", {
        {25, -0.4558, -0.8689, 0.0394},
        {0, -0.7218, -0.6673, 0.0438},
        {15, -0.6019, -0.7789, 0.0475},
        {35, -0.2006, -0.9632, 0.0134},
    }));

    all.push_back(make("trajectory-6", {
        {0, -0.7312, -0.6491, 0.0420},
        {15, -0.6167, -0.7692, 0.0433},
        {25, -0.4331, -0.8889, 0.0413},
        {35, -0.2030, -0.9627, 0.0120},
    }));

    all.push_back(make("trajectory-7", {
        {0, -0.7538, -0.6383, 0.0595},
        {10, -0.6908, -0.6910, 0.0473},
        {15, -0.5848, -0.8004, 0.0548},
        {20, -0.5458, -0.8194, 0.0495},
        {25, -0.4772, -0.8705, 0.0447},
        {30, -0.3308, -0.9408, 0.0387},
        {35, -0.2489, -0.9656, 0.0315},
        {40, -0.0965, -0.9867, 0.0009},
    }));

    return all;
}

MeasuredTrajectory bundled_fixture(int number) {
    if (number < 1 || number > 7)
        throw ValidationError("bundled trajectories are numbered 1..7, got " +
                              std::to_string(number));
    return bundled_fixtures()[static_cast<std::size_t>(number - 1)];
}

}  // namespace polhist
