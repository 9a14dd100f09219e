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
#ifndef POLHIST_RNG_HPP
#define POLHIST_RNG_HPP

#include <cstdint>

namespace polhist {

// splitmix64 (Vigna). Chosen over the std engines because the std
// distributions are implementation-defined: results here must be
// bit-identical for a given (seed, stream) on every platform.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t z) {
    std::uint64_t s = z;
    return splitmix64_next(s);
}

/// Deterministic random stream. Rng(seed, stream) yields decorrelated
/// substreams for the same seed; stream starts are finalizer-scrambled so
/// neighbouring indices do not overlap.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed)) {}

    Rng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix64(mix64(seed) ^ mix64(stream + 0x6a09e667f3bcc909ULL))) {}

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

private:
    std::uint64_t state_;
};

}  // namespace polhist

#endif  // POLHIST_RNG_HPP
