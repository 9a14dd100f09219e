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
#ifndef POLHIST_ERRORS_HPP
#define POLHIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polhist {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Generic type-invariant or argument violation (non-unitary matrix,
/// Bloch vector outside the ball, index out of range, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Stokes vector outside the physical cone (degree of polarization > 1).
class InvalidStokes : public Error {
public:
    using Error::Error;
};

/// Bloch norm below the purification threshold; data too depolarized to
/// treat as a pure history entry.
class BelowPurityThreshold : public Error {
public:
    using Error::Error;
};

/// A Mueller matrix mapped a valid Stokes vector outside the cone.
class UnphysicalOutput : public Error {
public:
    using Error::Error;
};

/// Mueller matrix fails the physicality screen (or basic entry bounds).
class UnphysicalMatrix : public Error {
public:
    using Error::Error;
};

/// Diattenuation vector at the polarizer limit; the diattenuator factor
/// is not invertible.
class SingularDiattenuator : public Error {
public:
    using Error::Error;
};

/// The 3x3 polar factor is rank-deficient beyond tolerance.
class DegenerateDepolarizer : public Error {
public:
    using Error::Error;
};

/// A matrix claimed to be a retarder is not diag(1, SO(3)).
class NotARotation : public Error {
public:
    using Error::Error;
};

/// Ordered product of step unitaries is not the identity up to a phase.
class CyclicConditionViolated : public Error {
public:
    CyclicConditionViolated(const std::string& what, double deviation)
        : Error(what), deviation_(deviation) {}
    double deviation() const { return deviation_; }

private:
    double deviation_;
};

/// Malformed calibration/trajectory document.
class ParseError : public Error {
public:
    using Error::Error;
};

class DuplicateGrayLevel : public Error {
public:
    using Error::Error;
};

class MissingGrayLevel : public Error {
public:
    using Error::Error;
};

}  // namespace polhist

#endif  // POLHIST_ERRORS_HPP
