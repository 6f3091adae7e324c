// Copyright 2026 The qlnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLNET_ERRORS_HPP
#define QLNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlnet {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A node has two or more effective inputs, so the wiring is not a
/// functional graph and cannot be decomposed into K=1 components.
struct NotFunctionalGraph : Error {
    using Error::Error;
};

/// A classical-only operation was asked to process a network that has at
/// least one Hadamard flag set.
struct HadamardPresent : Error {
    using Error::Error;
};

/// Cycle detection gave up before returning to the initial state.
struct PeriodNotFound : Error {
    using Error::Error;
};

/// A dense-matrix operation was requested above the configured size cap.
struct DimensionCap : Error {
    using Error::Error;
};

/// The matrix handed to the spectrum analysis is not unitary.
struct NotUnitary : Error {
    using Error::Error;
};

/// The frame engine only supports constant and single-input gates.
struct UnsupportedGate : Error {
    using Error::Error;
};

/// Malformed network file or malformed inline state string.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace qlnet

#endif
