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

#ifndef QLNET_STATEVEC_HPP
#define QLNET_STATEVEC_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qlnet/classical.hpp"
#include "qlnet/netmodel.hpp"
#include "qlnet/pauliframe.hpp"

namespace qlnet {

/// Dense state over the 2n qubits: 4^n amplitudes indexed by the basis
/// label whose bit i (i < n) is target qubit i and bit n+i is control
/// qubit i.
struct StateVector {
    int n = 0;
    Eigen::VectorXcd amps;

    StateVector() = default;
    explicit StateVector(int n_)
        : n(n_), amps(Eigen::VectorXcd::Zero(int64_t{1} << (2 * n_))) {}

    static StateVector basis(int n, uint64_t index);
    static StateVector fromConfig(const SpinConfig &cfg);

    double norm() const { return amps.norm(); }
};

using Propagator = Eigen::MatrixXcd;

/// One-step propagator as an explicit product of gate matrices, applied in
/// circuit order: Hadamards on flagged targets, one controlled-X per FLIP
/// table row, then the n register swaps. Throws DimensionCap above nCap.
Propagator buildPropagator(const Network &net, int nCap = 7);

/// Matrix-free application of the same step directly to the amplitudes.
void applyStep(const Network &net, StateVector &psi);

/// Apply a signed Pauli string to a state.
StateVector applyPauli(const PauliFrame &frame, const StateVector &psi);

/// Eigenvalue report of a unitary. Phases live in [0, 2pi) and are
/// clustered into degenerate lines within tol.
struct SpectrumReport {
    struct Line {
        double phase = 0;
        std::complex<double> value;  // representative eigenvalue
        int degeneracy = 0;
        /// Reduced k/L with phase ~ 2pi k/L, when one exists with L <= Lmax.
        std::optional<std::pair<uint64_t, uint64_t>> rootOfUnity;
    };
    std::vector<Line> lines;  // sorted by phase
    /// Cycle lengths recovered by greedily removing complete sets of L-th
    /// roots of unity, largest L first. Filled only when every line is a
    /// root of unity and the removal succeeds (classical networks).
    std::vector<uint64_t> cycleLengths;
};

/// Throws NotUnitary when U deviates from unitarity beyond unitaryTol.
SpectrumReport spectrum(const Propagator &U, double tol = 1e-9, uint64_t Lmax = 4096,
                        double unitaryTol = 1e-10);

/// Best rational approximation k/L of phase/(2pi) with L <= Lmax, accepted
/// when |phase - 2pi k/L| <= tol. Continued-fraction convergents.
std::optional<std::pair<uint64_t, uint64_t>> phaseAsRootOfUnity(double phase, uint64_t Lmax,
                                                                double tol);

/// Smallest m in [2, maxPower] with U^m == U up to a global phase
/// (Frobenius-fitted), or nullopt. For a permutation propagator m - 1 is
/// the least common multiple of the cycle lengths. Throws NotUnitary for
/// inputs that are not unitary within 1e-10.
std::optional<uint64_t> checkCliffordPeriodicity(const Propagator &U, uint64_t maxPower = 10000,
                                                 double tol = 1e-9);

}  // namespace qlnet

#endif
