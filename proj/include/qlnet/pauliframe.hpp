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

#ifndef QLNET_PAULIFRAME_HPP
#define QLNET_PAULIFRAME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlnet/bits.hpp"
#include "qlnet/netmodel.hpp"

namespace qlnet {

enum class Pauli : uint8_t {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
};

char to_char(Pauli p);

/// Difference operator between a perturbed and an unperturbed run of the
/// same circuit: a signed Pauli string over the 2n qubits. Conjugation by
/// the gates used here (H, X, controlled-X, swap) never produces factors
/// of i, so the sign stays in {+1, -1}.
struct PauliFrame {
    std::vector<Pauli> labels;  // length 2n; 0..n-1 targets, n..2n-1 controls
    int sign = +1;

    PauliFrame() = default;
    explicit PauliFrame(int n) : labels(static_cast<size_t>(2 * n), Pauli::I) {}

    /// Frame with a single X on the target qubit of `node` (the default
    /// way a one-node perturbation is seeded).
    static PauliFrame singleX(int n, int node);

    int n() const { return static_cast<int>(labels.size()) / 2; }

    /// Count of non-identity labels among the first n (target) positions.
    size_t hamming() const;
    /// Mask of first-n positions whose label is exactly X.
    BitVec xMask() const;
    std::string to_string() const;  // e.g. "-IXYZ|IIII" (targets|controls)

    bool operator==(const PauliFrame &o) const {
        return labels == o.labels && sign == o.sign;
    }
};

/// Conjugation by a Hadamard on one qubit: X<->Z, Y -> -Y.
void conjugateH(PauliFrame &f, int qubit);
/// Conjugation by an unconditional X on one qubit: sign flips for Y, Z.
void conjugateX(PauliFrame &f, int qubit);
/// Conjugation by a controlled-X. The label pair (control, target) maps as
///   II->II  IX->IX  IY->ZY  IZ->ZZ
///   XI->XX  XX->XI  XY->YZ  XZ->-YY
///   YI->YX  YX->YI  YY->-XZ YZ->XY
///   ZI->ZI  ZX->ZX  ZY->IY  ZZ->IZ
void conjugateCX(PauliFrame &f, int control, int target);
/// Conjugation by an anti-controlled X (fires when the control is 0): the
/// same label map as conjugateCX with one extra sign flip whenever the
/// target label is Y or Z (the gate is the plain one conjugated by X on
/// the control, and that X anticommutes with the Z part the target hands
/// to the control).
void conjugateAntiCX(PauliFrame &f, int control, int target);

/// Advance the frame through one network step: H conjugation on every
/// flagged node's target, then per node (ascending) the reduced gate
/// (controlled-X for copy-shaped tables, anti-controlled X for not-shaped
/// ones, X for constant-flip, nothing for constant-identity), then the
/// register exchange. Signs are exact for both control polarities.
///
/// Throws UnsupportedGate when a node has two or more effective inputs.
void stepFrame(const Network &net, PauliFrame &f);

/// Reusable stepper that reduces every node's gate once up front; repeated
/// stepping then runs without touching the tables again.
class FrameStepper {
  public:
    explicit FrameStepper(const Network &net);
    void step(PauliFrame &f) const;
    int n() const { return n_; }

  private:
    enum class GateKind : uint8_t { NONE, PLAIN_X, CONTROLLED_X, ANTI_CONTROLLED_X };
    struct Gate {
        GateKind kind = GateKind::NONE;
        int control = -1;  // qubit index for the controlled kinds
    };
    int n_ = 0;
    std::vector<int> hTargets_;
    std::vector<Gate> gates_;
};

/// Per-step view of the target register, recorded after each step's final
/// swaps. Entry 0 is the initial frame's visible part.
struct DistanceSeries {
    struct Entry {
        std::vector<Pauli> visible;  // first n labels
        size_t hamming = 0;
    };
    std::vector<Entry> perStep;
};

DistanceSeries damageSeries(const Network &net, const PauliFrame &initial, size_t steps);

enum class SolitaryClass : uint8_t {
    STATIC = 0,         // never visits a node other than the seed
    LOOP_SOLITON = 1,   // advances one node every three steps
    CHAIN_SOLITON = 2,  // advances one node every step
    COMPLEX = 3,
};

const char *to_string(SolitaryClass c);

/// Classify a series against the recurring one-node patterns. A sliding
/// start offset of up to six steps absorbs the initial transient.
SolitaryClass detectSolitary(const DistanceSeries &series);

/// Smallest p >= 1 with frame(t0 + p) == frame(t0) for t0 = 0, sign
/// included. Returns nullopt when no recurrence shows up within maxSteps.
std::optional<uint64_t> framePeriod(const Network &net, const PauliFrame &initial,
                                    uint64_t maxSteps);

}  // namespace qlnet

#endif
