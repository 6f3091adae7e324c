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

#include "qlnet/pauliframe.hpp"

#include <algorithm>
#include <utility>

namespace qlnet {

char to_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

PauliFrame PauliFrame::singleX(int n, int node) {
    if (node < 0 || node >= n) {
        throw Error("perturbed node out of range");
    }
    PauliFrame f(n);
    f.labels[static_cast<size_t>(node)] = Pauli::X;
    return f;
}

size_t PauliFrame::hamming() const {
    size_t count = 0;
    int half = n();
    for (int i = 0; i < half; i++) {
        if (labels[static_cast<size_t>(i)] != Pauli::I) {
            count++;
        }
    }
    return count;
}

BitVec PauliFrame::xMask() const {
    int half = n();
    BitVec mask(static_cast<size_t>(half));
    for (int i = 0; i < half; i++) {
        if (labels[static_cast<size_t>(i)] == Pauli::X) {
            mask.set(static_cast<size_t>(i), true);
        }
    }
    return mask;
}

std::string PauliFrame::to_string() const {
    std::string s;
    s.reserve(labels.size() + 2);
    s.push_back(sign < 0 ? '-' : '+');
    int half = n();
    for (int i = 0; i < 2 * half; i++) {
        if (i == half) {
            s.push_back('|');
        }
        s.push_back(to_char(labels[static_cast<size_t>(i)]));
    }
    return s;
}

void conjugateH(PauliFrame &f, int qubit) {
    Pauli &p = f.labels[static_cast<size_t>(qubit)];
    if (p == Pauli::X) {
        p = Pauli::Z;
    } else if (p == Pauli::Z) {
        p = Pauli::X;
    } else if (p == Pauli::Y) {
        f.sign = -f.sign;
    }
}

void conjugateX(PauliFrame &f, int qubit) {
    Pauli p = f.labels[static_cast<size_t>(qubit)];
    if (p == Pauli::Y || p == Pauli::Z) {
        f.sign = -f.sign;
    }
}

namespace {

struct CXEntry {
    Pauli control;
    Pauli target;
    int sign;
};

// Indexed [control][target] in I, X, Y, Z order.
constexpr CXEntry kCXTable[4][4] = {
    {{Pauli::I, Pauli::I, +1},
     {Pauli::I, Pauli::X, +1},
     {Pauli::Z, Pauli::Y, +1},
     {Pauli::Z, Pauli::Z, +1}},
    {{Pauli::X, Pauli::X, +1},
     {Pauli::X, Pauli::I, +1},
     {Pauli::Y, Pauli::Z, +1},
     {Pauli::Y, Pauli::Y, -1}},
    {{Pauli::Y, Pauli::X, +1},
     {Pauli::Y, Pauli::I, +1},
     {Pauli::X, Pauli::Z, -1},
     {Pauli::X, Pauli::Y, +1}},
    {{Pauli::Z, Pauli::I, +1},
     {Pauli::Z, Pauli::X, +1},
     {Pauli::I, Pauli::Y, +1},
     {Pauli::I, Pauli::Z, +1}},
};

}  // namespace

void conjugateCX(PauliFrame &f, int control, int target) {
    Pauli c = f.labels[static_cast<size_t>(control)];
    Pauli t = f.labels[static_cast<size_t>(target)];
    const CXEntry &e = kCXTable[static_cast<int>(c)][static_cast<int>(t)];
    f.labels[static_cast<size_t>(control)] = e.control;
    f.labels[static_cast<size_t>(target)] = e.target;
    f.sign *= e.sign;
}

void conjugateAntiCX(PauliFrame &f, int control, int target) {
    Pauli t = f.labels[static_cast<size_t>(target)];
    if (t == Pauli::Y || t == Pauli::Z) {
        f.sign = -f.sign;
    }
    conjugateCX(f, control, target);
}

FrameStepper::FrameStepper(const Network &net) : n_(net.n) {
    gates_.reserve(static_cast<size_t>(net.n));
    for (int i = 0; i < net.n; i++) {
        if (net.nodes[static_cast<size_t>(i)].hadamard) {
            hTargets_.push_back(i);
        }
        std::vector<int> eff = effectiveInputs(net.nodes[static_cast<size_t>(i)]);
        if (eff.size() > 1) {
            throw UnsupportedGate("frame stepping requires at most one effective input per node");
        }
        Gate g;
        if (eff.size() == 1) {
            // One effective wire: the per-row gates collapse to a single
            // controlled X whose polarity is the wire value that flips.
            const Node &node = net.nodes[static_cast<size_t>(i)];
            uint64_t rowWhenSet = 0;
            for (size_t j = 0; j < node.inputs.size(); j++) {
                if (node.inputs[j] == eff[0]) {
                    rowWhenSet |= uint64_t{1} << j;
                }
            }
            bool firesOnOne = node.table.at(rowWhenSet) == Action::FLIP;
            g.kind = firesOnOne ? GateKind::CONTROLLED_X : GateKind::ANTI_CONTROLLED_X;
            g.control = net.n + eff[0];
        } else if (net.nodes[static_cast<size_t>(i)].table.at(0) == Action::FLIP) {
            // Constant-flip node: an unconditional X on the target.
            g.kind = GateKind::PLAIN_X;
        }
        gates_.push_back(g);
    }
}

void FrameStepper::step(PauliFrame &f) const {
    if (f.n() != n_) {
        throw Error("frame size does not match the network");
    }
    for (int i : hTargets_) {
        conjugateH(f, i);
    }
    for (int i = 0; i < n_; i++) {
        const Gate &g = gates_[static_cast<size_t>(i)];
        if (g.kind == GateKind::CONTROLLED_X) {
            conjugateCX(f, g.control, i);
        } else if (g.kind == GateKind::ANTI_CONTROLLED_X) {
            conjugateAntiCX(f, g.control, i);
        } else if (g.kind == GateKind::PLAIN_X) {
            conjugateX(f, i);
        }
    }
    for (int i = 0; i < n_; i++) {
        std::swap(f.labels[static_cast<size_t>(i)], f.labels[static_cast<size_t>(n_ + i)]);
    }
}

void stepFrame(const Network &net, PauliFrame &f) {
    FrameStepper(net).step(f);
}

DistanceSeries damageSeries(const Network &net, const PauliFrame &initial, size_t steps) {
    FrameStepper stepper(net);
    PauliFrame f = initial;
    DistanceSeries series;
    series.perStep.reserve(steps + 1);
    auto record = [&] {
        DistanceSeries::Entry entry;
        entry.visible.assign(f.labels.begin(), f.labels.begin() + net.n);
        entry.hamming = f.hamming();
        series.perStep.push_back(std::move(entry));
    };
    record();
    for (size_t t = 0; t < steps; t++) {
        stepper.step(f);
        record();
    }
    return series;
}

const char *to_string(SolitaryClass c) {
    switch (c) {
        case SolitaryClass::STATIC:
            return "STATIC";
        case SolitaryClass::LOOP_SOLITON:
            return "LOOP_SOLITON";
        case SolitaryClass::CHAIN_SOLITON:
            return "CHAIN_SOLITON";
        case SolitaryClass::COMPLEX:
            return "COMPLEX";
    }
    return "?";
}

namespace {

struct SingleLabel {
    int pos;
    Pauli label;
};

// Rows with exactly one non-identity label, or pos = -1 for empty rows.
std::optional<std::vector<SingleLabel>> singles(const DistanceSeries &series, size_t from) {
    std::vector<SingleLabel> out;
    for (size_t t = from; t < series.perStep.size(); t++) {
        const auto &row = series.perStep[t].visible;
        SingleLabel s{-1, Pauli::I};
        for (size_t i = 0; i < row.size(); i++) {
            if (row[i] != Pauli::I) {
                if (s.pos >= 0) {
                    return std::nullopt;  // more than one label in this row
                }
                s = {static_cast<int>(i), row[i]};
            }
        }
        out.push_back(s);
    }
    return out;
}

// Blocks of three: (Z at a, Z at b, X at a), where each block's middle
// position is the previous block's leading one.
bool matchesLoopTemplate(const std::vector<SingleLabel> &rows) {
    if (rows.size() < 6) {
        return false;
    }
    int prevA = -1;
    for (size_t m = 0; m + 2 < rows.size(); m += 3) {
        const SingleLabel &r0 = rows[m], &r1 = rows[m + 1], &r2 = rows[m + 2];
        if (r0.label != Pauli::Z || r1.label != Pauli::Z || r2.label != Pauli::X) {
            return false;
        }
        if (r0.pos < 0 || r1.pos < 0 || r0.pos != r2.pos || r0.pos == r1.pos) {
            return false;
        }
        if (prevA >= 0 && r1.pos != prevA) {
            return false;
        }
        prevA = r0.pos;
    }
    return true;
}

// A run of single-X rows walking through pairwise distinct nodes.
bool matchesChainTemplate(const std::vector<SingleLabel> &rows) {
    size_t run = 0;
    std::vector<int> seen;
    for (const SingleLabel &r : rows) {
        if (r.label != Pauli::X || r.pos < 0) {
            break;
        }
        if (std::find(seen.begin(), seen.end(), r.pos) != seen.end()) {
            break;
        }
        seen.push_back(r.pos);
        run++;
    }
    return run >= 4;
}

}  // namespace

SolitaryClass detectSolitary(const DistanceSeries &series) {
    if (series.perStep.empty()) {
        return SolitaryClass::COMPLEX;
    }

    // Static: the perturbation never visits a node other than the seed.
    const auto &seedRow = series.perStep[0].visible;
    int seedPos = -1;
    bool seedSingle = series.perStep[0].hamming == 1;
    if (seedSingle) {
        for (size_t i = 0; i < seedRow.size(); i++) {
            if (seedRow[i] != Pauli::I) {
                seedPos = static_cast<int>(i);
            }
        }
    }
    if (seedSingle) {
        bool confined = true;
        for (const auto &entry : series.perStep) {
            for (size_t i = 0; i < entry.visible.size(); i++) {
                if (entry.visible[i] != Pauli::I && static_cast<int>(i) != seedPos) {
                    confined = false;
                    break;
                }
            }
            if (!confined) {
                break;
            }
        }
        if (confined) {
            return SolitaryClass::STATIC;
        }
    }

    size_t maxOffset = std::min<size_t>(6, series.perStep.size());
    for (size_t w = 0; w <= maxOffset; w++) {
        auto rows = singles(series, w);
        if (!rows) {
            continue;
        }
        if (matchesLoopTemplate(*rows)) {
            return SolitaryClass::LOOP_SOLITON;
        }
    }
    for (size_t w = 0; w <= maxOffset; w++) {
        auto rows = singles(series, w);
        if (rows && matchesChainTemplate(*rows)) {
            // The whole tail must stay a one-node perturbation.
            bool narrow = true;
            for (size_t t = w; t < series.perStep.size(); t++) {
                if (series.perStep[t].hamming > 1) {
                    narrow = false;
                    break;
                }
            }
            if (narrow) {
                return SolitaryClass::CHAIN_SOLITON;
            }
        }
    }
    return SolitaryClass::COMPLEX;
}

std::optional<uint64_t> framePeriod(const Network &net, const PauliFrame &initial,
                                    uint64_t maxSteps) {
    FrameStepper stepper(net);
    PauliFrame f = initial;
    for (uint64_t t = 1; t <= maxSteps; t++) {
        stepper.step(f);
        if (f == initial) {
            return t;
        }
    }
    return std::nullopt;
}

}  // namespace qlnet
