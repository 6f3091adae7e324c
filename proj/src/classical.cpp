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

#include "qlnet/classical.hpp"

#include <unordered_map>

namespace qlnet {

SpinConfig SpinConfig::from_string(int n, const std::string &s) {
    if (s.size() != static_cast<size_t>(2 * n)) {
        throw ParseError("state string must have exactly 2n characters");
    }
    SpinConfig cfg(n);
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] != '0' && s[i] != '1') {
            throw ParseError("state string may only contain 0 and 1");
        }
        cfg.bits.set(i, s[i] == '1');
    }
    return cfg;
}

namespace {

size_t tableRow(const Network &net, const SpinConfig &cfg, int i) {
    const Node &node = net.nodes[i];
    size_t row = 0;
    for (size_t j = 0; j < node.inputs.size(); j++) {
        // Inputs are read from the current register, bits n..2n-1.
        if (cfg.bits.get(static_cast<size_t>(net.n + node.inputs[j]))) {
            row |= size_t{1} << j;
        }
    }
    return row;
}

void swapRegisters(SpinConfig &cfg) {
    for (int i = 0; i < cfg.n; i++) {
        bool a = cfg.bits.get(static_cast<size_t>(i));
        bool b = cfg.bits.get(static_cast<size_t>(cfg.n + i));
        cfg.bits.set(static_cast<size_t>(i), b);
        cfg.bits.set(static_cast<size_t>(cfg.n + i), a);
    }
}

}  // namespace

SpinConfig stepClassical(const Network &net, const SpinConfig &cfg) {
    if (net.anyHadamard()) {
        throw HadamardPresent("classical stepping requires a Hadamard-free network");
    }
    if (cfg.n != net.n) {
        throw Error("configuration size does not match the network");
    }
    SpinConfig out = cfg;
    // The gates only write target bits and only read control bits, so the
    // node order is immaterial.
    for (int i = 0; i < net.n; i++) {
        if (net.nodes[i].table.at(tableRow(net, cfg, i)) == Action::FLIP) {
            out.bits.flip(static_cast<size_t>(i));
        }
    }
    swapRegisters(out);
    return out;
}

SpinConfig stepClassicalInverse(const Network &net, const SpinConfig &cfg) {
    if (net.anyHadamard()) {
        throw HadamardPresent("classical stepping requires a Hadamard-free network");
    }
    if (cfg.n != net.n) {
        throw Error("configuration size does not match the network");
    }
    // Swaps first, then the same self-inverse gates in reverse node order.
    SpinConfig out = cfg;
    swapRegisters(out);
    for (int i = net.n - 1; i >= 0; i--) {
        if (net.nodes[i].table.at(tableRow(net, out, i)) == Action::FLIP) {
            out.bits.flip(static_cast<size_t>(i));
        }
    }
    return out;
}

CycleInfo findCycle(const Network &net, const SpinConfig &cfg, uint64_t maxSteps,
                    uint64_t memoryCap) {
    std::unordered_map<BitVec, uint64_t, BitVecHash> visited;
    SpinConfig cur = cfg;
    uint64_t t = 0;
    while (visited.size() < memoryCap) {
        auto [it, inserted] = visited.emplace(cur.bits, t);
        if (!inserted) {
            // The dynamics is a bijection, so the first revisit must close
            // the cycle on the initial state.
            if (it->second != 0) {
                throw Error("revisit of a non-initial state; the step map is not a bijection");
            }
            return CycleInfo{0, t};
        }
        if (t >= maxSteps) {
            throw PeriodNotFound("no cycle within the step budget");
        }
        cur = stepClassical(net, cur);
        t++;
    }
    // Brent's algorithm: memory-free fallback for very long cycles. For a
    // bijection the recurrence found is exactly the period of cfg.
    uint64_t power = 1, lambda = 1;
    SpinConfig tortoise = cur;  // state at time t
    SpinConfig hare = stepClassical(net, cur);
    uint64_t walked = t + 1;
    while (!(tortoise == hare)) {
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        if (walked >= maxSteps) {
            throw PeriodNotFound("no cycle within the step budget");
        }
        hare = stepClassical(net, hare);
        walked++;
        lambda++;
    }
    return CycleInfo{0, lambda};
}

DamageSeries classicalDamageSeries(const Network &net, const SpinConfig &cfg, int flipNode,
                                   size_t steps) {
    if (flipNode < 0 || flipNode >= net.n) {
        throw Error("flip node out of range");
    }
    SpinConfig a = cfg;
    SpinConfig b = cfg;
    b.bits.flip(static_cast<size_t>(net.n + flipNode));
    DamageSeries series;
    series.masks.reserve(steps + 1);
    series.distances.reserve(steps + 1);
    auto record = [&] {
        BitVec mask(static_cast<size_t>(net.n));
        for (int i = 0; i < net.n; i++) {
            size_t pos = static_cast<size_t>(net.n + i);
            if (a.bits.get(pos) != b.bits.get(pos)) {
                mask.set(static_cast<size_t>(i), true);
            }
        }
        series.distances.push_back(mask.popcount());
        series.masks.push_back(std::move(mask));
    };
    record();
    for (size_t t = 0; t < steps; t++) {
        a = stepClassical(net, a);
        b = stepClassical(net, b);
        record();
    }
    return series;
}

std::vector<BitVec> rule90Oracle(const BitVec &initialRow, size_t steps) {
    size_t width = initialRow.size();
    if (width < 1) {
        throw Error("rule90 row must not be empty");
    }
    std::vector<BitVec> rows;
    rows.reserve(steps + 1);
    rows.push_back(initialRow);
    for (size_t s = 0; s < steps; s++) {
        const BitVec &prev = rows.back();
        BitVec next(width);
        for (size_t t = 0; t < width; t++) {
            bool left = prev.get((t + width - 1) % width);
            bool right = prev.get((t + 1) % width);
            next.set(t, left != right);
        }
        rows.push_back(std::move(next));
    }
    return rows;
}

}  // namespace qlnet
