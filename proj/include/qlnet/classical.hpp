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

#ifndef QLNET_CLASSICAL_HPP
#define QLNET_CLASSICAL_HPP

#include <cstdint>
#include <vector>

#include "qlnet/bits.hpp"
#include "qlnet/netmodel.hpp"

namespace qlnet {

/// Joint configuration of both registers: bits 0..n-1 hold the previous
/// step's values, bits n..2n-1 the current values. Bit 1 <-> spin +1.
struct SpinConfig {
    int n = 0;
    BitVec bits;  // length 2n

    SpinConfig() = default;
    explicit SpinConfig(int n_) : n(n_), bits(static_cast<size_t>(2 * n_)) {}
    SpinConfig(int n_, const BitVec &b) : n(n_), bits(b) {}

    /// Parse a {0,1} string of length 2n, position 0 first.
    static SpinConfig from_string(int n, const std::string &s);

    bool operator==(const SpinConfig &o) const { return n == o.n && bits == o.bits; }
};

/// One synchronous update: every node's new value is its previous value,
/// complemented when its table row (selected by the current values of its
/// inputs) says FLIP; then the two registers are exchanged, so the newest
/// values end up in the current register again.
///
/// Throws HadamardPresent when any node carries a Hadamard flag.
SpinConfig stepClassical(const Network &net, const SpinConfig &cfg);

/// Exact inverse of stepClassical (registers exchanged first, then the
/// same self-inverse gates reapplied in reverse order).
SpinConfig stepClassicalInverse(const Network &net, const SpinConfig &cfg);

struct CycleInfo {
    uint64_t transient = 0;  // always 0: the dynamics is a bijection
    uint64_t period = 0;
};

/// Length of the cycle through cfg. States are memoized in a hash table up
/// to memoryCap entries; beyond that the search falls back to Brent's
/// cycle-finding algorithm. Throws PeriodNotFound after maxSteps.
CycleInfo findCycle(const Network &net, const SpinConfig &cfg,
                    uint64_t maxSteps = uint64_t{1} << 32,
                    uint64_t memoryCap = uint64_t{1} << 22);

/// Damage record: masks[t] holds the nodes whose current-register value
/// differs between the two trajectories after t steps (masks[0] is the
/// seeded difference), distances[t] its popcount.
struct DamageSeries {
    std::vector<BitVec> masks;  // each of length n
    std::vector<size_t> distances;
};

/// Runs cfg alongside a copy whose current-register bit of flipNode is
/// flipped and records the per-step difference of the current registers.
DamageSeries classicalDamageSeries(const Network &net, const SpinConfig &cfg,
                                   int flipNode, size_t steps);

/// Reference second-order pattern: row 0 is the given bit row; each later
/// row obeys out[i+1][t] = out[i][t+1] XOR out[i][t-1] with the row treated
/// as periodic. Returns steps+1 rows.
std::vector<BitVec> rule90Oracle(const BitVec &initialRow, size_t steps);

}  // namespace qlnet

#endif
