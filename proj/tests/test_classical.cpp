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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qlnet/classical.hpp"
#include "qlnet/netmodel.hpp"

using namespace qlnet;

namespace {

std::string fixture(const char *name) {
    return std::string(QLNET_DATA_DIR) + "/networks/" + name;
}

Network copyLoop(int n) {
    Network net(n);
    for (int i = 0; i < n; i++) {
        net.nodes[size_t(i)].inputs = {(i + 1) % n};
        net.nodes[size_t(i)].table = makeK1Function(K1Kind::COPY);
    }
    return net;
}

std::string stepString(const Network &net, const std::string &s) {
    SpinConfig cfg = SpinConfig::from_string(net.n, s);
    return stepClassical(net, cfg).bits.to_string();
}

/// Orbit lengths of the step map over every 2^(2n) configuration.
std::vector<uint64_t> orbitPartition(const Network &net) {
    size_t total = size_t{1} << (2 * net.n);
    std::vector<bool> visited(total, false);
    std::vector<uint64_t> lengths;
    for (size_t start = 0; start < total; start++) {
        if (visited[start]) {
            continue;
        }
        uint64_t len = 0;
        size_t s = start;
        do {
            visited[s] = true;
            SpinConfig cfg(net.n);
            for (size_t b = 0; b < size_t(2 * net.n); b++) {
                cfg.bits.set(b, (s >> b) & 1);
            }
            SpinConfig next = stepClassical(net, cfg);
            s = 0;
            for (size_t b = 0; b < size_t(2 * net.n); b++) {
                if (next.bits.get(b)) {
                    s |= size_t{1} << b;
                }
            }
            len++;
        } while (s != start);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

bool oddBinomial(uint64_t m, uint64_t k) {
    // Lucas: C(m, k) is odd exactly when k's bits are a subset of m's.
    return k <= m && (k & (m - k)) == 0;
}

}  // namespace

TEST_CASE("spin configurations parse and validate") {
    SpinConfig cfg = SpinConfig::from_string(2, "1101");
    CHECK(cfg.n == 2);
    CHECK(cfg.bits.to_string() == "1101");
    CHECK_THROWS_AS(SpinConfig::from_string(2, "110"), ParseError);
    CHECK_THROWS_AS(SpinConfig::from_string(2, "11021"), ParseError);
    CHECK_THROWS_AS(SpinConfig::from_string(2, "11x1"), ParseError);
}

TEST_CASE("one classical step of the bundled two-node network") {
    Network net = readNetworkFile(fixture("two_node.qlnet"));
    // Both current values high: node 0's table row 11 says flip, node 1's
    // says keep, then the registers exchange.
    CHECK(stepString(net, "1111") == "1101");
    // Such a flip rules out fixed points: every orbit below has length > 1.
}

TEST_CASE("the two-node state space splits into orbits 6, 4, 3, 3") {
    Network net = readNetworkFile(fixture("two_node.qlnet"));
    std::vector<uint64_t> expected = {6, 4, 3, 3};
    CHECK(orbitPartition(net) == expected);

    // findCycle agrees with the direct walk on every start state
    for (uint64_t s = 0; s < 16; s++) {
        SpinConfig cfg(2);
        for (size_t b = 0; b < 4; b++) {
            cfg.bits.set(b, (s >> b) & 1);
        }
        CycleInfo info = findCycle(net, cfg);
        CHECK(info.transient == 0);
        CHECK((info.period == 6 || info.period == 4 || info.period == 3));
    }
}

TEST_CASE("identity-logic networks only exchange their registers") {
    Network net(1);
    net.nodes[0].inputs = {0};
    net.nodes[0].table = makeK1Function(K1Kind::CONST_I);
    CHECK(findCycle(net, SpinConfig::from_string(1, "00")).period == 1);
    CHECK(findCycle(net, SpinConfig::from_string(1, "11")).period == 1);
    CHECK(findCycle(net, SpinConfig::from_string(1, "01")).period == 2);
    CHECK(findCycle(net, SpinConfig::from_string(1, "10")).period == 2);
}

TEST_CASE("the inverse step undoes the forward step on every state") {
    SUBCASE("two-node network, exhaustively") {
        Network net = readNetworkFile(fixture("two_node.qlnet"));
        for (uint64_t s = 0; s < 16; s++) {
            SpinConfig cfg(2);
            for (size_t b = 0; b < 4; b++) {
                cfg.bits.set(b, (s >> b) & 1);
            }
            CHECK(stepClassicalInverse(net, stepClassical(net, cfg)) == cfg);
            CHECK(stepClassical(net, stepClassicalInverse(net, cfg)) == cfg);
        }
    }
    SUBCASE("random single-input networks, exhaustively at n=4") {
        for (uint64_t seed : {11u, 12u, 13u}) {
            Network net = randomK1Network(4, seed);
            for (uint64_t s = 0; s < 256; s++) {
                SpinConfig cfg(4);
                for (size_t b = 0; b < 8; b++) {
                    cfg.bits.set(b, (s >> b) & 1);
                }
                CHECK(stepClassicalInverse(net, stepClassical(net, cfg)) == cfg);
            }
        }
    }
    SUBCASE("random two-input tables") {
        Network net(3);
        net.nodes[0].inputs = {1, 2};
        net.nodes[0].table = TruthTable::from_bits("0110");
        net.nodes[1].inputs = {0, 2};
        net.nodes[1].table = TruthTable::from_bits("1011");
        net.nodes[2].inputs = {0, 1};
        net.nodes[2].table = TruthTable::from_bits("0010");
        for (uint64_t s = 0; s < 64; s++) {
            SpinConfig cfg(3);
            for (size_t b = 0; b < 6; b++) {
                cfg.bits.set(b, (s >> b) & 1);
            }
            CHECK(stepClassicalInverse(net, stepClassical(net, cfg)) == cfg);
        }
    }
}

TEST_CASE("classical operations refuse Hadamard-flagged networks") {
    Network net = readNetworkFile(fixture("loop12_h.qlnet"));
    SpinConfig cfg(12);
    CHECK_THROWS_AS(stepClassical(net, cfg), HadamardPresent);
    CHECK_THROWS_AS(stepClassicalInverse(net, cfg), HadamardPresent);
    CHECK_THROWS_AS(findCycle(net, cfg), HadamardPresent);
    CHECK_THROWS_AS(classicalDamageSeries(net, cfg, 0, 4), HadamardPresent);
}

TEST_CASE("cycle search gives up cleanly and the memory fallback agrees") {
    Network net = readNetworkFile(fixture("two_node.qlnet"));
    SpinConfig cfg = SpinConfig::from_string(2, "1111");
    CHECK_THROWS_AS(findCycle(net, cfg, 2), PeriodNotFound);

    Network loop = copyLoop(12);
    SpinConfig state = SpinConfig::from_string(12, "001011000111010110010011");
    CycleInfo memoized = findCycle(loop, state);
    CycleInfo brent = findCycle(loop, state, uint64_t{1} << 32, /*memoryCap=*/1);
    CHECK(memoized.period == brent.period);
    CHECK(memoized.period >= 1);
}

TEST_CASE("damage series structure and confinement to the seeded node") {
    Network net(3);
    for (int i = 0; i < 3; i++) {
        net.nodes[size_t(i)].inputs = {i};
        net.nodes[size_t(i)].table = makeK1Function(K1Kind::CONST_I);
    }
    SpinConfig cfg = SpinConfig::from_string(3, "101100");
    DamageSeries series = classicalDamageSeries(net, cfg, 1, 8);
    REQUIRE(series.masks.size() == 9);
    REQUIRE(series.distances.size() == 9);
    CHECK(series.masks[0].get(1));
    CHECK(series.distances[0] == 1);
    for (size_t t = 0; t <= 8; t++) {
        // with identity logic the lone difference shuttles between the two
        // registers of the seeded node and never reaches another node
        CHECK_FALSE(series.masks[t].get(0));
        CHECK_FALSE(series.masks[t].get(2));
        CHECK(series.distances[t] == (t % 2 == 0 ? 1 : 0));
    }
}

TEST_CASE("copy-loop damage is periodic with the known maxima") {
    struct Expect {
        int n;
        uint64_t period;
        size_t maxDistance;
    };
    // the four power-of-two sizes walk up the Fibonacci numbers
    const Expect table[] = {
        {2, 6, 1}, {4, 12, 2}, {8, 24, 3}, {12, 60, 5}, {16, 48, 5},
    };
    for (const Expect &e : table) {
        CAPTURE(e.n);
        Network net = copyLoop(e.n);
        SpinConfig cfg(e.n);
        size_t steps = size_t(3 * e.period);
        DamageSeries series = classicalDamageSeries(net, cfg, 0, steps);
        size_t maxDistance = 0;
        for (size_t t = 0; t < e.period; t++) {
            maxDistance = std::max(maxDistance, series.distances[t]);
        }
        CHECK(maxDistance == e.maxDistance);
        for (size_t t = 0; t + e.period <= steps; t++) {
            CHECK(series.masks[t + e.period] == series.masks[t]);
        }
    }
}

TEST_CASE("damage evolution is blind to copy versus negate") {
    for (uint64_t seed : {5u, 6u}) {
        Network a = randomK1Network(10, seed, FunctionWeights{1, 1, 1, 1});
        Network b = a;
        for (Node &node : b.nodes) {
            std::string bits = node.table.to_bits();
            if (bits == "01") {
                node.table = makeK1Function(K1Kind::NOT);
            } else if (bits == "10") {
                node.table = makeK1Function(K1Kind::COPY);
            }
        }
        SpinConfig cfg = SpinConfig::from_string(10, "01100011101011110000");
        DamageSeries da = classicalDamageSeries(a, cfg, 4, 60);
        DamageSeries db = classicalDamageSeries(b, cfg, 4, 60);
        for (size_t t = 0; t < da.masks.size(); t++) {
            CHECK(da.masks[t] == db.masks[t]);
        }
    }
}

TEST_CASE("the reference automaton reproduces textbook patterns") {
    SUBCASE("an empty row stays empty") {
        BitVec row(16);
        for (const BitVec &r : rule90Oracle(row, 10)) {
            CHECK_FALSE(r.any());
        }
    }
    SUBCASE("a lone seed unfolds into the parity-of-binomials gasket") {
        size_t width = 41, center = 20;
        BitVec row(width);
        row.set(center, true);
        std::vector<BitVec> grid = rule90Oracle(row, 16);
        REQUIRE(grid.size() == 17);
        for (uint64_t m = 0; m <= 16; m++) {
            for (size_t c = 0; c < width; c++) {
                int64_t d = int64_t(c) - int64_t(center);
                // offset d from the seed appears when C(m, (m+d)/2) is odd
                bool expected = uint64_t(std::abs(d)) <= m &&
                                (m + uint64_t(std::abs(d))) % 2 == 0 &&
                                oddBinomial(m, uint64_t(int64_t(m) + d) / 2);
                CHECK(grid[m].get(c) == expected);
            }
        }
    }
}

TEST_CASE("loop damage equals the automaton with space and time exchanged") {
    const int n = 12, j0 = 5;
    const size_t period = 60;
    Network net = copyLoop(n);
    SpinConfig cfg = SpinConfig::from_string(n, "010011101101001110110100");
    DamageSeries damage = classicalDamageSeries(net, cfg, j0, period);

    // one full period of the perturbed node's own history seeds the oracle;
    // oracle row m then repeats the history of the node m places upstream
    BitVec seedRow(period);
    for (size_t t = 0; t < period; t++) {
        seedRow.set(t, damage.masks[t].get(size_t(j0)));
    }
    std::vector<BitVec> oracle = rule90Oracle(seedRow, n - 1);
    for (int m = 0; m < n; m++) {
        int node = (j0 + m) % n;
        for (size_t t = 0; t < period; t++) {
            CAPTURE(m);
            CAPTURE(t);
            CHECK(oracle[size_t(m)].get(t) == damage.masks[t].get(size_t(node)));
        }
    }
}

TEST_CASE("chain damage equals the automaton inside the light cone") {
    const int n = 12, last = n - 1;
    const size_t steps = 40;
    Network net(n);
    net.nodes[0].inputs = {};
    net.nodes[0].table = TruthTable::from_bits("0");
    for (int i = 1; i < n; i++) {
        net.nodes[size_t(i)].inputs = {i - 1};
        net.nodes[size_t(i)].table = makeK1Function(K1Kind::COPY);
    }
    DamageSeries damage = classicalDamageSeries(net, SpinConfig(n), last, steps);

    BitVec seedRow(steps + 1);
    for (size_t t = 0; t <= steps; t++) {
        seedRow.set(t, damage.masks[t].get(size_t(last)));
    }
    std::vector<BitVec> oracle = rule90Oracle(seedRow, size_t(n - 2));
    for (int m = 0; m <= n - 2; m++) {
        // without the wrap-around the reconstruction is only valid where the
        // boundary has not propagated in yet
        for (size_t t = size_t(m); t + size_t(m) <= steps; t++) {
            CAPTURE(m);
            CAPTURE(t);
            CHECK(oracle[size_t(m)].get(t) == damage.masks[t].get(size_t(last - m)));
        }
    }
}
