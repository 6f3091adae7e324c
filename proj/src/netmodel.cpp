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

#include "qlnet/netmodel.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qlnet/rng.hpp"

namespace qlnet {

TruthTable::TruthTable(int k_, std::vector<Action> entries_)
    : k(k_), entries(std::move(entries_)) {
    if (k < 0 || entries.size() != (size_t{1} << k)) {
        throw ParseError("truth table must have exactly 2^k entries");
    }
}

TruthTable TruthTable::from_bits(const std::string &bits) {
    if (bits.empty() || (bits.size() & (bits.size() - 1)) != 0) {
        throw ParseError("truth table bit string length must be a power of two: '" + bits + "'");
    }
    int k = 0;
    while ((size_t{1} << k) < bits.size()) {
        k++;
    }
    std::vector<Action> entries;
    entries.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ParseError("truth table bit string may only contain 0 and 1");
        }
        entries.push_back(c == '1' ? Action::FLIP : Action::IDENTITY);
    }
    return TruthTable(k, std::move(entries));
}

std::string TruthTable::to_bits() const {
    std::string s;
    s.reserve(entries.size());
    for (Action a : entries) {
        s.push_back(a == Action::FLIP ? '1' : '0');
    }
    return s;
}

TruthTable makeK1Function(K1Kind kind) {
    switch (kind) {
        case K1Kind::CONST_I:
            return TruthTable(1, {Action::IDENTITY, Action::IDENTITY});
        case K1Kind::CONST_X:
            return TruthTable(1, {Action::FLIP, Action::FLIP});
        case K1Kind::COPY:
            return TruthTable(1, {Action::IDENTITY, Action::FLIP});
        case K1Kind::NOT:
            return TruthTable(1, {Action::FLIP, Action::IDENTITY});
    }
    throw Error("unknown K1 kind");
}

bool Network::anyHadamard() const {
    for (const Node &node : nodes) {
        if (node.hadamard) {
            return true;
        }
    }
    return false;
}

void Network::validate() const {
    if (n < 1 || nodes.size() != static_cast<size_t>(n)) {
        throw ParseError("network must have at least one node");
    }
    for (const Node &node : nodes) {
        if (node.inputs.size() != static_cast<size_t>(node.table.k)) {
            throw ParseError("node input count does not match its table arity");
        }
        for (int j : node.inputs) {
            if (j < 0 || j >= n) {
                throw ParseError("node input index out of range");
            }
        }
    }
}

std::vector<int> effectiveInputs(const Node &node) {
    int k = node.table.k;
    std::vector<int> wires;
    std::vector<size_t> wireOf(static_cast<size_t>(k));
    for (int j = 0; j < k; j++) {
        auto it = std::find(wires.begin(), wires.end(), node.inputs[static_cast<size_t>(j)]);
        if (it == wires.end()) {
            wireOf[static_cast<size_t>(j)] = wires.size();
            wires.push_back(node.inputs[static_cast<size_t>(j)]);
        } else {
            wireOf[static_cast<size_t>(j)] = static_cast<size_t>(it - wires.begin());
        }
    }
    // Duplicate wires always carry equal bits, so the action is examined
    // only over assignments of the distinct source values.
    auto actionFor = [&](size_t assign) {
        size_t row = 0;
        for (int j = 0; j < k; j++) {
            if ((assign >> wireOf[static_cast<size_t>(j)]) & 1) {
                row |= size_t{1} << j;
            }
        }
        return node.table.at(row);
    };
    std::vector<int> result;
    size_t d = wires.size();
    for (size_t w = 0; w < d; w++) {
        bool effective = false;
        for (size_t assign = 0; assign < (size_t{1} << d) && !effective; assign++) {
            if ((assign >> w) & 1) {
                continue;
            }
            if (actionFor(assign) != actionFor(assign | (size_t{1} << w))) {
                effective = true;
            }
        }
        if (effective) {
            result.push_back(wires[w]);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

const char *to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::SIMPLE_LOOP:
            return "SIMPLE_LOOP";
        case ComponentClass::SIMPLE_CHAIN:
            return "SIMPLE_CHAIN";
        case ComponentClass::LOOP_WITH_TREES:
            return "LOOP_WITH_TREES";
        case ComponentClass::CHAIN_WITH_TREES:
            return "CHAIN_WITH_TREES";
    }
    return "?";
}

const ComponentReport::Component &ComponentReport::componentOf(int node) const {
    for (const Component &c : components) {
        if (std::binary_search(c.nodes.begin(), c.nodes.end(), node)) {
            return c;
        }
    }
    throw Error("node not covered by any component");
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ComponentReport decompose(const Network &net) {
    net.validate();
    ComponentReport report;
    for (int i = 0; i < net.n; i++) {
        std::vector<int> eff = effectiveInputs(net.nodes[i]);
        if (eff.size() > 1) {
            throw NotFunctionalGraph("node " + std::to_string(i) + " has " +
                                     std::to_string(eff.size()) + " effective inputs");
        }
        if (eff.size() == 1) {
            report.effectiveEdges.emplace_back(eff[0], i);
        }
    }
    std::sort(report.effectiveEdges.begin(), report.effectiveEdges.end());

    UnionFind uf(net.n);
    for (auto [from, to] : report.effectiveEdges) {
        uf.unite(from, to);
    }
    std::vector<std::vector<int>> groups(net.n);
    for (int i = 0; i < net.n; i++) {
        groups[uf.find(i)].push_back(i);
    }

    std::vector<int> indeg(net.n, 0), outdeg(net.n, 0);
    for (auto [from, to] : report.effectiveEdges) {
        outdeg[from]++;
        indeg[to]++;
    }

    for (const std::vector<int> &members : groups) {
        if (members.empty()) {
            continue;
        }
        int roots = 0;
        int maxOut = 0;
        for (int v : members) {
            if (indeg[v] == 0) {
                roots++;
            }
            maxOut = std::max(maxOut, outdeg[v]);
        }
        // With at most one effective input per node, a weakly connected
        // component holds either exactly one directed cycle (no root) or
        // exactly one constant-rooted tree system (one root).
        ComponentClass cls;
        if (roots == 0) {
            bool pureCycle = maxOut == 1;
            cls = pureCycle ? ComponentClass::SIMPLE_LOOP : ComponentClass::LOOP_WITH_TREES;
        } else {
            bool path = maxOut <= 1;
            cls = path ? ComponentClass::SIMPLE_CHAIN : ComponentClass::CHAIN_WITH_TREES;
        }
        report.components.push_back({members, cls});
    }
    std::sort(report.components.begin(), report.components.end(),
              [](const auto &a, const auto &b) { return a.nodes[0] < b.nodes[0]; });
    return report;
}

Network randomK1Network(int n, uint64_t seed, const FunctionWeights &weights, bool hadamardAll) {
    if (n < 1) {
        throw Error("network size must be positive");
    }
    std::vector<double> w = {weights.const_i, weights.const_x, weights.copy, weights.not_};
    double total = 0;
    for (double x : w) {
        if (x < 0) {
            throw Error("function weights must be nonnegative");
        }
        total += x;
    }
    if (total <= 0) {
        throw Error("function weights must not all be zero");
    }
    std::mt19937_64 rng(seed);
    Network net(n);
    for (int i = 0; i < n; i++) {
        int input = static_cast<int>(rng_below(rng, static_cast<uint64_t>(n)));
        auto kind = static_cast<K1Kind>(rng_weighted(rng, w));
        net.nodes[i].inputs = {input};
        net.nodes[i].table = makeK1Function(kind);
        net.nodes[i].hadamard = hadamardAll;
    }
    return net;
}

namespace {

std::string nextDataLine(std::istream &in) {
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        size_t end = line.find_last_not_of(" \t\r");
        return line.substr(start, end - start + 1);
    }
    return {};
}

}  // namespace

Network readNetwork(std::istream &in) {
    if (nextDataLine(in) != "qlnet v1") {
        throw ParseError("missing 'qlnet v1' header");
    }
    std::istringstream header(nextDataLine(in));
    std::string word;
    int n = 0;
    if (!(header >> word >> n) || word != "nodes" || n < 1) {
        throw ParseError("expected 'nodes <n>' after the header");
    }
    Network net(n);
    std::vector<bool> seen(n, false);
    for (int count = 0; count < n; count++) {
        std::istringstream ls(nextDataLine(in));
        std::string nodeWord, inputsWord, inputsSpec, tableWord, tableBits, hWord;
        int i = -1, h = -1;
        if (!(ls >> nodeWord >> i >> inputsWord >> inputsSpec >> tableWord >> tableBits >> hWord >>
              h) ||
            nodeWord != "node" || inputsWord != "inputs" || tableWord != "table" ||
            hWord != "hadamard" || (h != 0 && h != 1)) {
            throw ParseError("malformed node line");
        }
        if (i < 0 || i >= n || seen[i]) {
            throw ParseError("bad or repeated node index");
        }
        seen[i] = true;
        Node &node = net.nodes[i];
        if (inputsSpec != "-") {
            std::istringstream is(inputsSpec);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                size_t pos = 0;
                int j = std::stoi(tok, &pos);
                if (pos != tok.size()) {
                    throw ParseError("bad input list: '" + inputsSpec + "'");
                }
                node.inputs.push_back(j);
            }
        }
        node.table = TruthTable::from_bits(tableBits);
        node.hadamard = h == 1;
    }
    std::string trailing = nextDataLine(in);
    if (!trailing.empty()) {
        throw ParseError("unexpected content after the last node line: '" + trailing + "'");
    }
    net.validate();
    return net;
}

Network readNetworkFile(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open network file: " + path);
    }
    return readNetwork(in);
}

void writeNetwork(std::ostream &out, const Network &net,
                  const std::vector<std::string> &commentLines) {
    for (const std::string &c : commentLines) {
        out << "# " << c << "\n";
    }
    out << "qlnet v1\n";
    out << "nodes " << net.n << "\n";
    for (int i = 0; i < net.n; i++) {
        const Node &node = net.nodes[i];
        out << "node " << i << " inputs ";
        if (node.inputs.empty()) {
            out << "-";
        } else {
            for (size_t j = 0; j < node.inputs.size(); j++) {
                out << (j ? "," : "") << node.inputs[j];
            }
        }
        out << " table " << node.table.to_bits() << " hadamard " << (node.hadamard ? 1 : 0)
            << "\n";
    }
}

void writeNetworkFile(const std::string &path, const Network &net,
                      const std::vector<std::string> &commentLines) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write network file: " + path);
    }
    writeNetwork(out, net, commentLines);
}

}  // namespace qlnet
