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

#ifndef QLNET_NETMODEL_HPP
#define QLNET_NETMODEL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qlnet/errors.hpp"

namespace qlnet {

/// Per-row action of a node's update gate. A FLIP row applies an X to the
/// node's target qubit when the control register matches the row pattern;
/// classically it complements the node's two-steps-old value.
enum class Action : uint8_t {
    IDENTITY = 0,
    FLIP = 1,
};

/// Update table of one node over k inputs: 2^k rows, one per input bit
/// pattern. Row index bit j is the value of input j (lowest input first).
struct TruthTable {
    int k = 0;
    std::vector<Action> entries;

    TruthTable() = default;
    TruthTable(int k_, std::vector<Action> entries_);

    /// Parse from a {0,1} string, one character per row, '1' = FLIP.
    static TruthTable from_bits(const std::string &bits);
    std::string to_bits() const;

    Action at(size_t row) const { return entries[row]; }
    size_t rows() const { return entries.size(); }
};

/// Named single-input table shapes. COPY flips when the input bit is 1
/// (a controlled-X activated by |1>), NOT flips when it is 0.
enum class K1Kind : uint8_t {
    CONST_I = 0,
    CONST_X = 1,
    COPY = 2,
    NOT = 3,
};

TruthTable makeK1Function(K1Kind kind);

struct Node {
    std::vector<int> inputs;  // node indices feeding this node's table
    TruthTable table;
    bool hadamard = false;  // apply H to this node's target qubit each step
};

/// A network of n nodes. The matching circuit uses 2n qubits: positions
/// 0..n-1 are the target qubits (previous values at the start of a step)
/// and positions n..2n-1 are the control qubits (current values).
struct Network {
    int n = 0;
    std::vector<Node> nodes;

    Network() = default;
    explicit Network(int n_) : n(n_), nodes(static_cast<size_t>(n_)) {}

    bool anyHadamard() const;
    /// Throws ParseError when the wiring or a table is malformed.
    void validate() const;
};

/// Indices of the inputs whose value can change the table's action for at
/// least one setting of the remaining inputs. Constant-shaped tables have
/// none; duplicate input wires are reported once.
std::vector<int> effectiveInputs(const Node &node);

enum class ComponentClass : uint8_t {
    SIMPLE_LOOP = 0,      // single directed cycle, no attachments
    SIMPLE_CHAIN = 1,     // path rooted at a constant node
    LOOP_WITH_TREES = 2,  // cycle with at least one attached tree
    CHAIN_WITH_TREES = 3, // constant-rooted tree system that is not a path
};

const char *to_string(ComponentClass c);

/// Partition of the nodes into weakly connected components of the
/// effective-input graph (edges j -> i when j is an effective input of i).
struct ComponentReport {
    struct Component {
        std::vector<int> nodes;  // sorted ascending
        ComponentClass cls;
    };
    std::vector<Component> components;
    std::vector<std::pair<int, int>> effectiveEdges;  // (from, to), sorted

    const Component &componentOf(int node) const;
};

/// Requires every node to have at most one effective input, else throws
/// NotFunctionalGraph.
ComponentReport decompose(const Network &net);

struct FunctionWeights {
    double const_i = 1;
    double const_x = 1;
    double copy = 1;
    double not_ = 1;
};

/// Random network in which every node has exactly one input, drawn
/// uniformly over all n nodes (self-input allowed), and a table kind drawn
/// from the given weights. Deterministic for a fixed seed.
Network randomK1Network(int n, uint64_t seed, const FunctionWeights &weights = {},
                        bool hadamardAll = false);

/// Text format, one network per file:
///
///   qlnet v1
///   nodes <n>
///   node <i> inputs <j0>[,<j1>...] table <bits> hadamard <0|1>
///
/// `inputs -` denotes a zero-input node. Lines starting with '#' are
/// comments and are ignored.
Network readNetwork(std::istream &in);
Network readNetworkFile(const std::string &path);
void writeNetwork(std::ostream &out, const Network &net,
                  const std::vector<std::string> &commentLines = {});
void writeNetworkFile(const std::string &path, const Network &net,
                      const std::vector<std::string> &commentLines = {});

}  // namespace qlnet

#endif
