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

#ifndef QLNET_EXPERIMENTS_HPP
#define QLNET_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qlnet/netmodel.hpp"

namespace qlnet {

enum class EnsembleMode : uint8_t {
    CLASSICAL = 0,      // no Hadamard flags
    QUANTUM_ALL_H = 1,  // Hadamard on every node
};

const char *to_string(EnsembleMode m);
EnsembleMode ensembleModeFromString(const std::string &s);

struct EnsembleConfig {
    std::vector<int> sizes;
    int realizations = 1000;
    int steps = 200;
    uint64_t seed = 1;
    EnsembleMode mode = EnsembleMode::CLASSICAL;
    FunctionWeights functionWeights{};
};

/// Aggregates over the single-perturbation damage statistic: for each
/// realization the Hamming distance is averaged over a window of
/// config.steps snapshots starting with the seeded frame (its maximum over
/// the same window is kept too), then averaged over realizations.
struct EnsembleResult {
    struct PerSize {
        int n = 0;
        double meanHamming = 0;   // mean over realizations of time-mean distance
        double stdError = 0;      // standard error of that mean
        double meanTimeMax = 0;   // mean over realizations of time-max distance
        std::map<int, uint64_t> componentSizeHistogram;  // of perturbed components
    };
    EnsembleConfig config;
    std::vector<PerSize> perSize;
};

/// Runs the ensemble: per realization a fresh random single-input network,
/// a uniformly chosen perturbed node seeded with a single X on its target
/// qubit, and a damage run of config.steps steps. Every realization's rng
/// seed is derived from (seed, size, index) -- the mode only toggles the
/// Hadamard flags, so runs that differ only in mode draw paired networks --
/// and per-realization statistics are reduced in index order, so any
/// thread count gives bit-identical results.
EnsembleResult runEnsemble(const EnsembleConfig &config, int threads = 1);

/// Component statistics over an ensemble of random single-input networks.
struct ComponentStats {
    uint64_t networks = 0;
    std::map<int, uint64_t> sizeHistogram;                      // component size -> count
    std::map<int, std::map<ComponentClass, uint64_t>> classBySize;
};

ComponentStats componentStats(int n, uint64_t networks, uint64_t seed,
                              const FunctionWeights &weights = {});

}  // namespace qlnet

#endif
