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

#include "qlnet/experiments.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "qlnet/pauliframe.hpp"
#include "qlnet/rng.hpp"

namespace qlnet {

const char *to_string(EnsembleMode m) {
    switch (m) {
        case EnsembleMode::CLASSICAL:
            return "classical";
        case EnsembleMode::QUANTUM_ALL_H:
            return "quantum";
    }
    return "?";
}

EnsembleMode ensembleModeFromString(const std::string &s) {
    if (s == "classical") {
        return EnsembleMode::CLASSICAL;
    }
    if (s == "quantum") {
        return EnsembleMode::QUANTUM_ALL_H;
    }
    throw ParseError("unknown ensemble mode: " + s);
}

namespace {

struct Realization {
    double timeMean = 0;
    double timeMax = 0;
    int componentSize = 0;
};

Realization runOne(const EnsembleConfig &cfg, int n, int index) {
    uint64_t netSeed = derive_seed(cfg.seed, static_cast<uint64_t>(n),
                                   static_cast<uint64_t>(index), 0);
    Network net = randomK1Network(n, netSeed, cfg.functionWeights,
                                  cfg.mode == EnsembleMode::QUANTUM_ALL_H);
    std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<uint64_t>(n),
                                    static_cast<uint64_t>(index), 1));
    int node = static_cast<int>(rng_below(rng, static_cast<uint64_t>(n)));

    FrameStepper stepper(net);
    PauliFrame frame = PauliFrame::singleX(n, node);
    double sum = 0;
    size_t mx = 0;
    for (int t = 0; t < cfg.steps; t++) {
        size_t h = frame.hamming();
        sum += static_cast<double>(h);
        mx = std::max(mx, h);
        stepper.step(frame);
    }

    Realization r;
    r.timeMean = sum / cfg.steps;
    r.timeMax = static_cast<double>(mx);
    r.componentSize = static_cast<int>(decompose(net).componentOf(node).nodes.size());
    return r;
}

}  // namespace

EnsembleResult runEnsemble(const EnsembleConfig &config, int threads) {
    if (config.realizations < 1) {
        throw Error("ensemble needs at least one realization");
    }
    if (config.steps < 1) {
        throw Error("ensemble needs at least one step");
    }
    EnsembleResult result;
    result.config = config;
    for (int n : config.sizes) {
        if (n < 1) {
            throw Error("ensemble sizes must be positive");
        }
        std::vector<Realization> slots(static_cast<size_t>(config.realizations));
        auto work = [&](int index) { slots[static_cast<size_t>(index)] = runOne(config, n, index); };
        if (threads <= 1) {
            for (int r = 0; r < config.realizations; r++) {
                work(r);
            }
        } else {
            std::atomic<int> next{0};
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(threads));
            for (int t = 0; t < threads; t++) {
                pool.emplace_back([&] {
                    for (int r = next.fetch_add(1); r < config.realizations;
                         r = next.fetch_add(1)) {
                        work(r);
                    }
                });
            }
            for (auto &th : pool) {
                th.join();
            }
        }

        EnsembleResult::PerSize agg;
        agg.n = n;
        double count = static_cast<double>(config.realizations);
        for (const Realization &r : slots) {
            agg.meanHamming += r.timeMean;
            agg.meanTimeMax += r.timeMax;
            agg.componentSizeHistogram[r.componentSize]++;
        }
        agg.meanHamming /= count;
        agg.meanTimeMax /= count;
        if (config.realizations > 1) {
            double ss = 0;
            for (const Realization &r : slots) {
                double d = r.timeMean - agg.meanHamming;
                ss += d * d;
            }
            agg.stdError = std::sqrt(ss / (count * (count - 1)));
        }
        result.perSize.push_back(std::move(agg));
    }
    return result;
}

ComponentStats componentStats(int n, uint64_t networks, uint64_t seed,
                              const FunctionWeights &weights) {
    ComponentStats stats;
    stats.networks = networks;
    for (uint64_t s = 0; s < networks; s++) {
        Network net = randomK1Network(n, derive_seed(seed, static_cast<uint64_t>(n), s, 2),
                                      weights, false);
        ComponentReport report = decompose(net);
        for (const auto &comp : report.components) {
            int size = static_cast<int>(comp.nodes.size());
            stats.sizeHistogram[size]++;
            stats.classBySize[size][comp.cls]++;
        }
    }
    return stats;
}

}  // namespace qlnet
