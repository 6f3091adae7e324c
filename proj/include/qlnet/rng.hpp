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

#ifndef QLNET_RNG_HPP
#define QLNET_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace qlnet {

/// splitmix64 finalizer; used to derive well-mixed child seeds from a base
/// seed plus a stream index so that results never depend on thread count.
inline uint64_t mix_seed(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    return mix_seed(base ^ mix_seed(a ^ mix_seed(b ^ mix_seed(c))));
}

/// Draws below use fixed algorithms on top of mt19937_64 instead of the
/// standard distribution objects, whose exact output is
/// implementation-defined; this keeps seeded runs reproducible everywhere.
inline uint64_t rng_u64(std::mt19937_64 &rng) {
    return rng();
}

/// Uniform integer in [0, bound) by rejection, bound >= 1.
inline uint64_t rng_below(std::mt19937_64 &rng, uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double rng_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Index drawn from unnormalized nonnegative weights.
inline size_t rng_weighted(std::mt19937_64 &rng, const std::vector<double> &weights) {
    double total = 0;
    for (double w : weights) {
        total += w;
    }
    double x = rng_unit(rng) * total;
    double acc = 0;
    for (size_t i = 0; i < weights.size(); i++) {
        acc += weights[i];
        if (x < acc) {
            return i;
        }
    }
    return weights.size() - 1;
}

}  // namespace qlnet

#endif
