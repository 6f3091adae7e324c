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

#include "qlnet/statevec.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <utility>

namespace qlnet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Sparse = Eigen::SparseMatrix<std::complex<double>>;
using Triplet = Eigen::Triplet<std::complex<double>>;

size_t dimFor(int n) { return size_t{1} << (2 * n); }

Sparse hadamardGate(int n, int qubit) {
    size_t dim = dimFor(n);
    size_t bit = size_t{1} << qubit;
    double inv = 1.0 / std::sqrt(2.0);
    std::vector<Triplet> trip;
    trip.reserve(2 * dim);
    for (size_t b = 0; b < dim; b++) {
        size_t lo = b & ~bit, hi = b | bit;
        if (b & bit) {
            trip.emplace_back(lo, b, inv);
            trip.emplace_back(hi, b, -inv);
        } else {
            trip.emplace_back(lo, b, inv);
            trip.emplace_back(hi, b, inv);
        }
    }
    Sparse g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    g.setFromTriplets(trip.begin(), trip.end());
    return g;
}

// Controls are (qubit, required bit) pairs; conflicting requirements on the
// same qubit make the gate the identity.
Sparse controlledX(int n, const std::vector<std::pair<int, int>> &controls, int target) {
    size_t dim = dimFor(n);
    size_t cmask = 0, cpat = 0;
    bool conflict = false;
    for (auto [q, want] : controls) {
        size_t bit = size_t{1} << q;
        if (cmask & bit) {
            if (((cpat & bit) != 0) != (want != 0)) {
                conflict = true;
            }
        } else {
            cmask |= bit;
            if (want) {
                cpat |= bit;
            }
        }
    }
    size_t tbit = size_t{1} << target;
    std::vector<Triplet> trip;
    trip.reserve(dim);
    for (size_t b = 0; b < dim; b++) {
        size_t row = (!conflict && (b & cmask) == cpat) ? (b ^ tbit) : b;
        trip.emplace_back(row, b, 1.0);
    }
    Sparse g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    g.setFromTriplets(trip.begin(), trip.end());
    return g;
}

Sparse registerSwap(int n) {
    size_t dim = dimFor(n);
    size_t lowMask = (size_t{1} << n) - 1;
    std::vector<Triplet> trip;
    trip.reserve(dim);
    for (size_t b = 0; b < dim; b++) {
        size_t row = ((b & lowMask) << n) | (b >> n);
        trip.emplace_back(row, b, 1.0);
    }
    Sparse g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    g.setFromTriplets(trip.begin(), trip.end());
    return g;
}

}  // namespace

StateVector StateVector::basis(int n, size_t index) {
    StateVector psi;
    psi.n = n;
    size_t dim = dimFor(n);
    if (index >= dim) {
        throw Error("basis index out of range");
    }
    psi.amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    psi.amps[static_cast<Eigen::Index>(index)] = 1.0;
    return psi;
}

StateVector StateVector::fromConfig(const SpinConfig &cfg) {
    size_t index = 0;
    for (size_t i = 0; i < 2 * static_cast<size_t>(cfg.n); i++) {
        if (cfg.bits.get(i)) {
            index |= size_t{1} << i;
        }
    }
    return basis(cfg.n, index);
}

Propagator buildPropagator(const Network &net, int nCap) {
    if (net.n > nCap) {
        throw DimensionCap("network too large for a dense step operator");
    }
    int n = net.n;
    size_t dim = dimFor(n);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim),
                                                    static_cast<Eigen::Index>(dim));
    for (int i = 0; i < n; i++) {
        if (net.nodes[i].hadamard) {
            u = hadamardGate(n, i) * u;
        }
    }
    for (int i = 0; i < n; i++) {
        const Node &node = net.nodes[i];
        int k = node.table.k;
        for (size_t r = 0; r < node.table.rows(); r++) {
            if (node.table.entries[r] != Action::FLIP) {
                continue;
            }
            std::vector<std::pair<int, int>> controls;
            controls.reserve(static_cast<size_t>(k));
            for (int j = 0; j < k; j++) {
                controls.emplace_back(n + node.inputs[static_cast<size_t>(j)],
                                      static_cast<int>((r >> j) & 1));
            }
            u = controlledX(n, controls, i) * u;
        }
    }
    u = registerSwap(n) * u;
    return u;
}

void applyStep(const Network &net, StateVector &psi) {
    int n = net.n;
    size_t dim = dimFor(n);
    if (psi.n != n || psi.amps.size() != static_cast<Eigen::Index>(dim)) {
        throw Error("state size does not match the network");
    }
    auto &a = psi.amps;
    double inv = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; i++) {
        if (!net.nodes[i].hadamard) {
            continue;
        }
        size_t bit = size_t{1} << i;
        for (size_t b = 0; b < dim; b++) {
            if (b & bit) {
                continue;
            }
            std::complex<double> a0 = a[static_cast<Eigen::Index>(b)];
            std::complex<double> a1 = a[static_cast<Eigen::Index>(b | bit)];
            a[static_cast<Eigen::Index>(b)] = (a0 + a1) * inv;
            a[static_cast<Eigen::Index>(b | bit)] = (a0 - a1) * inv;
        }
    }
    for (int i = 0; i < n; i++) {
        const Node &node = net.nodes[i];
        int k = node.table.k;
        size_t tbit = size_t{1} << i;
        for (size_t r = 0; r < node.table.rows(); r++) {
            if (node.table.entries[r] != Action::FLIP) {
                continue;
            }
            size_t cmask = 0, cpat = 0;
            bool conflict = false;
            for (int j = 0; j < k; j++) {
                size_t bit = size_t{1} << (n + node.inputs[static_cast<size_t>(j)]);
                int want = static_cast<int>((r >> j) & 1);
                if (cmask & bit) {
                    if (((cpat & bit) != 0) != (want != 0)) {
                        conflict = true;
                    }
                } else {
                    cmask |= bit;
                    if (want) {
                        cpat |= bit;
                    }
                }
            }
            if (conflict) {
                continue;
            }
            for (size_t b = 0; b < dim; b++) {
                if ((b & cmask) == cpat && !(b & tbit)) {
                    std::swap(a[static_cast<Eigen::Index>(b)],
                              a[static_cast<Eigen::Index>(b ^ tbit)]);
                }
            }
        }
    }
    size_t lowMask = (size_t{1} << n) - 1;
    Eigen::VectorXcd out(static_cast<Eigen::Index>(dim));
    for (size_t b = 0; b < dim; b++) {
        size_t row = ((b & lowMask) << n) | (b >> n);
        out[static_cast<Eigen::Index>(row)] = a[static_cast<Eigen::Index>(b)];
    }
    a = std::move(out);
}

StateVector applyPauli(const PauliFrame &frame, const StateVector &psi) {
    int half = frame.n();
    if (psi.n != half) {
        throw Error("frame size does not match the state");
    }
    size_t dim = dimFor(half);
    size_t xflip = 0, phasemask = 0;
    int nY = 0;
    for (size_t q = 0; q < frame.labels.size(); q++) {
        Pauli p = frame.labels[q];
        if (p == Pauli::X || p == Pauli::Y) {
            xflip |= size_t{1} << q;
        }
        if (p == Pauli::Y || p == Pauli::Z) {
            phasemask |= size_t{1} << q;
        }
        if (p == Pauli::Y) {
            nY++;
        }
    }
    static const std::complex<double> iPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> global = iPow[nY % 4] * static_cast<double>(frame.sign);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(dim));
    for (size_t b = 0; b < dim; b++) {
        double par = (std::popcount(b & phasemask) % 2 == 0) ? 1.0 : -1.0;
        out[static_cast<Eigen::Index>(b ^ xflip)] =
            global * par * psi.amps[static_cast<Eigen::Index>(b)];
    }
    StateVector result;
    result.n = psi.n;
    result.amps = std::move(out);
    return result;
}

std::optional<std::pair<uint64_t, uint64_t>> phaseAsRootOfUnity(double phase, uint64_t Lmax,
                                                                double tol) {
    double x = phase / kTwoPi;
    x -= std::floor(x);
    // Continued-fraction convergents of x, smallest matching denominator wins.
    double y = x;
    uint64_t pPrev = 1, qPrev = 0;
    uint64_t pCur = static_cast<uint64_t>(std::floor(y)), qCur = 1;
    for (int iter = 0; iter < 64; iter++) {
        if (qCur > Lmax) {
            break;
        }
        double approx = static_cast<double>(pCur) / static_cast<double>(qCur);
        if (std::abs(x - approx) * kTwoPi <= tol) {
            uint64_t k = pCur % qCur;
            uint64_t g = std::gcd(k, qCur);
            return std::make_pair(k / g, qCur / g);
        }
        double frac = y - std::floor(y);
        if (frac < 1e-18) {
            break;
        }
        y = 1.0 / frac;
        uint64_t a = static_cast<uint64_t>(std::floor(y));
        uint64_t pNext = a * pCur + pPrev;
        uint64_t qNext = a * qCur + qPrev;
        pPrev = pCur;
        qPrev = qCur;
        pCur = pNext;
        qCur = qNext;
    }
    return std::nullopt;
}

namespace {

std::vector<uint64_t> recoverCycleLengths(
    const std::vector<SpectrumReport::Line> &lines) {
    std::map<std::pair<uint64_t, uint64_t>, long long> counts;
    for (const auto &line : lines) {
        if (!line.rootOfUnity) {
            return {};
        }
        counts[*line.rootOfUnity] += static_cast<long long>(line.degeneracy);
    }
    std::vector<uint64_t> result;
    while (true) {
        uint64_t best = 0;
        for (const auto &[frac, count] : counts) {
            if (count > 0) {
                best = std::max(best, frac.second);
            }
        }
        if (best == 0) {
            break;
        }
        for (uint64_t d = 1; d <= best; d++) {
            if (best % d != 0) {
                continue;
            }
            for (uint64_t k = 0; k < d; k++) {
                if (std::gcd(k, d) != 1 && !(k == 0 && d == 1)) {
                    continue;
                }
                if (--counts[{k, d}] < 0) {
                    return {};
                }
            }
        }
        result.push_back(best);
    }
    std::sort(result.rbegin(), result.rend());
    return result;
}

}  // namespace

SpectrumReport spectrum(const Propagator &u, double tol, uint64_t Lmax, double unitaryTol) {
    if (u.rows() != u.cols() || u.rows() == 0) {
        throw Error("step operator must be a non-empty square matrix");
    }
    Eigen::MatrixXcd gram = u.adjoint() * u;
    gram.diagonal().array() -= 1.0;
    if (gram.cwiseAbs().maxCoeff() > unitaryTol) {
        throw NotUnitary("step operator is not unitary within tolerance");
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u, false);
    if (solver.info() != Eigen::Success) {
        throw Error("eigenvalue computation failed");
    }
    std::vector<std::complex<double>> values(solver.eigenvalues().data(),
                                             solver.eigenvalues().data() + u.rows());
    std::vector<std::pair<double, std::complex<double>>> byPhase;
    byPhase.reserve(values.size());
    for (auto v : values) {
        double phase = std::arg(v);
        if (phase < 0) {
            phase += kTwoPi;
        }
        byPhase.emplace_back(phase, v);
    }
    std::sort(byPhase.begin(), byPhase.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });

    std::vector<std::vector<std::complex<double>>> clusters;
    for (size_t i = 0; i < byPhase.size(); i++) {
        if (i == 0 || byPhase[i].first - byPhase[i - 1].first > tol) {
            clusters.emplace_back();
        }
        clusters.back().push_back(byPhase[i].second);
    }
    // Phases straddling the 0/2-pi seam belong to one cluster.
    if (clusters.size() >= 2) {
        double low = byPhase.front().first;
        double high = byPhase.back().first;
        if (low + kTwoPi - high <= tol) {
            for (auto v : clusters.back()) {
                clusters.front().push_back(v);
            }
            clusters.pop_back();
        }
    }

    SpectrumReport report;
    for (const auto &cluster : clusters) {
        std::complex<double> sum = 0;
        for (auto v : cluster) {
            sum += v;
        }
        std::complex<double> rep = sum / std::abs(sum);
        double phase = std::arg(rep);
        if (phase < 0) {
            phase += kTwoPi;
        }
        SpectrumReport::Line line;
        line.phase = phase;
        line.value = rep;
        line.degeneracy = static_cast<int>(cluster.size());
        line.rootOfUnity = phaseAsRootOfUnity(phase, Lmax, std::max(tol, 1e-12));
        report.lines.push_back(line);
    }
    std::sort(report.lines.begin(), report.lines.end(),
              [](const auto &a, const auto &b) { return a.phase < b.phase; });
    report.cycleLengths = recoverCycleLengths(report.lines);
    return report;
}

std::optional<uint64_t> checkCliffordPeriodicity(const Propagator &u, uint64_t maxPower,
                                                 double tol) {
    if (u.rows() != u.cols() || u.rows() == 0) {
        throw Error("step operator must be a non-empty square matrix");
    }
    Eigen::MatrixXcd gram = u.adjoint() * u;
    gram.diagonal().array() -= 1.0;
    if (gram.cwiseAbs().maxCoeff() > 1e-10) {
        throw NotUnitary("step operator is not unitary within tolerance");
    }
    Eigen::MatrixXcd v = u;
    for (uint64_t m = 2; m <= maxPower; m++) {
        v = u * v;
        std::complex<double> overlap = (u.conjugate().cwiseProduct(v)).sum();
        if (std::abs(overlap) < 1e-12) {
            continue;
        }
        std::complex<double> phase = overlap / std::abs(overlap);
        double diff = (v - phase * u).cwiseAbs().maxCoeff();
        if (diff <= tol) {
            return m;
        }
    }
    return std::nullopt;
}

}  // namespace qlnet
