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

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qlnet/classical.hpp"
#include "qlnet/errors.hpp"
#include "qlnet/experiments.hpp"
#include "qlnet/io.hpp"
#include "qlnet/netmodel.hpp"
#include "qlnet/pauliframe.hpp"
#include "qlnet/statevec.hpp"

namespace {

std::string joinInvocation(int argc, char **argv) {
    std::string s;
    for (int i = 0; i < argc; i++) {
        if (i) {
            s += ' ';
        }
        s += argv[i];
    }
    return s;
}

std::ofstream openOut(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw qlnet::Error("cannot open output file: " + path);
    }
    return out;
}

qlnet::FunctionWeights parseWeights(const std::string &spec) {
    qlnet::FunctionWeights w;
    if (spec.empty() || spec == "uniform") {
        return w;
    }
    if (spec == "copy") {
        return {0, 0, 1, 0};
    }
    if (spec == "copynot") {
        return {0, 0, 1, 1};
    }
    // const_i,const_x,copy,not as four comma-separated weights
    std::vector<double> values;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception &) {
            throw qlnet::ParseError("bad weight value: " + item);
        }
    }
    if (values.size() != 4) {
        throw qlnet::ParseError(
            "weights must be 'uniform', 'copy', 'copynot', or four comma-separated numbers");
    }
    return {values[0], values[1], values[2], values[3]};
}

void applyHadamardChoice(qlnet::Network &net, const std::string &choice) {
    if (choice == "keep") {
        return;
    }
    bool flag = (choice == "all");
    for (auto &node : net.nodes) {
        node.hadamard = flag;
    }
}

// --- render support: re-read our own CSV emissions ---------------------

struct CsvFile {
    std::string kind;
    int nodes = -1;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvFile readCsv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw qlnet::Error("cannot open input file: " + path);
    }
    CsvFile csv;
    std::string line;
    bool sawHeader = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::string body = line.substr(1);
            size_t start = body.find_first_not_of(' ');
            body = (start == std::string::npos) ? "" : body.substr(start);
            if (body.rfind("qlnet-kind:", 0) == 0) {
                std::string v = body.substr(11);
                size_t s = v.find_first_not_of(' ');
                csv.kind = (s == std::string::npos) ? "" : v.substr(s);
            } else if (body.rfind("nodes:", 0) == 0) {
                csv.nodes = std::stoi(body.substr(6));
            }
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (line.back() == ',') {
            fields.push_back("");
        }
        if (!sawHeader) {
            csv.header = fields;
            sawHeader = true;
        } else {
            csv.rows.push_back(fields);
        }
    }
    if (csv.kind.empty()) {
        throw qlnet::ParseError("input is not a qlnet CSV (missing kind comment)");
    }
    return csv;
}

qlnet::BitVec maskFromHex(const std::string &hex, size_t n) {
    qlnet::BitVec mask(n);
    for (size_t d = 0; d < hex.size(); d++) {
        char c = hex[d];
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            throw qlnet::ParseError("bad hex digit in mask");
        }
        for (int b = 0; b < 4; b++) {
            size_t pos = 4 * d + static_cast<size_t>(b);
            if ((v >> b) & 1) {
                if (pos >= n) {
                    throw qlnet::ParseError("mask wider than the node count");
                }
                mask.set(pos, true);
            }
        }
    }
    return mask;
}

int runRender(const std::string &inPath, const std::string &outPath,
              const std::vector<std::string> &comments) {
    CsvFile csv = readCsv(inPath);
    bool wantPgm = outPath.size() >= 4 && outPath.substr(outPath.size() - 4) == ".pgm";
    std::ofstream out = openOut(outPath);
    if (csv.kind == "pattern") {
        int n = csv.nodes >= 0 ? csv.nodes : static_cast<int>(csv.header.size()) - 2;
        qlnet::DistanceSeries series;
        for (const auto &row : csv.rows) {
            qlnet::DistanceSeries::Entry e;
            for (int i = 0; i < n; i++) {
                e.visible.push_back(
                    static_cast<qlnet::Pauli>(std::stoi(row[static_cast<size_t>(i) + 1])));
            }
            e.hamming = static_cast<size_t>(std::stoul(row.back()));
            series.perStep.push_back(std::move(e));
        }
        if (wantPgm) {
            qlnet::writePatternPgm(out, series, n, comments);
        } else {
            qlnet::writePatternSvg(out, series, n, comments);
        }
        return 0;
    }
    if (csv.kind == "damage") {
        if (csv.nodes < 0) {
            throw qlnet::ParseError("damage CSV is missing its node count");
        }
        qlnet::DamageSeries series;
        for (const auto &row : csv.rows) {
            series.masks.push_back(maskFromHex(row[1], static_cast<size_t>(csv.nodes)));
            series.distances.push_back(std::stoul(row[2]));
        }
        if (wantPgm) {
            qlnet::writeMaskPgm(out, series, comments);
        } else {
            qlnet::writeMaskSvg(out, series, comments);
        }
        return 0;
    }
    if (csv.kind == "spectrum") {
        qlnet::SpectrumReport report;
        for (const auto &row : csv.rows) {
            qlnet::SpectrumReport::Line line;
            line.value = {std::stod(row[0]), std::stod(row[1])};
            line.phase = std::stod(row[2]);
            line.degeneracy = std::stoi(row[3]);
            report.lines.push_back(line);
        }
        if (wantPgm) {
            throw qlnet::Error("spectra render to SVG only");
        }
        qlnet::writeSpectrumSvg(out, report, comments);
        return 0;
    }
    throw qlnet::Error("no renderer for CSV kind: " + csv.kind);
}

}  // namespace

int main(int argc, char **argv) {
    std::string invocation = joinInvocation(argc, argv);

    CLI::App app{"reversible logic networks: generation, dynamics, spectra, perturbations"};
    app.require_subcommand(1);

    // gen
    auto *gen = app.add_subcommand("gen", "generate a random single-input network");
    int genN = 0;
    uint64_t genSeed = 1;
    std::string genWeights = "uniform", genHadamard = "none", genOut, genDot;
    gen->add_option("--n", genN, "node count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", genSeed, "rng seed");
    gen->add_option("--weights", genWeights,
                    "table kinds: uniform|copy|copynot|<4 comma weights>");
    gen->add_option("--hadamard", genHadamard, "hadamard flags")
        ->check(CLI::IsMember({"all", "none"}));
    gen->add_option("--out", genOut, "network file to write")->required();
    gen->add_option("--dot", genDot, "also write a GraphViz view");

    // step
    auto *step = app.add_subcommand("step", "advance a basis configuration");
    std::string stepNet, stepState;
    int stepCount = 1;
    bool stepInverse = false;
    step->add_option("--net", stepNet, "network file")->required();
    step->add_option("--state", stepState, "2n-bit configuration, position 0 first")
        ->required();
    step->add_option("--steps", stepCount, "number of steps")->check(CLI::NonNegativeNumber);
    step->add_flag("--inverse", stepInverse, "step backwards");

    // cycle
    auto *cycle = app.add_subcommand("cycle", "length of the orbit through a configuration");
    std::string cycleNet, cycleState;
    uint64_t cycleMax = uint64_t{1} << 32;
    cycle->add_option("--net", cycleNet, "network file")->required();
    cycle->add_option("--state", cycleState, "2n-bit configuration")->required();
    cycle->add_option("--max-steps", cycleMax, "give up after this many steps");

    // spectrum
    auto *spec = app.add_subcommand("spectrum", "eigenphases of the step operator");
    std::string specNet, specOut;
    double specTol = 1e-9;
    uint64_t specLmax = 4096;
    int specCap = 7;
    spec->add_option("--net", specNet, "network file")->required();
    spec->add_option("--out", specOut, "output prefix (.csv and .svg)")->required();
    spec->add_option("--tol", specTol, "phase clustering tolerance");
    spec->add_option("--lmax", specLmax, "largest root-of-unity denominator");
    spec->add_option("--cap", specCap, "largest node count for the dense operator");

    // perturb
    auto *pert = app.add_subcommand("perturb", "single-node damage run");
    std::string pertNet, pertHadamard = "keep", pertOut;
    int pertNode = 0, pertSteps = 200;
    pert->add_option("--net", pertNet, "network file")->required();
    pert->add_option("--node", pertNode, "perturbed node")->required();
    pert->add_option("--steps", pertSteps, "run length")->check(CLI::PositiveNumber);
    pert->add_option("--hadamard", pertHadamard, "override hadamard flags")
        ->check(CLI::IsMember({"keep", "all", "none"}));
    pert->add_option("--out", pertOut, "output prefix (.csv, .svg, .pgm)")->required();

    // ensemble
    auto *ens = app.add_subcommand("ensemble", "averaged damage over random networks");
    std::string ensSizes, ensMode = "classical", ensWeights = "uniform", ensConfig, ensOut;
    int ensRealizations = 1000, ensSteps = 200, ensThreads = 1;
    uint64_t ensSeed = 1;
    ens->add_option("--sizes", ensSizes, "comma-separated node counts");
    ens->add_option("--realizations", ensRealizations, "networks per size");
    ens->add_option("--steps", ensSteps, "run length per realization");
    ens->add_option("--seed", ensSeed, "base rng seed");
    ens->add_option("--mode", ensMode, "classical|quantum");
    ens->add_option("--weights", ensWeights, "table kinds (see gen)");
    ens->add_option("--config", ensConfig, "JSON config file (overrides other options)");
    ens->add_option("--threads", ensThreads, "worker threads")->check(CLI::PositiveNumber);
    ens->add_option("--out", ensOut, "output prefix (.csv and .meta.json)")->required();

    // render
    auto *render = app.add_subcommand("render", "redraw one of our CSV files");
    std::string renderIn, renderOut;
    render->add_option("--in", renderIn, "CSV produced by this tool")->required();
    render->add_option("--out", renderOut, "target file (.svg or .pgm)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::vector<std::string> comments{invocation};
    try {
        if (gen->parsed()) {
            qlnet::Network net = qlnet::randomK1Network(genN, genSeed, parseWeights(genWeights),
                                                        genHadamard == "all");
            qlnet::writeNetworkFile(genOut, net, comments);
            if (!genDot.empty()) {
                auto out = openOut(genDot);
                qlnet::writeDot(out, net, comments);
            }
            std::cout << "wrote " << genOut << " (" << genN << " nodes, seed " << genSeed
                      << ")\n";
        } else if (step->parsed()) {
            qlnet::Network net = qlnet::readNetworkFile(stepNet);
            qlnet::SpinConfig cfg = qlnet::SpinConfig::from_string(net.n, stepState);
            for (int t = 0; t < stepCount; t++) {
                cfg = stepInverse ? qlnet::stepClassicalInverse(net, cfg)
                                  : qlnet::stepClassical(net, cfg);
            }
            std::cout << cfg.bits.to_string() << "\n";
        } else if (cycle->parsed()) {
            qlnet::Network net = qlnet::readNetworkFile(cycleNet);
            qlnet::SpinConfig cfg = qlnet::SpinConfig::from_string(net.n, cycleState);
            qlnet::CycleInfo info = qlnet::findCycle(net, cfg, cycleMax);
            std::cout << "transient " << info.transient << " period " << info.period << "\n";
        } else if (spec->parsed()) {
            qlnet::Network net = qlnet::readNetworkFile(specNet);
            qlnet::Propagator u = qlnet::buildPropagator(net, specCap);
            qlnet::SpectrumReport report = qlnet::spectrum(u, specTol, specLmax);
            {
                auto out = openOut(specOut + ".csv");
                qlnet::writeSpectrumCsv(out, report, comments);
            }
            {
                auto out = openOut(specOut + ".svg");
                qlnet::writeSpectrumSvg(out, report, comments);
            }
            std::cout << report.lines.size() << " lines";
            if (!report.cycleLengths.empty()) {
                std::cout << "; cycle lengths";
                for (auto L : report.cycleLengths) {
                    std::cout << " " << L;
                }
            }
            std::cout << "\n";
        } else if (pert->parsed()) {
            qlnet::Network net = qlnet::readNetworkFile(pertNet);
            applyHadamardChoice(net, pertHadamard);
            if (pertNode < 0 || pertNode >= net.n) {
                throw qlnet::Error("perturbed node out of range");
            }
            qlnet::PauliFrame seed = qlnet::PauliFrame::singleX(net.n, pertNode);
            qlnet::DistanceSeries series =
                qlnet::damageSeries(net, seed, static_cast<size_t>(pertSteps));
            {
                auto out = openOut(pertOut + ".csv");
                qlnet::writePatternCsv(out, series, net.n, comments);
            }
            {
                auto out = openOut(pertOut + ".svg");
                qlnet::writePatternSvg(out, series, net.n, comments);
            }
            {
                auto out = openOut(pertOut + ".pgm");
                qlnet::writePatternPgm(out, series, net.n, comments);
            }
            size_t mx = 0;
            for (const auto &e : series.perStep) {
                mx = std::max(mx, e.hamming);
            }
            std::cout << "class " << qlnet::to_string(qlnet::detectSolitary(series))
                      << " max-distance " << mx << "\n";
        } else if (ens->parsed()) {
            qlnet::EnsembleConfig config;
            if (!ensConfig.empty()) {
                std::ifstream in(ensConfig);
                if (!in) {
                    throw qlnet::Error("cannot open config file: " + ensConfig);
                }
                nlohmann::json j = nlohmann::json::parse(in);
                config.sizes = j.at("sizes").get<std::vector<int>>();
                config.realizations = j.value("realizations", config.realizations);
                config.steps = j.value("steps", config.steps);
                config.seed = j.value("seed", config.seed);
                config.mode = qlnet::ensembleModeFromString(
                    j.value("mode", std::string(to_string(config.mode))));
                if (j.contains("functionWeights")) {
                    const auto &w = j.at("functionWeights");
                    config.functionWeights.const_i =
                        w.value("const_i", config.functionWeights.const_i);
                    config.functionWeights.const_x =
                        w.value("const_x", config.functionWeights.const_x);
                    config.functionWeights.copy = w.value("copy", config.functionWeights.copy);
                    config.functionWeights.not_ = w.value("not", config.functionWeights.not_);
                }
            } else {
                if (ensSizes.empty()) {
                    throw qlnet::Error("either --sizes or --config is required");
                }
                std::stringstream ss(ensSizes);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    config.sizes.push_back(std::stoi(item));
                }
                config.realizations = ensRealizations;
                config.steps = ensSteps;
                config.seed = ensSeed;
                config.mode = qlnet::ensembleModeFromString(ensMode);
                config.functionWeights = parseWeights(ensWeights);
            }
            qlnet::EnsembleResult result = qlnet::runEnsemble(config, ensThreads);
            {
                auto out = openOut(ensOut + ".csv");
                qlnet::writeEnsembleCsv(out, result, comments);
            }
            {
                auto out = openOut(ensOut + ".meta.json");
                qlnet::writeEnsembleMetaJson(out, result, invocation);
            }
            for (const auto &row : result.perSize) {
                std::cout << "n " << row.n << " mean " << row.meanHamming << " stderr "
                          << row.stdError << " timeMax " << row.meanTimeMax << "\n";
            }
        } else if (render->parsed()) {
            return runRender(renderIn, renderOut, comments);
        }
    } catch (const qlnet::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
