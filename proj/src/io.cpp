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

#include "qlnet/io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qlnet {

namespace {

void writeComments(std::ostream &out, const char *kind,
                   const std::vector<std::string> &comments) {
    out << "# qlnet-kind: " << kind << "\n";
    for (const std::string &line : comments) {
        out << "# " << line << "\n";
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

const char *svgFill(Pauli p) {
    switch (p) {
        case Pauli::X:
            return "#4363d8";
        case Pauli::Y:
            return "#3cb44b";
        case Pauli::Z:
            return "#f58231";
        case Pauli::I:
            break;
    }
    return nullptr;
}

void svgGridHeader(std::ostream &out, size_t cols, size_t rows, int cell) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * cell + 2
        << "\" height=\"" << rows * cell + 2 << "\" viewBox=\"-1 -1 " << cols * cell + 2
        << " " << rows * cell + 2 << "\">\n";
    out << "<rect x=\"-1\" y=\"-1\" width=\"" << cols * cell + 2 << "\" height=\""
        << rows * cell + 2 << "\" fill=\"white\"/>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << cols * cell << "\" height=\"" << rows * cell
        << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
}

}  // namespace

void writeDamageCsv(std::ostream &out, const DamageSeries &series,
                    const std::vector<std::string> &comments) {
    writeComments(out, "damage", comments);
    out << "# nodes: " << (series.masks.empty() ? 0 : series.masks[0].size()) << "\n";
    out << "t,mask,distance\n";
    for (size_t t = 0; t < series.masks.size(); t++) {
        out << t << "," << series.masks[t].to_hex() << "," << series.distances[t] << "\n";
    }
}

void writePatternCsv(std::ostream &out, const DistanceSeries &series, int n,
                     const std::vector<std::string> &comments) {
    writeComments(out, "pattern", comments);
    out << "# nodes: " << n << "\n";
    out << "t";
    for (int i = 0; i < n; i++) {
        out << ",l" << i;
    }
    out << ",distance\n";
    for (size_t t = 0; t < series.perStep.size(); t++) {
        const auto &entry = series.perStep[t];
        out << t;
        for (int i = 0; i < n; i++) {
            out << "," << static_cast<int>(entry.visible[static_cast<size_t>(i)]);
        }
        out << "," << entry.hamming << "\n";
    }
}

void writeSpectrumCsv(std::ostream &out, const SpectrumReport &report,
                      const std::vector<std::string> &comments) {
    writeComments(out, "spectrum", comments);
    out << "re,im,phase,degeneracy,L\n";
    for (const auto &line : report.lines) {
        out << fmt(line.value.real()) << "," << fmt(line.value.imag()) << ","
            << fmt(line.phase) << "," << line.degeneracy << ",";
        if (line.rootOfUnity) {
            out << line.rootOfUnity->second;
        }
        out << "\n";
    }
}

void writeEnsembleCsv(std::ostream &out, const EnsembleResult &result,
                      const std::vector<std::string> &comments) {
    writeComments(out, "ensemble", comments);
    out << "n,mode,mean,stderr,timeMax,realizations,steps,seed\n";
    for (const auto &row : result.perSize) {
        out << row.n << "," << to_string(result.config.mode) << "," << fmt(row.meanHamming)
            << "," << fmt(row.stdError) << "," << fmt(row.meanTimeMax) << ","
            << result.config.realizations << "," << result.config.steps << ","
            << result.config.seed << "\n";
    }
}

void writeEnsembleMetaJson(std::ostream &out, const EnsembleResult &result,
                           const std::string &invocation) {
    nlohmann::json j;
    j["invocation"] = invocation;
    j["config"] = {
        {"sizes", result.config.sizes},
        {"realizations", result.config.realizations},
        {"steps", result.config.steps},
        {"seed", result.config.seed},
        {"mode", to_string(result.config.mode)},
        {"functionWeights",
         {{"const_i", result.config.functionWeights.const_i},
          {"const_x", result.config.functionWeights.const_x},
          {"copy", result.config.functionWeights.copy},
          {"not", result.config.functionWeights.not_}}},
    };
    j["results"] = nlohmann::json::array();
    for (const auto &row : result.perSize) {
        nlohmann::json hist = nlohmann::json::object();
        for (const auto &[size, count] : row.componentSizeHistogram) {
            hist[std::to_string(size)] = count;
        }
        j["results"].push_back({{"n", row.n},
                                {"mean", row.meanHamming},
                                {"stderr", row.stdError},
                                {"timeMax", row.meanTimeMax},
                                {"componentSizeHistogram", hist}});
    }
    out << j.dump(2) << "\n";
}

void writePatternSvg(std::ostream &out, const DistanceSeries &series, int n,
                     const std::vector<std::string> &comments) {
    const int cell = 12;
    size_t rows = series.perStep.size();
    svgGridHeader(out, static_cast<size_t>(n), rows, cell);
    for (const std::string &line : comments) {
        out << "<!-- " << line << " -->\n";
    }
    for (size_t t = 0; t < rows; t++) {
        const auto &entry = series.perStep[t];
        for (int i = 0; i < n; i++) {
            const char *fill = svgFill(entry.visible[static_cast<size_t>(i)]);
            if (!fill) {
                continue;
            }
            out << "<rect x=\"" << i * cell << "\" y=\"" << t * cell << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    out << "</svg>\n";
}

void writePatternPgm(std::ostream &out, const DistanceSeries &series, int n,
                     const std::vector<std::string> &comments) {
    out << "P2\n";
    writeComments(out, "pattern", comments);
    out << n << " " << series.perStep.size() << "\n3\n";
    for (const auto &entry : series.perStep) {
        for (int i = 0; i < n; i++) {
            out << static_cast<int>(entry.visible[static_cast<size_t>(i)]);
            out << (i + 1 == n ? "\n" : " ");
        }
    }
}

void writeMaskSvg(std::ostream &out, const DamageSeries &series,
                  const std::vector<std::string> &comments) {
    const int cell = 12;
    size_t rows = series.masks.size();
    size_t n = rows ? series.masks[0].size() : 0;
    svgGridHeader(out, n, rows, cell);
    for (const std::string &line : comments) {
        out << "<!-- " << line << " -->\n";
    }
    for (size_t t = 0; t < rows; t++) {
        for (size_t i = 0; i < n; i++) {
            if (!series.masks[t].get(i)) {
                continue;
            }
            out << "<rect x=\"" << i * cell << "\" y=\"" << t * cell << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"#4363d8\"/>\n";
        }
    }
    out << "</svg>\n";
}

void writeMaskPgm(std::ostream &out, const DamageSeries &series,
                  const std::vector<std::string> &comments) {
    out << "P2\n";
    writeComments(out, "damage", comments);
    size_t n = series.masks.empty() ? 0 : series.masks[0].size();
    out << n << " " << series.masks.size() << "\n1\n";
    for (const auto &mask : series.masks) {
        for (size_t i = 0; i < n; i++) {
            out << (mask.get(i) ? 1 : 0);
            out << (i + 1 == n ? "\n" : " ");
        }
    }
}

void writeSpectrumSvg(std::ostream &out, const SpectrumReport &report,
                      const std::vector<std::string> &comments) {
    const int size = 420, c = size / 2, radius = 180;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
        << size << "\">\n";
    for (const std::string &line : comments) {
        out << "<!-- " << line << " -->\n";
    }
    out << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    out << "<line x1=\"10\" y1=\"" << c << "\" x2=\"" << size - 10 << "\" y2=\"" << c
        << "\" stroke=\"#ccc\"/>\n";
    out << "<line x1=\"" << c << "\" y1=\"10\" x2=\"" << c << "\" y2=\"" << size - 10
        << "\" stroke=\"#ccc\"/>\n";
    out << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << radius
        << "\" fill=\"none\" stroke=\"#999\"/>\n";
    for (const auto &line : report.lines) {
        double x = c + radius * std::cos(line.phase);
        double y = c - radius * std::sin(line.phase);
        out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
            << "\" r=\"4\" fill=\"#4363d8\"/>\n";
        if (line.degeneracy > 1) {
            double lx = c + (radius + 16) * std::cos(line.phase);
            double ly = c - (radius + 16) * std::sin(line.phase);
            out << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
                << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333\">x"
                << line.degeneracy << "</text>\n";
        }
    }
    out << "</svg>\n";
}

void writeDot(std::ostream &out, const Network &net,
              const std::vector<std::string> &comments) {
    for (const std::string &line : comments) {
        out << "// " << line << "\n";
    }
    out << "digraph network {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int i = 0; i < net.n; i++) {
        const Node &node = net.nodes[static_cast<size_t>(i)];
        out << "  n" << i << " [label=\"" << i << "\\n" << node.table.to_bits()
            << (node.hadamard ? "\\nH" : "") << "\"];\n";
    }
    for (int i = 0; i < net.n; i++) {
        const Node &node = net.nodes[static_cast<size_t>(i)];
        std::vector<int> eff = effectiveInputs(node);
        std::vector<int> seen;
        for (int j : node.inputs) {
            if (std::find(seen.begin(), seen.end(), j) != seen.end()) {
                continue;
            }
            seen.push_back(j);
            bool effective = std::find(eff.begin(), eff.end(), j) != eff.end();
            out << "  n" << j << " -> n" << i;
            if (!effective) {
                out << " [style=dashed]";
            }
            out << ";\n";
        }
    }
    out << "}\n";
}

}  // namespace qlnet
