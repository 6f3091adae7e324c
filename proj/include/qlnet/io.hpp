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

#ifndef QLNET_IO_HPP
#define QLNET_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qlnet/classical.hpp"
#include "qlnet/experiments.hpp"
#include "qlnet/netmodel.hpp"
#include "qlnet/pauliframe.hpp"
#include "qlnet/statevec.hpp"

namespace qlnet {

/// Every emitter takes a list of comment lines that is written first, each
/// prefixed with "# "; the command-line tool passes its exact invocation.

/// Columns: t, mask (hex over node indices, node 0 = lowest bit), distance.
void writeDamageCsv(std::ostream &out, const DamageSeries &series,
                    const std::vector<std::string> &comments = {});

/// Columns: t, l0..l{n-1} with labels encoded I=0, X=1, Y=2, Z=3, distance.
void writePatternCsv(std::ostream &out, const DistanceSeries &series, int n,
                     const std::vector<std::string> &comments = {});

/// Columns: re, im, phase, degeneracy, L (empty when the line is not a
/// root of unity).
void writeSpectrumCsv(std::ostream &out, const SpectrumReport &report,
                      const std::vector<std::string> &comments = {});

/// Columns: n, mode, mean, stderr, timeMax, realizations, steps, seed.
void writeEnsembleCsv(std::ostream &out, const EnsembleResult &result,
                      const std::vector<std::string> &comments = {});
/// Metadata sidecar (config echo plus component-size histograms) as JSON.
void writeEnsembleMetaJson(std::ostream &out, const EnsembleResult &result,
                           const std::string &invocation);

/// Space-time grids. Rows run top to bottom in step order, one column per
/// node. SVG cells: X blue, Y green, Z orange, identity left blank. The
/// PGM twin stores the raw codes (maxval 3, or 1 for plain masks).
void writePatternSvg(std::ostream &out, const DistanceSeries &series, int n,
                     const std::vector<std::string> &comments = {});
void writePatternPgm(std::ostream &out, const DistanceSeries &series, int n,
                     const std::vector<std::string> &comments = {});
void writeMaskSvg(std::ostream &out, const DamageSeries &series,
                  const std::vector<std::string> &comments = {});
void writeMaskPgm(std::ostream &out, const DamageSeries &series,
                  const std::vector<std::string> &comments = {});

/// Unit-circle plot of a spectrum; degenerate lines are annotated with
/// their multiplicity.
void writeSpectrumSvg(std::ostream &out, const SpectrumReport &report,
                      const std::vector<std::string> &comments = {});

/// GraphViz digraph of the wiring; ineffective input edges are dashed.
void writeDot(std::ostream &out, const Network &net,
              const std::vector<std::string> &comments = {});

}  // namespace qlnet

#endif
