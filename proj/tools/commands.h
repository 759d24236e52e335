// Copyright 2026 The frlab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRLAB_TOOLS_COMMANDS_H_
#define FRLAB_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frlab/spectrum.h"
#include "frlab/vcshatter.h"
#include "report.h"

namespace frlab::cli {

// Bad command-line input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitNumeric = 4;

// Quadrature must reproduce sum f(n)^2 to this relative accuracy.
inline constexpr double kParsevalTolerance = 1e-9;

// Benchmark ratio E|Z| / (E|Z|^2)^{1/2} of a centered Gaussian.
double GaussianBenchmark();

// R = 10^2, 3*10^2, ..., 3*10^6, optionally followed by 10^7.
std::vector<std::size_t> DefaultTable1Lengths(bool include_ten_million);

// Everything that determines a report's bytes. Worker count and output path
// are deliberately absent: they never change the result.
struct RunConfig {
  ReportKind command = ReportKind::kTable1;
  Format format = Format::kCsv;
  std::vector<std::size_t> lengths;  // --rlist (table1, figures)
  std::size_t length = 1'000'000;    // --R (table2, norms, shatter)
  std::size_t oversample = kDefaultOversample;
  // table1/table2 reference values use the real-part measure.
  GridMeasure measure = GridMeasure::kRealPart;
  std::uint64_t seed = 1;
  std::size_t max_bytes = kDefaultMaxBytes;
  std::size_t max_length = kDefaultMaxLength;
  // norms
  std::string kind = "mobius";
  bool center = false;
  // figures
  std::size_t bars_length = 1'000'000;
  // shatter
  std::vector<std::size_t> support;  // explicit S; empty means canonical
  std::optional<std::size_t> support_size;
  double alpha = kDefaultAlpha;
  double threshold = 0.5;
  std::size_t trials = 64;
};

Json ConfigToJson(const RunConfig& config);
// Accepts either a bare config object or a JSON report carrying "config".
RunConfig ConfigFromJson(const Json& json);

ReportDoc RunTable1(const RunConfig& config, std::size_t workers = 1);
ReportDoc RunTable2(const RunConfig& config, std::size_t workers = 1);
ReportDoc RunFigures(const RunConfig& config, std::size_t workers = 1);
ReportDoc RunShatter(const RunConfig& config, std::size_t workers = 1);
ReportDoc RunNorms(const RunConfig& config, std::size_t workers = 1);
ReportDoc Run(const RunConfig& config, std::size_t workers = 1);

// The five table2 sequences at length R, in row order.
std::vector<std::string> ComparisonLabels();
ArithmeticSequence ComparisonSequence(std::size_t index, std::size_t length,
                                      std::uint64_t seed);

}  // namespace frlab::cli

#endif  // FRLAB_TOOLS_COMMANDS_H_
