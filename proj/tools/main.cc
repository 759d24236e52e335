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

// frlab: Fourier Ratio experiments on arithmetic sequences.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "frlab/errors.h"

namespace {

using frlab::cli::RunConfig;
using frlab::cli::UsageError;

// Accepts "100,300,1e3,3e6"; every entry must be a positive integer.
std::vector<std::size_t> ParseLengthList(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number in list: '" + item + "'");
    }
    if (used != item.size() || !(v >= 1.0) || v != std::floor(v) || v > 1e15) {
      throw UsageError("expected a positive integer in list, got '" + item +
                       "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::size_t ParseSize(const std::string& text, const char* flag) {
  auto list = ParseLengthList(text);
  if (list.size() != 1) {
    throw UsageError(std::string(flag) + " expects one positive integer");
  }
  return list.front();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier Ratio experiments on arithmetic sequences"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string rlist;
  std::string length_text;
  std::string bars_text = "1000000";
  std::size_t oversample = frlab::kDefaultOversample;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string measure = "real_part";
  std::string out_path;
  std::string max_bytes_text;
  std::string max_length_text = "1e7";
  std::size_t parallel = 1;
  std::string config_path;
  std::string echo_path;
  bool include_ten_million = false;
  std::string kind = "mobius";
  bool center = false;
  std::string support_text;
  std::optional<std::size_t> support_size;
  double alpha = frlab::kDefaultAlpha;
  double threshold = 0.5;
  std::size_t trials = 64;

  auto* rlist_opt = app.add_option("--rlist", rlist,
                                   "Comma separated R values (e.g. 1e2,3e2)");
  app.add_option("--oversample", oversample, "Grid size over R (>= 2)")
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for random signs")->capture_default_str();
  app.add_option("--format", format, "csv | json | markdown")
      ->capture_default_str();
  app.add_option("--measure", measure,
                 "real_part (sqrt(2)|Re F|) | modulus (|F|)")
      ->capture_default_str();
  app.add_option("--out", out_path, "Output file (default stdout)");
  app.add_option("--max-bytes", max_bytes_text,
                 "Grid memory cap in bytes (default 2e9, or FRLAB_MAX_BYTES)");
  app.add_option("--max-r", max_length_text, "Largest accepted R")
      ->capture_default_str();
  app.add_option("--parallel", parallel, "Worker threads for independent rows")
      ->capture_default_str();
  app.add_option("--config", config_path,
                 "Re-run from an echoed config (JSON config or JSON report)");
  app.add_option("--echo-config", echo_path,
                 "Also write the effective config as JSON to this path");

  auto* table1 = app.add_subcommand("table1", "Mobius norms over a list of R");
  table1->add_flag("--include-1e7", include_ten_million,
                   "Append R = 1e7 to the default list");
  auto* table2 =
      app.add_subcommand("table2", "Five arithmetic functions at one R");
  table2->add_option("--R", length_text, "Sequence length (default 1e6)");
  auto* figures = app.add_subcommand("figures", "Figure data as series,x,y");
  figures->add_option("--bars-R", bars_text, "R for the comparison bars")
      ->capture_default_str();
  auto* shatter =
      app.add_subcommand("shatter", "Randomized sign-completion experiment");
  shatter->add_option("--R", length_text, "Sequence length")->required();
  shatter->add_option("--s-size", support_size,
                      "|S|; S is the first |S| squarefree integers");
  shatter->add_option("--S", support_text, "Explicit S, comma separated");
  shatter->add_option("--alpha", alpha, "|S| = floor(alpha R) by default")
      ->capture_default_str();
  shatter->add_option("--threshold", threshold, "Fourier Ratio target")
      ->capture_default_str();
  shatter->add_option("--trials", trials, "Completions tried per pattern")
      ->capture_default_str();
  auto* norms = app.add_subcommand("norms", "NormReport for one sequence");
  norms->add_option("--kind", kind, "Sequence kind")->capture_default_str();
  norms->add_option("--R", length_text, "Sequence length")->required();
  norms->add_flag("--center", center, "Subtract the mean first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return frlab::cli::kExitUsage;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) {
      config = frlab::cli::ConfigFromJson(
          frlab::cli::Json::parse(ReadFile(config_path)));
    } else {
      if (app.get_subcommands().empty()) {
        throw UsageError("a command is required: table1, table2, figures, "
                         "shatter or norms");
      }
      CLI::App* sub = app.get_subcommands().front();
      const std::string name = sub->get_name();
      config.command = *frlab::cli::ParseReportKind(name);
      const auto parsed_format = frlab::cli::ParseFormat(format);
      if (!parsed_format) throw UsageError("unknown --format " + format);
      config.format = *parsed_format;
      const auto parsed_measure = frlab::ParseMeasure(measure);
      if (!parsed_measure) throw UsageError("unknown --measure " + measure);
      config.measure = *parsed_measure;
      config.oversample = oversample;
      config.seed = seed;
      config.max_length = ParseSize(max_length_text, "--max-r");
      if (!max_bytes_text.empty()) {
        config.max_bytes = ParseSize(max_bytes_text, "--max-bytes");
      } else if (const char* env = std::getenv("FRLAB_MAX_BYTES")) {
        config.max_bytes = ParseSize(env, "FRLAB_MAX_BYTES");
      }
      if (name == "table1" || name == "figures") {
        config.lengths = rlist_opt->count() == 0
                             ? frlab::cli::DefaultTable1Lengths(
                                   include_ten_million)
                             : ParseLengthList(rlist);
        if (rlist_opt->count() > 0 && config.lengths.empty()) {
          throw UsageError("--rlist must not be empty");
        }
      }
      if (!length_text.empty()) {
        config.length = ParseSize(length_text, "--R");
      }
      config.bars_length = ParseSize(bars_text, "--bars-R");
      config.kind = kind;
      config.center = center;
      config.support = ParseLengthList(support_text);
      config.support_size = support_size;
      config.alpha = alpha;
      config.threshold = threshold;
      config.trials = trials;
      if (name == "shatter" && !support_text.empty() && support_size) {
        throw UsageError("give either --S or --s-size, not both");
      }
    }

    const auto doc = frlab::cli::Run(config, parallel);
    const std::string text = frlab::cli::Serialize(doc);
    if (out_path.empty()) {
      std::cout << text;
      std::cout.flush();
    } else {
      WriteFile(out_path, text);
    }
    if (!echo_path.empty()) WriteFile(echo_path, doc.config.dump(2) + "\n");
    return frlab::cli::kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return frlab::cli::kExitUsage;
  } catch (const frlab::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return frlab::cli::kExitUsage;
  } catch (const frlab::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return frlab::cli::kExitResource;
  } catch (const frlab::NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return frlab::cli::kExitNumeric;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: bad config: " << e.what() << "\n";
    return frlab::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return frlab::cli::kExitNumeric;
  }
}
