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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <thread>

#include "frlab/arith.h"
#include "frlab/errors.h"

namespace frlab::cli {
namespace {

// Runs fn(0..count-1) on up to `workers` threads; results keep index order.
// The first failure by index is rethrown.
template <typename Fn>
auto ParallelMap(std::size_t count, std::size_t workers, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> failures(count);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < count; i += stride) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

NormReport CheckedNorms(const ArithmeticSequence& f, const RunConfig& config,
                        const std::string& label) {
  NormReport report;
  try {
    report = FourierRatio(f, config.oversample,
                          SpectrumOptions{.max_bytes = config.max_bytes,
                                          .measure = config.measure});
  } catch (const ResourceLimit& e) {
    throw ResourceLimit(label + " at R = " + std::to_string(f.size()) + ": " +
                            e.what(),
                        e.required_bytes(), e.limit_bytes());
  }
  if (!(report.parseval_residual <= kParsevalTolerance)) {
    throw NumericFailure(label + " at R = " + std::to_string(f.size()) +
                         ": Parseval check failed, relative residual " +
                         std::to_string(report.parseval_residual));
  }
  return report;
}

void CheckCommon(const RunConfig& config) {
  if (config.oversample < 2) throw UsageError("--oversample must be >= 2");
  SetMaxSequenceLength(config.max_length);
}

void CheckLengths(const std::vector<std::size_t>& lengths) {
  if (lengths.empty()) throw UsageError("--rlist must not be empty");
  for (std::size_t r : lengths) {
    if (r == 0) throw UsageError("--rlist entries must be >= 1");
  }
}

ReportDoc NewDoc(const RunConfig& config, ReportKind kind) {
  ReportDoc doc;
  doc.kind = kind;
  doc.format = config.format;
  doc.columns = ColumnsFor(kind);
  doc.config = ConfigToJson(config);
  return doc;
}

std::string SignString(const std::vector<int>& sigma) {
  std::string s;
  for (int v : sigma) s += v > 0 ? '+' : '-';
  return s;
}

template <typename T>
T Get(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

}  // namespace

double GaussianBenchmark() { return std::sqrt(2.0 / std::numbers::pi); }

std::vector<std::size_t> DefaultTable1Lengths(bool include_ten_million) {
  std::vector<std::size_t> out;
  for (std::size_t p = 100; p <= 1'000'000; p *= 10) {
    out.push_back(p);
    out.push_back(3 * p);
  }
  if (include_ten_million) out.push_back(10'000'000);
  return out;
}

Json ConfigToJson(const RunConfig& c) {
  Json j;
  j["command"] = ReportKindName(c.command);
  j["format"] = FormatName(c.format);
  j["oversample"] = c.oversample;
  j["measure"] = MeasureName(c.measure);
  j["max_bytes"] = c.max_bytes;
  j["max_r"] = c.max_length;
  switch (c.command) {
    case ReportKind::kTable1:
      j["rlist"] = c.lengths;
      break;
    case ReportKind::kTable2:
      j["R"] = c.length;
      j["seed"] = c.seed;
      break;
    case ReportKind::kFigures:
      j["rlist"] = c.lengths;
      j["bars_R"] = c.bars_length;
      j["seed"] = c.seed;
      break;
    case ReportKind::kShatter:
      j["R"] = c.length;
      if (!c.support.empty()) j["S"] = c.support;
      if (c.support_size) j["s_size"] = *c.support_size;
      j["alpha"] = c.alpha;
      j["threshold"] = c.threshold;
      j["trials"] = c.trials;
      j["seed"] = c.seed;
      break;
    case ReportKind::kNorms:
      j["kind"] = c.kind;
      j["R"] = c.length;
      j["center"] = c.center;
      j["seed"] = c.seed;
      break;
  }
  return j;
}

RunConfig ConfigFromJson(const Json& json) {
  const Json& j = json.contains("config") ? json.at("config") : json;
  RunConfig c;
  const auto command = ParseReportKind(Get<std::string>(j, "command", ""));
  if (!command) throw UsageError("config: missing or unknown \"command\"");
  c.command = *command;
  const auto format = ParseFormat(Get<std::string>(j, "format", "csv"));
  if (!format) throw UsageError("config: unknown \"format\"");
  c.format = *format;
  c.oversample = Get<std::size_t>(j, "oversample", c.oversample);
  const auto measure =
      ParseMeasure(Get<std::string>(j, "measure", "real_part"));
  if (!measure) throw UsageError("config: unknown \"measure\"");
  c.measure = *measure;
  c.max_bytes = Get<std::size_t>(j, "max_bytes", c.max_bytes);
  c.max_length = Get<std::size_t>(j, "max_r", c.max_length);
  c.lengths = Get<std::vector<std::size_t>>(j, "rlist", {});
  c.length = Get<std::size_t>(j, "R", c.length);
  c.seed = Get<std::uint64_t>(j, "seed", c.seed);
  c.bars_length = Get<std::size_t>(j, "bars_R", c.bars_length);
  c.support = Get<std::vector<std::size_t>>(j, "S", {});
  if (j.contains("s_size")) c.support_size = j.at("s_size").get<std::size_t>();
  c.alpha = Get<double>(j, "alpha", c.alpha);
  c.threshold = Get<double>(j, "threshold", c.threshold);
  c.trials = Get<std::size_t>(j, "trials", c.trials);
  c.kind = Get<std::string>(j, "kind", c.kind);
  c.center = Get<bool>(j, "center", c.center);
  return c;
}

std::vector<std::string> ComparisonLabels() {
  return {"mobius", "liouville", "rademacher", "von_mangoldt_centered",
          "squarefree_indicator_centered"};
}

ArithmeticSequence ComparisonSequence(std::size_t index, std::size_t length,
                                      std::uint64_t seed) {
  switch (index) {
    case 0:
      return Sieve(SequenceKind::kMobius, length);
    case 1:
      return Sieve(SequenceKind::kLiouville, length);
    case 2:
      return Sieve(SequenceKind::kRademacher, length, seed);
    case 3:
      return Center(Sieve(SequenceKind::kVonMangoldt, length));
    case 4:
      return Center(Sieve(SequenceKind::kSquarefreeIndicator, length));
    default:
      throw std::out_of_range("comparison sequence index");
  }
}

ReportDoc RunTable1(const RunConfig& config, std::size_t workers) {
  CheckCommon(config);
  CheckLengths(config.lengths);
  struct Result {
    double density;
    NormReport norms;
  };
  const auto results =
      ParallelMap(config.lengths.size(), workers, [&](std::size_t i) {
        const ArithmeticSequence mu =
            Sieve(SequenceKind::kMobius, config.lengths[i]);
        const double density = static_cast<double>(SquarefreeCount(mu)) /
                               static_cast<double>(mu.size());
        return Result{density, CheckedNorms(mu, config, "mobius")};
      });

  ReportDoc doc = NewDoc(config, ReportKind::kTable1);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const std::size_t r = config.lengths[i];
    const double root = std::sqrt(static_cast<double>(r));
    const NormReport& n = results[i].norms;
    doc.rows.push_back(Row{"mobius", r,
                           {static_cast<std::int64_t>(r), results[i].density,
                            n.l2 / root, n.l1 / root, n.fourier_ratio,
                            n.linf / root}});
  }
  return doc;
}

ReportDoc RunTable2(const RunConfig& config, std::size_t workers) {
  CheckCommon(config);
  if (config.length < 10) throw UsageError("table2 requires R >= 10");
  const auto labels = ComparisonLabels();
  const auto results = ParallelMap(labels.size(), workers, [&](std::size_t i) {
    return CheckedNorms(ComparisonSequence(i, config.length, config.seed),
                        config, labels[i]);
  });
  ReportDoc doc = NewDoc(config, ReportKind::kTable2);
  const double root = std::sqrt(static_cast<double>(config.length));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    doc.rows.push_back(Row{labels[i], config.length,
                           {labels[i], results[i].fourier_ratio,
                            results[i].l2 / root}});
  }
  return doc;
}

ReportDoc RunFigures(const RunConfig& config, std::size_t workers) {
  CheckCommon(config);
  CheckLengths(config.lengths);
  if (config.bars_length < 10) throw UsageError("--bars-R must be >= 10");
  const auto labels = ComparisonLabels();
  const std::size_t curve = config.lengths.size();
  const auto ratios =
      ParallelMap(curve + labels.size(), workers, [&](std::size_t i) {
        if (i < curve) {
          return CheckedNorms(Sieve(SequenceKind::kMobius, config.lengths[i]),
                              config, "mobius")
              .fourier_ratio;
        }
        const std::size_t k = i - curve;
        return CheckedNorms(
                   ComparisonSequence(k, config.bars_length, config.seed),
                   config, labels[k])
            .fourier_ratio;
      });

  const double benchmark = GaussianBenchmark();
  ReportDoc doc = NewDoc(config, ReportKind::kFigures);
  doc.rows.push_back(
      Row{"benchmark", 0, {"benchmark", "sqrt_2_over_pi", benchmark}});
  for (std::size_t i = 0; i < curve; ++i) {
    const std::size_t r = config.lengths[i];
    doc.rows.push_back(
        Row{"mobius", r, {"fr_curve", std::to_string(r), ratios[i]}});
  }
  for (std::size_t i = 0; i < curve; ++i) {
    const std::size_t r = config.lengths[i];
    if (r < 1000) continue;
    doc.rows.push_back(Row{"mobius",
                           r,
                           {"deviation_loglog", std::to_string(r),
                            std::fabs(ratios[i] - benchmark)}});
  }
  for (std::size_t k = 0; k < labels.size(); ++k) {
    doc.rows.push_back(Row{labels[k],
                           config.bars_length,
                           {"comparison_bars", labels[k], ratios[curve + k]}});
  }
  return doc;
}

ReportDoc RunShatter(const RunConfig& config, std::size_t workers) {
  CheckCommon(config);
  if (config.length == 0) throw UsageError("--R must be >= 1");
  std::vector<std::size_t> support = config.support;
  if (support.empty()) {
    const std::size_t size = config.support_size.value_or(
        CanonicalSupportSize(config.length, config.alpha));
    support = FirstSquarefree(config.length, size);
  }
  const ShatterReport report = ShatterCheck(
      config.length, support, config.threshold, config.trials, config.seed,
      ShatterOptions{.oversample = config.oversample,
                     .measure = config.measure,
                     .workers = workers});

  ReportDoc doc = NewDoc(config, ReportKind::kShatter);
  for (const PatternOutcome& p : report.patterns) {
    doc.rows.push_back(Row{"completion",
                           config.length,
                           {static_cast<std::int64_t>(p.pattern),
                            SignString(p.sigma), p.best_fourier_ratio,
                            static_cast<std::int64_t>(p.attempts),
                            std::int64_t{p.met_threshold ? 1 : 0}}});
  }
  doc.rows.push_back(Row{"verdict",
                         config.length,
                         {std::string("verdict"),
                          std::string(report.shattered ? "shattered"
                                                       : "not_shattered"),
                          std::monostate{}, std::monostate{},
                          std::monostate{}}});
  return doc;
}

ReportDoc RunNorms(const RunConfig& config, std::size_t /*workers*/) {
  CheckCommon(config);
  const auto kind = ParseKind(config.kind);
  if (!kind || *kind == SequenceKind::kCustom) {
    throw UsageError("--kind must be one of mobius, liouville, von_mangoldt, "
                     "squarefree_indicator, rademacher");
  }
  std::optional<std::uint64_t> seed;
  if (*kind == SequenceKind::kRademacher) seed = config.seed;
  ArithmeticSequence f = Sieve(*kind, config.length, seed);
  std::string label(KindName(*kind));
  if (config.center) {
    f = Center(f);
    label += "_centered";
  }
  if (f.IsZero()) {
    throw UsageError("norms: " + label + " is identically zero at R = " +
                     std::to_string(config.length));
  }
  const NormReport n = CheckedNorms(f, config, label);
  ReportDoc doc = NewDoc(config, ReportKind::kNorms);
  doc.rows.push_back(Row{label,
                         config.length,
                         {label, static_cast<std::int64_t>(config.length),
                          static_cast<std::int64_t>(n.grid_size), n.l1, n.l2,
                          n.linf, n.fourier_ratio, n.l1_error_indicator,
                          n.linf_correction_bound}});
  return doc;
}

ReportDoc Run(const RunConfig& config, std::size_t workers) {
  switch (config.command) {
    case ReportKind::kTable1:
      return RunTable1(config, workers);
    case ReportKind::kTable2:
      return RunTable2(config, workers);
    case ReportKind::kFigures:
      return RunFigures(config, workers);
    case ReportKind::kShatter:
      return RunShatter(config, workers);
    case ReportKind::kNorms:
      return RunNorms(config, workers);
  }
  throw UsageError("unknown command");
}

}  // namespace frlab::cli
