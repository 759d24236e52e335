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

#include "frlab/vcshatter.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "frlab/errors.h"
#include "frlab/hash.h"
#include "frlab/summation.h"

namespace frlab {
namespace {

std::vector<std::complex<double>> Phasors(
    std::span<const std::size_t> frequencies, double x) {
  std::vector<std::complex<double>> out;
  out.reserve(frequencies.size());
  for (std::size_t n : frequencies) {
    const double phase =
        2.0 * std::numbers::pi * std::fmod(static_cast<double>(n) * x, 1.0);
    out.emplace_back(std::cos(phase), std::sin(phase));
  }
  return out;
}

std::vector<std::size_t> Iota(std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = k + 1;
  return out;
}

}  // namespace

std::vector<std::size_t> FirstSquarefree(std::size_t length,
                                         std::size_t count) {
  const ArithmeticSequence mu = Sieve(SequenceKind::kMobius, length);
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= length && out.size() < count; ++n) {
    if (mu[n] != 0.0) out.push_back(n);
  }
  if (out.size() < count) {
    throw InvalidArgument("only " + std::to_string(out.size()) +
                          " squarefree integers <= " + std::to_string(length));
  }
  return out;
}

std::size_t CanonicalSupportSize(std::size_t length, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1]");
  }
  const auto wanted =
      static_cast<std::size_t>(std::floor(alpha * static_cast<double>(length)));
  return std::min(wanted,
                  SquarefreeCount(Sieve(SequenceKind::kMobius, length)));
}

void ValidateInstance(const ShatterInstance& inst) {
  if (inst.length == 0) throw InvalidArgument("shatter: R must be >= 1");
  if (inst.sigma.size() != inst.support.size()) {
    throw InvalidArgument("shatter: sigma must have one sign per element of S");
  }
  for (std::size_t i = 0; i < inst.support.size(); ++i) {
    if (i > 0 && inst.support[i] <= inst.support[i - 1]) {
      throw InvalidArgument("shatter: S must be sorted and distinct");
    }
    if (inst.support[i] == 0 || inst.support[i] > inst.length) {
      throw InvalidArgument("shatter: element " +
                            std::to_string(inst.support[i]) +
                            " of S is outside [1, R]");
    }
    if (inst.sigma[i] != 1 && inst.sigma[i] != -1) {
      throw InvalidArgument("shatter: sigma entries must be +-1");
    }
  }
}

ArithmeticSequence RandomCompletion(const ShatterInstance& inst) {
  ValidateInstance(inst);
  return RandomCompletion(inst, Sieve(SequenceKind::kMobius, inst.length));
}

ArithmeticSequence RandomCompletion(const ShatterInstance& inst,
                                    const ArithmeticSequence& mobius) {
  ValidateInstance(inst);
  if (mobius.size() != inst.length || mobius.kind() != SequenceKind::kMobius) {
    throw InvalidArgument("shatter: Mobius table does not match R");
  }
  std::vector<double> storage(inst.length + 1, 0.0);
  for (std::size_t n = 1; n <= inst.length; ++n) {
    if (mobius[n] != 0.0) storage[n] = RademacherSign(inst.seed, n);
  }
  for (std::size_t i = 0; i < inst.support.size(); ++i) {
    const std::size_t n = inst.support[i];
    if (mobius[n] == 0.0) {
      throw InvalidArgument("shatter: " + std::to_string(n) +
                            " in S is not squarefree");
    }
    storage[n] = inst.sigma[i];
  }
  return MakeSequence(SequenceKind::kCustom, std::move(storage), inst.seed);
}

KhintchineStats KhintchineMonteCarlo(std::span<const std::size_t> frequencies,
                                     double x, std::size_t trials,
                                     std::uint64_t seed) {
  if (frequencies.empty()) throw InvalidArgument("khintchine: N must be >= 1");
  if (trials == 0) throw InvalidArgument("khintchine: trials must be >= 1");
  const auto phasors = Phasors(frequencies, x);
  CompensatedSum mean;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t key = HashSplit(seed, t);
    std::complex<double> sum;
    for (std::size_t k = 0; k < phasors.size(); ++k) {
      sum += static_cast<double>(RademacherSign(key, k)) * phasors[k];
    }
    mean.Add(std::abs(sum));
  }
  KhintchineStats stats;
  stats.count = frequencies.size();
  stats.x = x;
  stats.trials = trials;
  stats.sample_mean_abs = mean.Result() / static_cast<double>(trials);
  stats.lower_bound = std::sqrt(static_cast<double>(stats.count) / 2.0);
  return stats;
}

KhintchineStats KhintchineMonteCarlo(std::size_t count, double x,
                                     std::size_t trials, std::uint64_t seed) {
  const auto freqs = Iota(count);
  return KhintchineMonteCarlo(freqs, x, trials, seed);
}

double ExhaustiveMeanAbs(std::span<const std::size_t> frequencies, double x,
                         std::complex<double> offset) {
  if (frequencies.size() > kMaxExhaustiveSigns) {
    throw InvalidArgument("khintchine: exhaustive mode is limited to N <= " +
                          std::to_string(kMaxExhaustiveSigns));
  }
  const auto phasors = Phasors(frequencies, x);
  const std::uint64_t patterns = std::uint64_t{1} << phasors.size();
  CompensatedSum mean;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    std::complex<double> sum = offset;
    for (std::size_t k = 0; k < phasors.size(); ++k) {
      if ((mask >> k) & 1U) {
        sum -= phasors[k];
      } else {
        sum += phasors[k];
      }
    }
    mean.Add(std::abs(sum));
  }
  return mean.Result() / static_cast<double>(patterns);
}

KhintchineStats KhintchineExhaustive(std::size_t count, double x) {
  if (count == 0) throw InvalidArgument("khintchine: N must be >= 1");
  const auto freqs = Iota(count);
  KhintchineStats stats;
  stats.count = count;
  stats.x = x;
  stats.trials = std::size_t{1} << std::min(count, kMaxExhaustiveSigns);
  stats.sample_mean_abs = ExhaustiveMeanAbs(freqs, x);
  stats.lower_bound = std::sqrt(static_cast<double>(count) / 2.0);
  return stats;
}

std::vector<int> PatternSigns(std::uint64_t pattern, std::size_t size) {
  std::vector<int> sigma(size);
  for (std::size_t i = 0; i < size; ++i) {
    sigma[i] = ((pattern >> i) & 1U) ? -1 : 1;
  }
  return sigma;
}

std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t pattern,
                        std::uint64_t trial) {
  return HashSplit(HashSplit(seed, pattern), trial);
}

ShatterReport ShatterCheck(std::size_t length,
                           std::span<const std::size_t> support,
                           double threshold, std::size_t trials,
                           std::uint64_t seed, const ShatterOptions& options) {
  if (support.size() > kMaxShatterSupport) {
    throw InvalidArgument("shatter: |S| = " + std::to_string(support.size()) +
                          " exceeds the exhaustive limit of " +
                          std::to_string(kMaxShatterSupport));
  }
  if (!(threshold > 0.0)) throw InvalidArgument("shatter: threshold must be > 0");
  if (trials == 0) throw InvalidArgument("shatter: trials must be >= 1");

  const ArithmeticSequence mobius = Sieve(SequenceKind::kMobius, length);
  ShatterInstance base;
  base.length = length;
  base.support.assign(support.begin(), support.end());
  base.sigma.assign(support.size(), 1);
  base.threshold = threshold;
  base.trials = trials;
  ValidateInstance(base);
  for (std::size_t n : base.support) {
    if (mobius[n] == 0.0) {
      throw InvalidArgument("shatter: " + std::to_string(n) +
                            " in S is not squarefree");
    }
  }

  const std::uint64_t pattern_count = std::uint64_t{1} << support.size();
  ShatterReport report;
  report.length = length;
  report.support = base.support;
  report.threshold = threshold;
  report.trials = trials;
  report.seed = seed;
  report.patterns.resize(pattern_count);

  auto run_pattern = [&](std::uint64_t p) {
    ShatterInstance inst = base;
    inst.sigma = PatternSigns(p, support.size());
    PatternOutcome outcome;
    outcome.pattern = p;
    outcome.sigma = inst.sigma;
    for (std::size_t t = 0; t < trials; ++t) {
      inst.seed = TrialSeed(seed, p, t);
      const double fr =
          FourierRatio(RandomCompletion(inst, mobius), options.oversample,
                       SpectrumOptions{.measure = options.measure})
              .fourier_ratio;
      outcome.best_fourier_ratio = std::max(outcome.best_fourier_ratio, fr);
      ++outcome.attempts;
    }
    outcome.met_threshold = outcome.best_fourier_ratio >= threshold;
    report.patterns[p] = std::move(outcome);
  };

  const std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(options.workers, pattern_count));
  if (workers == 1) {
    for (std::uint64_t p = 0; p < pattern_count; ++p) run_pattern(p);
  } else {
    std::vector<std::exception_ptr> failures(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::uint64_t p = w; p < pattern_count; p += workers) {
              run_pattern(p);
            }
          } catch (...) {
            failures[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  report.shattered = std::all_of(
      report.patterns.begin(), report.patterns.end(),
      [](const PatternOutcome& o) { return o.met_threshold; });
  return report;
}

}  // namespace frlab
