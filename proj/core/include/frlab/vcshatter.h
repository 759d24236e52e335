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

#ifndef FRLAB_VCSHATTER_H_
#define FRLAB_VCSHATTER_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frlab/arith.h"
#include "frlab/spectrum.h"

namespace frlab {

// One sign-completion experiment: the values on `support` are pinned to
// `sigma`, the other squarefree n <= R receive seeded random signs, and
// non-squarefree n are 0.
struct ShatterInstance {
  std::size_t length = 0;
  std::vector<std::size_t> support;  // sorted, distinct, squarefree
  std::vector<int> sigma;            // +-1, aligned with support
  std::uint64_t seed = 0;
  double threshold = 1.0;
  std::size_t trials = 1;
};

// The first `count` squarefree integers, which is the canonical choice of S.
std::vector<std::size_t> FirstSquarefree(std::size_t length, std::size_t count);

// floor(alpha * R), capped at Q(R).
std::size_t CanonicalSupportSize(std::size_t length, double alpha);

inline constexpr double kDefaultAlpha = 0.1;

// Throws InvalidArgument if the support is unsorted, exceeds R, contains a
// non-squarefree integer, or sigma is malformed.
void ValidateInstance(const ShatterInstance& inst);

ArithmeticSequence RandomCompletion(const ShatterInstance& inst);

// Same as above but reuses a precomputed Mobius table of length R.
ArithmeticSequence RandomCompletion(const ShatterInstance& inst,
                                    const ArithmeticSequence& mobius);

struct KhintchineStats {
  std::size_t count = 0;  // N
  double x = 0.0;
  std::size_t trials = 0;
  double sample_mean_abs = 0.0;  // estimate of E|B(x)|
  double lower_bound = 0.0;      // sqrt(N / 2)
};

// Monte Carlo estimate of E|sum_k eps_k e^{2 pi i n_k x}| with fresh signs
// per trial. Signs are keyed by (seed, trial, k).
KhintchineStats KhintchineMonteCarlo(std::span<const std::size_t> frequencies,
                                     double x, std::size_t trials,
                                     std::uint64_t seed);

// Unit-coefficient mode, n_k = k.
KhintchineStats KhintchineMonteCarlo(std::size_t count, double x,
                                     std::size_t trials, std::uint64_t seed);

inline constexpr std::size_t kMaxExhaustiveSigns = 12;

// Exact mean over all 2^N sign vectors of |offset + sum_k eps_k
// e^{2 pi i n_k x}|. With offset = A(x) this is E|A(x) + B(x)|.
double ExhaustiveMeanAbs(std::span<const std::size_t> frequencies, double x,
                         std::complex<double> offset = {});

// Exact E|B(x)| with n_k = k; trials = 2^N. N <= 12.
KhintchineStats KhintchineExhaustive(std::size_t count, double x);

struct PatternOutcome {
  std::uint64_t pattern = 0;
  std::vector<int> sigma;
  double best_fourier_ratio = 0.0;
  std::size_t attempts = 0;
  bool met_threshold = false;
};

struct ShatterReport {
  std::size_t length = 0;
  std::vector<std::size_t> support;
  double threshold = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PatternOutcome> patterns;  // indexed by pattern
  bool shattered = false;
};

inline constexpr std::size_t kMaxShatterSupport = 20;

// Sign of element i under pattern p: bit i set means -1.
std::vector<int> PatternSigns(std::uint64_t pattern, std::size_t size);

// Seed for trial t of pattern p.
std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t pattern,
                        std::uint64_t trial);

struct ShatterOptions {
  std::size_t oversample = kDefaultOversample;
  GridMeasure measure = GridMeasure::kModulus;
  std::size_t workers = 1;
};

// For each of the 2^|S| patterns, tries `trials` seeded completions and
// keeps the best Fourier Ratio. Shattered iff every pattern reached
// `threshold`. Throws InvalidArgument for |S| > 20, trials == 0 or
// threshold <= 0.
ShatterReport ShatterCheck(std::size_t length,
                           std::span<const std::size_t> support,
                           double threshold, std::size_t trials,
                           std::uint64_t seed,
                           const ShatterOptions& options = {});

}  // namespace frlab

#endif  // FRLAB_VCSHATTER_H_
