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

#ifndef FRLAB_SPECTRUM_H_
#define FRLAB_SPECTRUM_H_

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "frlab/arith.h"

namespace frlab {

inline constexpr std::size_t kDefaultMaxBytes = 2'000'000'000;
inline constexpr std::size_t kDefaultOversample = 4;

// What is sampled on the grid.
//  kModulus:  |F(x)|, the modulus of the exponential sum.
//  kRealPart: sqrt(2) |Re F(x)| = sqrt(2) |sum_n f(n) cos(2 pi n x)|.
// Both have the same L2 norm, sqrt(sum f(n)^2). For pseudo-random
// coefficients the L1/L2 ratio tends to sqrt(pi)/2 under kModulus and to
// sqrt(2/pi) under kRealPart.
enum class GridMeasure { kModulus, kRealPart };

std::string_view MeasureName(GridMeasure measure);
std::optional<GridMeasure> ParseMeasure(std::string_view name);

struct SpectrumOptions {
  // Peak allocation allowed for one grid evaluation.
  std::size_t max_bytes = kDefaultMaxBytes;
  GridMeasure measure = GridMeasure::kModulus;
};

// |F(j/M)| (or the real-part measure) for F(x) = sum_n f(n) e^{2 pi i n x}
// on the uniform grid j/M.
//
// Only the half spectrum j = 0..M/2 is stored; for real coefficients the
// other half follows from F((M-j)/M) = conj(F(j/M)).
class SpectrumGrid {
 public:
  SpectrumGrid(std::size_t grid_size, std::size_t length,
               std::size_t oversample, GridMeasure measure,
               std::vector<double> half)
      : grid_size_(grid_size),
        length_(length),
        oversample_(oversample),
        measure_(measure),
        half_(std::move(half)) {}

  GridMeasure measure() const { return measure_; }
  std::size_t grid_size() const { return grid_size_; }
  std::size_t length() const { return length_; }
  std::size_t oversample() const { return oversample_; }

  double magnitude(std::size_t j) const {
    return j <= grid_size_ / 2 ? half_[j] : half_[grid_size_ - j];
  }
  const std::vector<double>& half_spectrum() const { return half_; }
  // Materializes all M magnitudes.
  std::vector<double> Magnitudes() const;

  // Rectangle-rule averages over the full grid.
  double MeanAbs() const;
  double MeanSquare() const;
  double Max() const;

 private:
  std::size_t grid_size_;
  std::size_t length_;
  std::size_t oversample_;
  GridMeasure measure_;
  std::vector<double> half_;
};

struct L1Estimate {
  double estimate = 0.0;
  // |estimate(oversample) - estimate(2 * oversample)|.
  double error_indicator = 0.0;
  std::size_t grid_size = 0;
};

struct LinfEstimate {
  double estimate = 0.0;
  // True sup <= estimate * correction_bound (Bernstein).
  double correction_bound = 1.0;
  std::size_t grid_size = 0;
};

struct NormReport {
  GridMeasure measure = GridMeasure::kModulus;
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double fourier_ratio = 0.0;
  double l1_error_indicator = 0.0;
  double linf_correction_bound = 1.0;
  std::size_t grid_size = 0;
  std::size_t length = 0;
  // |mean(|F|^2) on the grid - sum f(n)^2| / sum f(n)^2.
  double parseval_residual = 0.0;
};

// Direct compensated evaluation of F(x), x in [0, 1].
std::complex<double> EvalPoint(const ArithmeticSequence& f, double x);

// The grid measure of a single value F(x).
double ApplyMeasure(GridMeasure measure, std::complex<double> value);

// Grids never drop below this many points per unit of oversample, so tiny R
// still gets an accurate rectangle rule for the non-smooth |F|.
inline constexpr std::size_t kMinPointsPerOversample = 1024;

// Smallest power of two >= max(oversample * R, 2R + 2,
// oversample * kMinPointsPerOversample).
std::size_t GridSize(std::size_t length, std::size_t oversample);

// Peak bytes EvalGrid allocates for a grid of size M.
std::size_t GridBytes(std::size_t grid_size);

// One zero-padded real-to-complex FFT of length GridSize(R, oversample).
// Throws InvalidArgument for oversample < 2 and ResourceLimit when the grid
// would exceed options.max_bytes.
SpectrumGrid EvalGrid(const ArithmeticSequence& f, std::size_t oversample,
                      const SpectrumOptions& options = {});

// sqrt(sum f(n)^2).
double L2Parseval(const ArithmeticSequence& f);

L1Estimate L1Quadrature(const ArithmeticSequence& f, std::size_t oversample,
                        const SpectrumOptions& options = {});

LinfEstimate LinfGrid(const ArithmeticSequence& f, std::size_t oversample,
                      const SpectrumOptions& options = {});

// Bernstein factor 1 / (1 - pi R / M).
double LinfCorrectionBound(std::size_t length, std::size_t grid_size);

// L1, L2, Linf and their ratio. L1 and Linf come from the 2 * oversample
// grid; the oversample grid only feeds the error indicator. Throws
// InvalidArgument for an identically zero sequence.
NormReport FourierRatio(const ArithmeticSequence& f,
                        std::size_t oversample = kDefaultOversample,
                        const SpectrumOptions& options = {});

}  // namespace frlab

#endif  // FRLAB_SPECTRUM_H_
