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

#include "frlab/spectrum.h"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <mutex>
#include <numbers>
#include <span>
#include <string>

#include "frlab/errors.h"
#include "frlab/summation.h"

namespace frlab {
namespace {

// FFTW's planner is not re-entrant; execution is.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

class RealForwardPlan {
 public:
  RealForwardPlan(std::size_t n, double* buffer) {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    // FFTW_UNALIGNED keeps codelet choice independent of where the allocator
    // placed the buffer, so results are bit-reproducible run to run.
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), buffer,
                                 reinterpret_cast<fftw_complex*>(buffer),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  ~RealForwardPlan() {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    if (plan_ != nullptr) fftw_destroy_plan(plan_);
  }
  RealForwardPlan(const RealForwardPlan&) = delete;
  RealForwardPlan& operator=(const RealForwardPlan&) = delete;

  bool valid() const { return plan_ != nullptr; }
  void Execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_ = nullptr;
};

double SumSquares(std::span<const double> values) {
  CompensatedSum acc;
  for (double v : values) acc.Add(v * v);
  return acc.Result();
}

}  // namespace

std::string_view MeasureName(GridMeasure measure) {
  switch (measure) {
    case GridMeasure::kModulus:
      return "modulus";
    case GridMeasure::kRealPart:
      return "real_part";
  }
  return "unknown";
}

std::optional<GridMeasure> ParseMeasure(std::string_view name) {
  for (GridMeasure m : {GridMeasure::kModulus, GridMeasure::kRealPart}) {
    if (MeasureName(m) == name) return m;
  }
  return std::nullopt;
}

double ApplyMeasure(GridMeasure measure, std::complex<double> value) {
  return measure == GridMeasure::kModulus
             ? std::sqrt(value.real() * value.real() +
                         value.imag() * value.imag())
             : std::numbers::sqrt2 * std::fabs(value.real());
}

std::vector<double> SpectrumGrid::Magnitudes() const {
  std::vector<double> out(grid_size_);
  for (std::size_t j = 0; j < grid_size_; ++j) out[j] = magnitude(j);
  return out;
}

double SpectrumGrid::MeanAbs() const {
  const std::size_t nyquist = grid_size_ / 2;
  const double interior =
      PairwiseTotal(std::span<const double>(half_).subspan(1, nyquist - 1));
  return (half_[0] + half_[nyquist] + 2.0 * interior) /
         static_cast<double>(grid_size_);
}

double SpectrumGrid::MeanSquare() const {
  const std::size_t nyquist = grid_size_ / 2;
  std::vector<double> squares(nyquist - 1);
  for (std::size_t j = 1; j < nyquist; ++j) squares[j - 1] = half_[j] * half_[j];
  const double interior = PairwiseTotal(squares);
  return (half_[0] * half_[0] + half_[nyquist] * half_[nyquist] +
          2.0 * interior) /
         static_cast<double>(grid_size_);
}

double SpectrumGrid::Max() const {
  return *std::max_element(half_.begin(), half_.end());
}

std::complex<double> EvalPoint(const ArithmeticSequence& f, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidArgument("eval_point: x must lie in [0, 1]");
  }
  CompensatedSum re;
  CompensatedSum im;
  const auto coeffs = f.padded();
  for (std::size_t n = 1; n < coeffs.size(); ++n) {
    const double c = coeffs[n];
    if (c == 0.0) continue;
    const double phase =
        2.0 * std::numbers::pi * std::fmod(static_cast<double>(n) * x, 1.0);
    re.Add(c * std::cos(phase));
    im.Add(c * std::sin(phase));
  }
  return {re.Result(), im.Result()};
}

std::size_t GridSize(std::size_t length, std::size_t oversample) {
  return std::bit_ceil(std::max({oversample * length, 2 * length + 2,
                                 oversample * kMinPointsPerOversample}));
}

std::size_t GridBytes(std::size_t grid_size) {
  return (grid_size + 2) * sizeof(double);
}

SpectrumGrid EvalGrid(const ArithmeticSequence& f, std::size_t oversample,
                      const SpectrumOptions& options) {
  if (oversample < 2) {
    throw InvalidArgument("eval_grid: oversample must be >= 2");
  }
  const std::size_t length = f.size();
  const std::size_t grid = GridSize(length, oversample);
  const std::size_t bytes = GridBytes(grid);
  if (bytes > options.max_bytes || grid > static_cast<std::size_t>(INT_MAX)) {
    throw ResourceLimit("eval_grid: R = " + std::to_string(length) +
                            " with oversample " + std::to_string(oversample) +
                            " needs a grid of " + std::to_string(grid) +
                            " points (" + std::to_string(bytes) +
                            " bytes); limit is " +
                            std::to_string(options.max_bytes) + " bytes",
                        bytes, options.max_bytes);
  }

  // In-place r2c layout: M reals in, M/2 + 1 complex out.
  std::vector<double> buffer(grid + 2, 0.0);
  RealForwardPlan plan(grid, buffer.data());
  if (!plan.valid()) throw NumericFailure("eval_grid: FFTW planning failed");
  const auto coeffs = f.padded();
  std::copy(coeffs.begin(), coeffs.end(), buffer.begin());
  plan.Execute();

  // The transform uses e^{-2 pi i}; for real input that is the conjugate of
  // F, which has the same modulus and real part. Slot j is written after
  // slots 2j, 2j+1 are read.
  const std::size_t half = grid / 2 + 1;
  for (std::size_t j = 0; j < half; ++j) {
    buffer[j] = ApplyMeasure(options.measure,
                             {buffer[2 * j], buffer[2 * j + 1]});
  }
  buffer.resize(half);
  return SpectrumGrid(grid, length, oversample, options.measure,
                      std::move(buffer));
}

double L2Parseval(const ArithmeticSequence& f) {
  return std::sqrt(SumSquares(f.values()));
}

L1Estimate L1Quadrature(const ArithmeticSequence& f, std::size_t oversample,
                        const SpectrumOptions& options) {
  const double coarse = EvalGrid(f, oversample, options).MeanAbs();
  const SpectrumGrid fine = EvalGrid(f, 2 * oversample, options);
  const double estimate = fine.MeanAbs();
  return {estimate, std::fabs(estimate - coarse), fine.grid_size()};
}

double LinfCorrectionBound(std::size_t length, std::size_t grid_size) {
  return 1.0 / (1.0 - std::numbers::pi * static_cast<double>(length) /
                          static_cast<double>(grid_size));
}

LinfEstimate LinfGrid(const ArithmeticSequence& f, std::size_t oversample,
                      const SpectrumOptions& options) {
  const SpectrumGrid grid = EvalGrid(f, oversample, options);
  return {grid.Max(), LinfCorrectionBound(f.size(), grid.grid_size()),
          grid.grid_size()};
}

NormReport FourierRatio(const ArithmeticSequence& f, std::size_t oversample,
                        const SpectrumOptions& options) {
  if (f.IsZero()) {
    throw InvalidArgument("fourier_ratio: sequence is identically zero");
  }
  const double coarse_l1 = EvalGrid(f, oversample, options).MeanAbs();
  const SpectrumGrid fine = EvalGrid(f, 2 * oversample, options);

  NormReport report;
  report.measure = options.measure;
  report.length = f.size();
  report.grid_size = fine.grid_size();
  report.l1 = fine.MeanAbs();
  report.l1_error_indicator = std::fabs(report.l1 - coarse_l1);
  report.linf = fine.Max();
  report.linf_correction_bound =
      LinfCorrectionBound(f.size(), fine.grid_size());

  const double energy = SumSquares(f.values());
  report.l2 = std::sqrt(energy);
  report.parseval_residual = std::fabs(fine.MeanSquare() - energy) / energy;
  report.fourier_ratio = report.l1 / report.l2;
  return report;
}

}  // namespace frlab
