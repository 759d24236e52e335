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

#ifndef FRLAB_SUMMATION_H_
#define FRLAB_SUMMATION_H_

#include <cmath>
#include <cstddef>
#include <span>

namespace frlab {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double Result() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

inline double CompensatedTotal(std::span<const double> values) {
  CompensatedSum acc;
  for (double v : values) acc.Add(v);
  return acc.Result();
}

// Pairwise summation over a fixed-shape tree: the result depends only on the
// input, never on how the work is scheduled.
inline double PairwiseTotal(std::span<const double> values) {
  constexpr std::size_t kLeaf = 128;
  if (values.size() <= kLeaf) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return PairwiseTotal(values.first(half)) + PairwiseTotal(values.subspan(half));
}

}  // namespace frlab

#endif  // FRLAB_SUMMATION_H_
