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

#ifndef FRLAB_ARITH_H_
#define FRLAB_ARITH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace frlab {

enum class SequenceKind {
  kMobius,
  kLiouville,
  kVonMangoldt,
  kSquarefreeIndicator,
  kRademacher,
  kCustom,
};

// Canonical lower-case names: "mobius", "liouville", "von_mangoldt",
// "squarefree_indicator", "rademacher", "custom".
std::string_view KindName(SequenceKind kind);
std::optional<SequenceKind> ParseKind(std::string_view name);

// Dense table f(1..R) of real coefficients. Storage keeps an unused slot at
// index 0, so padded()[n] == f(n). Instances are immutable.
class ArithmeticSequence {
 public:
  // Wraps caller-provided values f(1), ..., f(R).
  static ArithmeticSequence Custom(std::vector<double> values);

  SequenceKind kind() const { return kind_; }
  std::size_t size() const { return storage_.size() - 1; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  bool centered() const { return centered_; }
  double centering_constant() const { return centering_constant_; }

  // 1-based access.
  double operator[](std::size_t n) const { return storage_[n]; }
  // f(1..R).
  std::span<const double> values() const {
    return std::span<const double>(storage_).subspan(1);
  }
  // f(0..R) with f(0) = 0.
  std::span<const double> padded() const { return storage_; }

  bool IsZero() const;

 private:
  friend ArithmeticSequence Center(const ArithmeticSequence&);
  friend ArithmeticSequence MakeSequence(SequenceKind, std::vector<double>,
                                         std::optional<std::uint64_t>);

  ArithmeticSequence(SequenceKind kind, std::vector<double> storage,
                     std::optional<std::uint64_t> seed)
      : kind_(kind), storage_(std::move(storage)), seed_(seed) {}

  SequenceKind kind_;
  std::vector<double> storage_;
  std::optional<std::uint64_t> seed_;
  bool centered_ = false;
  double centering_constant_ = 0.0;
};

// Builds a sequence from raw storage (index 0 ignored and zeroed). Intended
// for constructions layered on top of the sieve, such as sign completions.
ArithmeticSequence MakeSequence(SequenceKind kind, std::vector<double> storage,
                                std::optional<std::uint64_t> seed);

// Sequences longer than this are rejected unless the cap is raised.
inline constexpr std::size_t kDefaultMaxLength = 10'000'000;
void SetMaxSequenceLength(std::size_t max_length);
std::size_t MaxSequenceLength();

// Generates mu, lambda, Lambda, |mu| or seeded random signs on 1..R.
// `seed` is required for kRademacher and rejected for every other kind.
// Throws InvalidArgument on R == 0, on seed misuse, on kCustom, and when R
// exceeds MaxSequenceLength().
ArithmeticSequence Sieve(SequenceKind kind, std::size_t length,
                         std::optional<std::uint64_t> seed = std::nullopt);

// Subtracts the mean. Throws InvalidState if `f` is already centered.
ArithmeticSequence Center(const ArithmeticSequence& f);

// Sum of f(1..R), compensated.
double Summatory(const ArithmeticSequence& f);

// Number of squarefree n <= R, i.e. Q(R).
std::size_t SquarefreeCount(const ArithmeticSequence& mobius);

namespace internal {

// Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0), built by
// the linear sieve.
std::vector<std::uint32_t> SmallestPrimeFactors(std::size_t limit);

// Segmented route to mu/lambda/Lambda on [1, R]; used above the range where
// the smallest-prime-factor table fits 32 bits, and as a cross-check.
std::vector<double> SegmentedValues(SequenceKind kind, std::size_t length,
                                    std::size_t segment_size);

}  // namespace internal

}  // namespace frlab

#endif  // FRLAB_ARITH_H_
