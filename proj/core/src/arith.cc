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

#include "frlab/arith.h"

#include <atomic>
#include <cmath>
#include <algorithm>
#include <string>

#include "frlab/errors.h"
#include "frlab/hash.h"
#include "frlab/summation.h"

namespace frlab {
namespace {

std::atomic<std::size_t> g_max_length{kDefaultMaxLength};

// Above 2^31 the smallest-prime-factor table no longer fits comfortably;
// switch to the segmented route.
constexpr std::size_t kLinearSieveLimit = std::size_t{1} << 31;
constexpr std::size_t kDefaultSegment = std::size_t{1} << 18;

bool IsDeterministic(SequenceKind kind) {
  return kind != SequenceKind::kRademacher && kind != SequenceKind::kCustom;
}

std::vector<double> LinearSieveValues(SequenceKind kind, std::size_t length) {
  const std::vector<std::uint32_t> spf = internal::SmallestPrimeFactors(length);
  std::vector<double> out(length + 1, 0.0);
  out[1] = kind == SequenceKind::kVonMangoldt ? 0.0 : 1.0;
  for (std::size_t n = 2; n <= length; ++n) {
    const std::size_t p = spf[n];
    const std::size_t m = n / p;
    const bool repeated = spf[m] == p;
    switch (kind) {
      case SequenceKind::kMobius:
        out[n] = repeated ? 0.0 : -out[m];
        break;
      case SequenceKind::kLiouville:
        out[n] = -out[m];
        break;
      case SequenceKind::kSquarefreeIndicator:
        out[n] = repeated ? 0.0 : out[m];
        break;
      case SequenceKind::kVonMangoldt:
        // n = p^k iff m = 1 or m is itself a power of the same p.
        out[n] = (m == 1 || (repeated && out[m] > 0.0))
                     ? std::log(static_cast<double>(p))
                     : 0.0;
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace

std::string_view KindName(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::kMobius:
      return "mobius";
    case SequenceKind::kLiouville:
      return "liouville";
    case SequenceKind::kVonMangoldt:
      return "von_mangoldt";
    case SequenceKind::kSquarefreeIndicator:
      return "squarefree_indicator";
    case SequenceKind::kRademacher:
      return "rademacher";
    case SequenceKind::kCustom:
      return "custom";
  }
  return "unknown";
}

std::optional<SequenceKind> ParseKind(std::string_view name) {
  for (SequenceKind k :
       {SequenceKind::kMobius, SequenceKind::kLiouville,
        SequenceKind::kVonMangoldt, SequenceKind::kSquarefreeIndicator,
        SequenceKind::kRademacher, SequenceKind::kCustom}) {
    if (KindName(k) == name) return k;
  }
  return std::nullopt;
}

bool ArithmeticSequence::IsZero() const {
  for (double v : values()) {
    if (v != 0.0) return false;
  }
  return true;
}

ArithmeticSequence ArithmeticSequence::Custom(std::vector<double> values) {
  if (values.empty()) {
    throw InvalidArgument("custom sequence must have length >= 1");
  }
  std::vector<double> storage;
  storage.reserve(values.size() + 1);
  storage.push_back(0.0);
  storage.insert(storage.end(), values.begin(), values.end());
  return MakeSequence(SequenceKind::kCustom, std::move(storage), std::nullopt);
}

ArithmeticSequence MakeSequence(SequenceKind kind, std::vector<double> storage,
                                std::optional<std::uint64_t> seed) {
  if (storage.size() < 2) {
    throw InvalidArgument("sequence must have length >= 1");
  }
  storage[0] = 0.0;
  return ArithmeticSequence(kind, std::move(storage), seed);
}

void SetMaxSequenceLength(std::size_t max_length) {
  g_max_length.store(max_length);
}

std::size_t MaxSequenceLength() { return g_max_length.load(); }

ArithmeticSequence Sieve(SequenceKind kind, std::size_t length,
                         std::optional<std::uint64_t> seed) {
  if (length == 0) throw InvalidArgument("sieve: R must be >= 1");
  if (kind == SequenceKind::kCustom) {
    throw InvalidArgument("sieve: custom sequences are not generated");
  }
  if (IsDeterministic(kind) && seed.has_value()) {
    throw InvalidArgument("sieve: seed given for deterministic kind " +
                          std::string(KindName(kind)));
  }
  if (kind == SequenceKind::kRademacher && !seed.has_value()) {
    throw InvalidArgument("sieve: rademacher requires a seed");
  }
  if (length > MaxSequenceLength()) {
    throw InvalidArgument("sieve: R = " + std::to_string(length) +
                          " exceeds the configured cap " +
                          std::to_string(MaxSequenceLength()));
  }

  std::vector<double> storage;
  if (kind == SequenceKind::kRademacher) {
    storage.assign(length + 1, 0.0);
    for (std::size_t n = 1; n <= length; ++n) {
      storage[n] = RademacherSign(*seed, n);
    }
  } else if (length <= kLinearSieveLimit) {
    storage = LinearSieveValues(kind, length);
  } else {
    storage = internal::SegmentedValues(kind, length, kDefaultSegment);
  }
  return MakeSequence(kind, std::move(storage), seed);
}

ArithmeticSequence Center(const ArithmeticSequence& f) {
  if (f.centered()) throw InvalidState("center: sequence already centered");
  const double mean =
      CompensatedTotal(f.values()) / static_cast<double>(f.size());
  std::vector<double> storage(f.padded().begin(), f.padded().end());
  for (std::size_t n = 1; n < storage.size(); ++n) storage[n] -= mean;
  ArithmeticSequence out(f.kind(), std::move(storage), f.seed());
  out.centered_ = true;
  out.centering_constant_ = mean;
  return out;
}

double Summatory(const ArithmeticSequence& f) {
  return CompensatedTotal(f.values());
}

std::size_t SquarefreeCount(const ArithmeticSequence& mobius) {
  std::size_t count = 0;
  for (double v : mobius.values()) count += v != 0.0 ? 1 : 0;
  return count;
}

namespace internal {

std::vector<std::uint32_t> SmallestPrimeFactors(std::size_t limit) {
  std::vector<std::uint32_t> spf(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || i * p > limit) break;
      spf[i * p] = p;
    }
  }
  return spf;
}

std::vector<double> SegmentedValues(SequenceKind kind, std::size_t length,
                                    std::size_t segment_size) {
  if (segment_size == 0) throw InvalidArgument("segment size must be > 0");
  std::size_t root = static_cast<std::size_t>(std::sqrt(double(length)));
  while (root * root > length) --root;
  while ((root + 1) * (root + 1) <= length) ++root;
  std::vector<std::uint32_t> base_primes;
  {
    const auto spf = SmallestPrimeFactors(root);
    for (std::size_t i = 2; i <= root; ++i) {
      if (spf[i] == i) base_primes.push_back(static_cast<std::uint32_t>(i));
    }
  }

  std::vector<double> out(length + 1, 0.0);
  std::vector<std::uint64_t> rest(segment_size);
  std::vector<std::uint64_t> last_prime(segment_size);
  std::vector<std::uint8_t> distinct(segment_size);
  std::vector<std::uint8_t> total(segment_size);
  std::vector<std::uint8_t> squarefull(segment_size);

  for (std::uint64_t lo = 1; lo <= length; lo += segment_size) {
    const std::uint64_t hi = std::min<std::uint64_t>(lo + segment_size, length + 1);
    const std::size_t width = hi - lo;
    for (std::size_t i = 0; i < width; ++i) {
      rest[i] = lo + i;
      last_prime[i] = 0;
      distinct[i] = 0;
      total[i] = 0;
      squarefull[i] = 0;
    }
    for (std::uint64_t p : base_primes) {
      std::uint64_t first = (lo + p - 1) / p * p;
      for (std::uint64_t n = first; n < hi; n += p) {
        const std::size_t i = n - lo;
        int e = 0;
        while (rest[i] % p == 0) {
          rest[i] /= p;
          ++e;
        }
        ++distinct[i];
        total[i] = static_cast<std::uint8_t>(total[i] + e);
        last_prime[i] = p;
        if (e >= 2) squarefull[i] = 1;
      }
    }
    for (std::size_t i = 0; i < width; ++i) {
      // At most one prime factor above sqrt(R) survives the division.
      if (rest[i] > 1) {
        ++distinct[i];
        ++total[i];
        last_prime[i] = rest[i];
      }
      double v = 0.0;
      switch (kind) {
        case SequenceKind::kMobius:
          v = squarefull[i] ? 0.0 : (distinct[i] % 2 ? -1.0 : 1.0);
          break;
        case SequenceKind::kLiouville:
          v = total[i] % 2 ? -1.0 : 1.0;
          break;
        case SequenceKind::kSquarefreeIndicator:
          v = squarefull[i] ? 0.0 : 1.0;
          break;
        case SequenceKind::kVonMangoldt:
          v = distinct[i] == 1 ? std::log(static_cast<double>(last_prime[i]))
                               : 0.0;
          break;
        default:
          throw InvalidArgument("segmented sieve: unsupported kind");
      }
      out[lo + i] = v;
    }
  }
  return out;
}

}  // namespace internal

}  // namespace frlab
