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

#ifndef FRLAB_HASH_H_
#define FRLAB_HASH_H_

#include <cstdint>

namespace frlab {

// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream key from (key, counter). Used both as the
// counter-based sign generator and to split seeds for trials.
constexpr std::uint64_t HashSplit(std::uint64_t key, std::uint64_t counter) {
  return Mix64(Mix64(key) ^ (counter * 0xd1b54a32d192ed03ULL + 1));
}

// Uniform +-1 keyed by (seed, counter); independent of evaluation order.
constexpr int RademacherSign(std::uint64_t seed, std::uint64_t counter) {
  return (HashSplit(seed, counter) >> 63) != 0 ? -1 : 1;
}

}  // namespace frlab

#endif  // FRLAB_HASH_H_
