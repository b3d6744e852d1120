// Copyright 2026 The Ranking Concentration Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random streams.
//
// Every stream in the project is a SplitMix64 generator. Trial k of a Monte
// Carlo campaign with master seed s draws from the stream seeded with
//   DeriveSeed(s, k) = Mix64(s ^ Mix64(k + 0x9e3779b97f4a7c15))
// where Mix64 is the SplitMix64 output finalizer. Streams are therefore
// independent of how trials are scheduled across threads. The derivation is
// part of the reproducibility contract and must not change.

#ifndef RANKING_RNG_H_
#define RANKING_RNG_H_

#include <cstdint>
#include <limits>

#include "ranking/instance.h"

namespace ranking {

inline constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t DeriveSeed(std::uint64_t master,
                                          std::uint64_t index) {
  return Mix64(master ^ Mix64(index + 0x9e3779b97f4a7c15ULL));
}

// Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return Mix64(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double NextUnit() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t NextBelow(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t r;
    do {
      r = (*this)();
    } while (r >= limit);
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

inline RankVector DrawRanks(SplitMix64& stream, int dimension) {
  RankVector x;
  x.values.resize(dimension);
  for (double& v : x.values) v = stream.NextUnit();
  return x;
}

// Fisher-Yates with NextBelow, so shuffles are identical on every standard
// library.
template <typename T>
void Shuffle(SplitMix64& stream, std::vector<T>& items) {
  for (size_t k = items.size(); k > 1; --k) {
    std::swap(items[k - 1], items[stream.NextBelow(k)]);
  }
}

}  // namespace ranking

#endif  // RANKING_RNG_H_
