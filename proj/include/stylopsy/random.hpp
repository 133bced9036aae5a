// Copyright 2026 The Stylopsy Authors.
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


#pragma once

// Deterministic random numbers for training and data splits.
//
// Generator: xoshiro256** (Blackman & Vigna, 2018), state seeded by four
// successive outputs of splitmix64. Both are fully specified here so that a
// seed produces the same stream on every platform and standard library; the
// <random> distributions are deliberately not used because their output is
// implementation-defined.

#include <array>
#include <cstddef>
#include <cstdint>

namespace stylopsy {

// splitmix64 finalizer and increment.
inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kSplitMixMul1 = 0xBF58476D1CE4E5B9ULL;
inline constexpr std::uint64_t kSplitMixMul2 = 0x94D049BB133111EBULL;

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * kSplitMixMul1;
  z = (z ^ (z >> 27)) * kSplitMixMul2;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kSplitMixGamma;
    return splitmix64_mix(state_);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  constexpr result_type operator()() { return next(); }

  constexpr std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, n) by rejection, so there is no modulo bias. n must be > 0.
  constexpr std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  constexpr double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  const std::array<std::uint64_t, 4>& state() const { return s_; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> s_{};
};

// Independent stream for sub-task `stream` (e.g. a tree index) of a run seeded
// with `seed`. Depends only on the pair, not on how many streams exist.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64_mix(seed ^ splitmix64_mix(stream + kSplitMixGamma));
}

inline Xoshiro256 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return Xoshiro256(derive_seed(seed, stream));
}

// Fisher-Yates with uniform_index.
template <typename It>
void shuffle(It first, It last, Xoshiro256& rng) {
  const auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    const auto j = rng.uniform_index(i);
    std::swap(first[i - 1], first[j]);
  }
}

}  // namespace stylopsy
