// Copyright 2026 The crosseval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Seeded randomness used everywhere in this project. The generator is
// pinned to SplitMix64 (Steele, Lea & Flood's 64-bit finalizer over a
// Weyl sequence) rather than std::mt19937 / std::*_distribution so that
// a given seed produces the same stream on every standard library.
// Gaussian variates come from the Box-Muller transform; integer draws
// use rejection sampling, never a bare modulo.

#ifndef CROSSEVAL_RNG_HPP_
#define CROSSEVAL_RNG_HPP_

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <vector>

namespace crosseval {

/// SplitMix64: state advances by the golden-ratio increment, output is
/// an avalanche hash of the state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double next_unit_positive() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). Rejection keeps the draw exactly
  /// uniform for any bound.
  std::uint64_t next_below(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x;
    do {
      x = next();
    } while (x < min);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a hash of a byte string, used to key per-subset substreams.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

/// Seed for substream `key` of run seed `seed`: one SplitMix64 output of
/// their XOR. Distinct keys give decorrelated streams of the same run.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t key) {
  return SplitMix64(seed ^ key).next();
}

/// Standard-normal variates via Box-Muller. Draws two uniforms per pair
/// of outputs; the second variate of a pair is cached.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(rng_.next_unit_positive()));
    const double angle = 2.0 * kPi * rng_.next_unit();
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  static constexpr double kPi = 3.141592653589793238462643383279502884;

  SplitMix64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// First k positions of a seeded Fisher-Yates shuffle of [0, n): a
/// uniform sample of k distinct indices. For a fixed stream the sample
/// for a smaller k is a prefix of the sample for a larger one.
inline std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                           std::size_t k,
                                                           SplitMix64& rng) {
  assert(k <= n);
  std::vector<std::size_t> index(n);
  std::iota(index.begin(), index.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next_below(n - i));
    std::swap(index[i], index[j]);
  }
  index.resize(k);
  return index;
}

}  // namespace crosseval

#endif  // CROSSEVAL_RNG_HPP_
