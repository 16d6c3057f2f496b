// Copyright 2026 The ffdot Authors.
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

#include <cstdint>

#include "ffdot/rational.hpp"

namespace ffdot {

/// SplitMix64 (Steele/Lea/Flood). Chosen as the experiment RNG because the
/// whole generator is four lines that reproduce bit-identically in any
/// language, which is what seeded report determinism requires.
///
/// Stream splitting rule: the stream with index j starts from state
/// seed + j (mod 2^64). Experiment code assigns stream indices as
/// t*(k+1)+c for component set c of trial t, and t*(k+1)+k for the
/// product-subset sampler of trial t, where k is the number of components.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound). Plain modulo; the (at most 2^-44) bias is
  /// irrelevant for desk-scale sampling and keeps the stream portable.
  std::uint64_t next_below(std::uint64_t bound) {
    return bound <= 1 ? 0 : next() % bound;
  }

  /// True with probability exactly floor(p * 2^64) / 2^64 for p = num/den:
  /// draw u and test u * den < num * 2^64 in exact integer arithmetic.
  bool bernoulli(const Rational& p) {
    const std::uint64_t u = next();
    return BigInt(u) * denominator(p) < (numerator(p) << 64);
  }

 private:
  std::uint64_t state_;
};

/// The documented stream-splitting rule.
inline SplitMix64 rng_stream(std::uint64_t seed, std::uint64_t stream_index) {
  return SplitMix64(seed + stream_index);
}

}  // namespace ffdot
