// Copyright 2026 The Neurometry Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef NEUROMETRY_RNG_HPP_
#define NEUROMETRY_RNG_HPP_

#include <cstdint>

namespace neurometry {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937 because the
/// algorithm is tiny and its output sequence is pinned here, so fixtures are
/// reproducible across platforms and language ports.
///
/// Derived values are defined as:
///   next_u64()            — raw 64-bit output
///   next_double()         — (next_u64() >> 11) * 2^-53, in [0,1)
///   next_int(lo, hi)      — lo + next_u64() % (hi - lo + 1), inclusive
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  /// Deterministic stream derivation, e.g. one substream per scene.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    return mix.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace neurometry

#endif  // NEUROMETRY_RNG_HPP_
