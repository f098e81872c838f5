// Copyright 2026 The plateau authors
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

#pragma once

#include <cmath>
#include <cstdint>

namespace plateau {

/// Counter-based SplitMix64 stream.
///
/// Every draw is `mix(key + GOLDEN * counter++)`, so a stream is a pure
/// function of (key, draw index).  Streams for independent work items are
/// derived with `stream(seed, index)`; results are reproducible bit-for-bit
/// regardless of evaluation order, which is what makes sample-parallel
/// Monte Carlo agree with the serial run.
///
/// All real-valued draws avoid std::*_distribution on purpose: those are
/// implementation-defined, and reports embed seeds that must replay anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t key) : key_(key) {}

  /// Independent stream #index of a run-level seed.
  static SplitMix64 stream(uint64_t seed, uint64_t index) {
    return SplitMix64(mix(mix(seed) ^ mix(0x9e3779b97f4a7c15ull + index)));
  }

  uint64_t next_u64() { return mix(key_ + kGolden * counter_++); }

  /// Uniform on [0, 1): 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Marsaglia polar (explicit algorithm, no libm
  /// distribution objects).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

 private:
  static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  uint64_t key_;
  uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace plateau
