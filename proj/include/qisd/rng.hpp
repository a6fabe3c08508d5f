// Copyright 2026 The qisd authors
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

#include <cmath>
#include <cstdint>

namespace qisd {

/// Splittable counter-style PRNG built on the SplitMix64 mixing function.
///
/// A stream is identified by (seed, stream_id). Identical identifiers
/// reproduce identical draws on every platform that has IEEE-754 doubles;
/// the integer pipeline is exact and the floating-point conversion uses
/// only multiplication by 2^-53. Distinct stream_ids give statistically
/// independent sequences, so Monte-Carlo loops can draw per-task streams
/// with `substream` and stay reproducible under any parallel schedule.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {
    state_ = mix64(seed + 0x9E3779B97F4A7C15ULL);
    state_ ^= mix64(stream_id * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Independent stream derived from this stream's identity.
  RngStream substream(std::uint64_t k) const {
    return RngStream(seed_, mix64(stream_id_ + 1) + k);
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; generates pairs, caches the second.
  double next_normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.283185307179586476925286766559;
    cached_ = r * std::sin(two_pi * u2);
    have_cached_ = true;
    return r * std::cos(two_pi * u2);
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // multiply-shift rejection-free mapping is fine at these scales
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(n));
  }

 private:
  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace qisd
