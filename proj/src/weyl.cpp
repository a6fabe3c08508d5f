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

#include "qisd/weyl.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qisd/parallel.hpp"

namespace qisd {

bool in_region(const InteractionCoeffs& p, ChamberRegion r, double tol) {
  const bool in_w = (kPi / 4 + tol >= p.x) && (p.x + tol >= p.y) &&
                    (p.y + tol >= std::abs(p.z));
  if (r == ChamberRegion::FULL_W) return in_w;
  return in_w && (p.x + tol >= p.y + std::abs(p.z));
}

double weyl_measure_density(const InteractionCoeffs& p) {
  const double a = std::cos(4 * p.x), b = std::cos(4 * p.y),
               c = std::cos(4 * p.z);
  return (48.0 / kPi) * std::abs((a - b) * (b - c) * (a - c));
}

InteractionCoeffs sample_weyl_point(RngStream& rng) {
  // density maximum 96/pi sits at (pi/4, pi/8, 0)
  const double bound = 30.6;
  for (;;) {
    InteractionCoeffs p;
    p.x = rng.next_double() * (kPi / 4);
    p.y = rng.next_double() * (kPi / 4);
    p.z = (2 * rng.next_double() - 1) * (kPi / 4);
    if (!in_region(p, ChamberRegion::FULL_W, 0.0)) continue;
    if (rng.next_double() * bound < weyl_measure_density(p)) return p;
  }
}

VolumeEstimate fraction_two_sqisw(std::int64_t samples, RngStream rng,
                                  VolumeMethod method, ChamberRegion region,
                                  int threads) {
  if (samples < 10000) throw std::invalid_argument("need at least 1e4 samples");
  std::vector<std::uint8_t> hits(samples);
  parallel_for(samples, threads, [&](std::int64_t i) {
    RngStream s = rng.substream(static_cast<std::uint64_t>(i));
    InteractionCoeffs p;
    if (method == VolumeMethod::DensityMc) {
      p = sample_weyl_point(s);
    } else {
      p = kak_coordinates(haar_su4(s));
    }
    hits[i] = in_region(p, region) ? 1 : 0;
  });
  std::int64_t k = 0;
  for (auto h : hits) k += h;
  VolumeEstimate out;
  out.samples = samples;
  out.estimate = static_cast<double>(k) / static_cast<double>(samples);
  out.stderr_ = std::sqrt(out.estimate * (1.0 - out.estimate) /
                          static_cast<double>(samples));
  return out;
}

double effective_target_size(TargetGate gate, double a) {
  if (!(a > 0 && a < kPi / 4)) throw std::invalid_argument("a out of range");
  if (gate == TargetGate::SQiSW) {
    return (1.0 / (2 * kPi)) *
           (3 * std::cos(a) - 3 * std::cos(3 * a) - 4 * a * std::sin(3 * a));
  }
  return (1.0 / (2 * kPi)) *
         (8 * a + 7 * a * std::cos(3 * a) - 15 * a * std::cos(a) -
          9 * std::sin(3 * a) + 12 * std::sin(2 * a) + 3 * std::sin(a));
}

namespace {

// class order: I, CNOT, iSWAP, SWAP
constexpr double kClassWeights[4] = {576.0 / 11520, 5184.0 / 11520,
                                     5184.0 / 11520, 576.0 / 11520};

int class_count(Backend instruction, int cls) {
  static constexpr int sqisw_counts[4] = {0, 2, 2, 3};
  static constexpr int cnot_counts[4] = {0, 1, 2, 3};
  static constexpr int iswap_counts[4] = {0, 2, 1, 3};
  switch (instruction) {
    case Backend::SQiSW:
      return sqisw_counts[cls];
    case Backend::iSWAP:
      return iswap_counts[cls];
  }
  return cnot_counts[cls];
}

}  // namespace

double expected_gate_count_cnot(GateDistribution dist) {
  if (dist == GateDistribution::Haar) return 3.0;  // z != 0 almost surely
  double mean = 0;
  static constexpr int cnot_counts[4] = {0, 1, 2, 3};
  for (int c = 0; c < 4; ++c) mean += kClassWeights[c] * cnot_counts[c];
  return mean;
}

double expected_gate_count(GateDistribution dist, Backend instruction,
                           std::int64_t samples, RngStream rng, int threads) {
  if (dist == GateDistribution::Clifford) {
    double mean = 0;
    for (int c = 0; c < 4; ++c)
      mean += kClassWeights[c] * class_count(instruction, c);
    return mean;
  }
  if (instruction == Backend::iSWAP) return 3.0;  // z != 0 almost surely
  if (samples < 10000) throw std::invalid_argument("need at least 1e4 samples");
  std::vector<std::uint8_t> counts(samples);
  parallel_for(samples, threads, [&](std::int64_t i) {
    RngStream s = rng.substream(static_cast<std::uint64_t>(i));
    const InteractionCoeffs p = kak_coordinates(haar_su4(s));
    counts[i] = static_cast<std::uint8_t>(required_sqisw_count(p));
  });
  double mean = 0;
  for (auto c : counts) mean += c;
  return mean / static_cast<double>(samples);
}

}  // namespace qisd
