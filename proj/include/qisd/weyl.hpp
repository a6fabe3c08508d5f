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

#include <cstdint>

#include "qisd/compile.hpp"
#include "qisd/kak.hpp"
#include "qisd/rng.hpp"

namespace qisd {

enum class ChamberRegion { FULL_W, W_PRIME };

/// Region membership with 1e-9 slack on every inequality (KAK output sits
/// numerically on boundaries).
bool in_region(const InteractionCoeffs& p, ChamberRegion r, double tol = 1e-9);

/// Normalized density of the Haar measure pushed forward to the chamber:
///   (48/pi) |(cos4x - cos4y)(cos4y - cos4z)(cos4x - cos4z)|.
/// Integrates to 1 over the chamber; the two-SQiSW region carries mass
/// 7/8 - 4/(15 pi).
double weyl_measure_density(const InteractionCoeffs& p);

/// Draw a chamber point distributed per the Haar density (rejection
/// sampling over the chamber bounding box).
InteractionCoeffs sample_weyl_point(RngStream& rng);

enum class VolumeMethod { DensityMc, HaarPushforward };

struct VolumeEstimate {
  double estimate = 0;
  double stderr_ = 0;
  std::int64_t samples = 0;
};

/// Monte-Carlo estimate of the W' probability mass. `DensityMc` samples the
/// analytic density directly; `HaarPushforward` samples Haar SU(4) and
/// classifies the KAK coordinates. Parallelizes over sample-indexed
/// substreams, so results do not depend on the thread count.
VolumeEstimate fraction_two_sqisw(std::int64_t samples, RngStream rng,
                                  VolumeMethod method,
                                  ChamberRegion region = ChamberRegion::W_PRIME,
                                  int threads = 0);

enum class TargetGate { SQiSW, CNOT_or_iSWAP };

/// Closed-form effective target size for a box of edge length a.
/// Leading orders: 4a^4/pi (SQiSW) and 4a^5/pi (CNOT/iSWAP).
double effective_target_size(TargetGate gate, double a);

enum class GateDistribution { Haar, Clifford };

/// Expected number of backend applications to compile a random two-qubit
/// gate. Haar uses Monte-Carlo over KAK coordinates; Clifford is exact from
/// the local-equivalence class weights of the 11520-element two-qubit
/// Clifford group: (I, CNOT, iSWAP, SWAP) classes carry
/// (576, 5184, 5184, 576) elements (24^2 local Cliffords on each side per
/// class representative, with the I and SWAP classes self-mirror).
double expected_gate_count(GateDistribution dist, Backend instruction,
                           std::int64_t samples, RngStream rng,
                           int threads = 0);
double expected_gate_count_cnot(GateDistribution dist);

}  // namespace qisd
