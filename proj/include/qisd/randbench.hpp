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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qisd/compile.hpp"
#include "qisd/rng.hpp"

namespace qisd {

/// Per-gate depolarizing rates. After every gate each touched qubit passes
/// through rho -> (1-p) rho + (p/3)(X rho X + Y rho Y + Z rho Z).
struct NoiseModel {
  std::map<std::string, double> p_two_qubit;  // instruction name -> rate
  double p_single = 0.0;

  static NoiseModel depolarizing(double p_sqisw, double p_iswap,
                                 double p_single);
  double two_qubit_rate(const std::string& name) const;
};

using DensityMatrix = Eigen::MatrixXcd;

/// Density-matrix simulation of a circuit under the noise model, starting
/// from a computational basis state. Guarded at 6 qubits.
DensityMatrix simulate_noisy(const GateCircuit& c, const NoiseModel& noise,
                             int initial_basis_state = 0);

/// Probability of measuring `basis_state` in rho.
double born_probability(const DensityMatrix& rho, int basis_state);

/// FRB / iFRB sequence: m-1 Haar-random SU(4) gates compiled into the
/// backend, optionally each followed by the raw interleaved instruction,
/// terminated by the compiled recovery gate. Noiseless survival of |00>
/// is 1 by construction.
GateCircuit gen_rand_seq(int m, std::optional<std::string> interleave,
                         Backend backend, RngStream& rng);

struct DecayFit {
  double A = 0, u = 0, B = 0;
  double residual = 0;  // RMS
};

/// Least squares for E[p_m] = A u^m + B: u-grid scan with linear (A,B)
/// solves, then Gauss-Newton refinement. Throws
/// std::invalid_argument("degenerate decay") on constant data.
DecayFit fit_decay(const std::vector<std::pair<double, double>>& points);

/// r = 1 - (1-u)(d-1)/d
double frb_fidelity(double u, int d);
/// r_T = 1 - (1 - v/u)(d-1)/d
double ifrb_target_fidelity(double u_ref, double u_int, int d);

struct FrbCurve {
  std::vector<int> lengths;
  std::vector<double> mean_survival;
  std::vector<double> stderr_;
  DecayFit fit;
};

/// Simulate an FRB or iFRB experiment (exact Born probabilities, no shot
/// noise). `interleave` empty = reference run.
FrbCurve run_frb(const std::vector<int>& lengths, int sequences_per_length,
                 std::optional<std::string> interleave, Backend backend,
                 const NoiseModel& noise, RngStream rng, int threads = 0);

/// Default sequence lengths used by the simulated experiments.
std::vector<int> default_frb_lengths();

/// Average gate fidelity of the depolarized instruction channel, computed
/// directly from the process matrix (oracle for iFRB extraction).
double depolarized_instruction_fidelity(const std::string& name,
                                        const NoiseModel& noise);

// ---- quantum volume ----
enum class Connectivity { Complete, Chain };

struct QvResult {
  int d = 0;
  double h_d = 0;
  bool passed = false;  // h_d > 2/3
  int num_circuits = 0;
};

/// Model circuits per the heavy-output protocol: d layers of a uniform
/// qubit permutation followed by Haar SU(4) on floor(d/2) pairs. Heavy set
/// from the ideal distribution by strict median threshold; h_d is the mean
/// noisy heavy mass over circuits. Chain connectivity routes permutations
/// as adjacent-transposition SWAP chains compiled into the backend.
QvResult quantum_volume_run(int d, int num_circuits, const NoiseModel& noise,
                            Backend backend, Connectivity connectivity,
                            RngStream rng, int threads = 0);

// ---- Weyl-chamber fidelity sweep ----
struct SweepPoint {
  InteractionCoeffs coords;
  double fidelity = 0;   // extracted iFRB target fidelity
  double error_rate = 0;  // 1 - fidelity
};

/// For each chamber point, build the target gate with seeded random local
/// dressing, compile it into the backend, run simulated iFRB against the
/// compiled target and record the extracted fidelity.
std::vector<SweepPoint> frb_weyl_sweep(
    const std::vector<InteractionCoeffs>& grid, const NoiseModel& noise,
    Backend backend, RngStream rng, int sequences_per_length = 20,
    int threads = 0);

/// Coarse default grid: x multiples of pi/20, y and z multiples of pi/12
/// intersected with the chamber (interior-biased; >= 20 points).
std::vector<InteractionCoeffs> default_sweep_grid();

}  // namespace qisd
