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

#include <functional>
#include <vector>

#include "qisd/gates.hpp"

namespace qisd {

/// Couplings and detuning of the resonant iSWAP-family gate scheme in the
/// rotating frame, all in angular units (rad/s). Inputs quoted as
/// frequency-via-h in MHz convert through `from_mhz`.
struct PulseParams {
  double g_yy = 0;   // transverse coupling
  double g_zz = 0;   // stray longitudinal coupling
  double delta = 0;  // detuning
  double duration = 0;  // seconds

  static PulseParams from_mhz(double gyy_mhz, double gzz_mhz, double delta_mhz,
                              double duration_s);
  /// Duration hitting the square-root point, pi/|g_yy|.
  static PulseParams sqisw_point_mhz(double gyy_mhz, double gzz_mhz,
                                     double delta_mhz);
};

/// MHz (via h) -> angular rad/s.
double mhz_to_angular(double mhz);

struct DecoherenceParams {
  double gamma1 = 0;     // 1/T1, per qubit
  double gamma_phi = 0;  // 1/T_phi, per qubit

  static DecoherenceParams from_times_us(double t1_us, double tphi_us);
};

/// Rotating-frame Hamiltonian (basis |00>,|01>,|10>,|11>):
///   diag(g_zz/4, delta - g_zz/4, -g_zz/4, delta + g_zz/4)
/// with g_yy/4 coupling the single-excitation states.
Matrix4 rotated_hamiltonian(const PulseParams& p);

/// U(t) = exp(-i H_R t), exact via the real-symmetric eigendecomposition.
Matrix4 coherent_unitary(const PulseParams& p);

/// 1 - F(U(t = pi/|g_yy|), SQiSW(†)). No phase calibration is applied; the
/// raw average-gate infidelity reproduces the quadratic error laws
/// E_ZZ = (pi^2/20)(g_zz/g_yy)^2 and E_delta = ((8+pi^2)/10)(delta/g_yy)^2.
double coherent_infidelity(const PulseParams& p);

/// Fixed-step RK4 integration of
///   drho/dt = -i[H,rho] + sum_j (Gamma1 L[sigma_j^-] + Gamma_phi/2 L[Z_j]) rho
/// with L[c] rho = c rho c† - (c†c rho + rho c†c)/2.
Matrix4 lindblad_evolve(const Matrix4& h, const DecoherenceParams& dec,
                        const Matrix4& rho0, double t, int steps = 2000);

using Channel = std::function<Matrix4(const Matrix4&)>;

struct ProcessFidelity {
  double F_p = 0;
  double F_avg = 0;
};

/// Process and average fidelity of a linear trace-preserving channel
/// against a target unitary, via the chi matrix in the normalized
/// two-qubit Pauli basis (F_p = Tr(chi1 chi2), F = (d F_p + 1)/(d + 1)).
/// Linearity/trace preservation is checked on the 16-element spanning set;
/// violations throw std::invalid_argument.
ProcessFidelity channel_process_fidelity(const Channel& channel,
                                         const Matrix4& target);

/// The 16x16 chi matrix itself (normalized Pauli-vector basis).
Eigen::MatrixXcd channel_chi_matrix(const Channel& channel);

/// Channel for the pulsed gate under decoherence at the given parameters.
Channel lindblad_channel(const PulseParams& p, const DecoherenceParams& dec,
                         int steps = 2000);

// ---- quadratic error budget ----
struct ErrorBudget {
  double c_delta2 = 0;   // per (rad/s)^2
  double c_gzz_delta = 0;
  double c_gzz2 = 0;
  double c_gamma1 = 0;   // per (1/s)
  double c_gamma_phi = 0;
  double intercept = 0;
  double residual_rms = 0;

  /// Optimal detuning at fixed g_zz: argmin of the coherent quadratic form.
  double optimal_delta(double g_zz) const;

  struct Attribution {
    double stray_coupling = 0;  // quadratic form at the optimal detuning
    double detuning_precision = 0;  // c_delta2 * delta_p^2
    double dissipation = 0;         // c_gamma1 * Gamma1
    double dephasing = 0;           // c_gamma_phi * Gamma_phi
    double total() const {
      return stray_coupling + detuning_precision + dissipation + dephasing;
    }
  };
  Attribution attribute(double g_zz, double delta_p, double gamma1,
                        double gamma_phi) const;
};

struct BudgetSweepSpec {
  double gyy_mhz = 25.0;
  std::vector<double> gzz_mhz;    // default [-0.6, 0.6] grid
  std::vector<double> delta_mhz;  // default [-0.4, 0.4] grid
  std::vector<double> t1_us;      // default {25, 50, 100}
  std::vector<double> tphi_us;    // default {25, 50, 100}
  int lindblad_steps = 400;

  static BudgetSweepSpec defaults();
};

/// Least squares of simulated infidelity on features
/// {Gamma1, Gamma_phi, g_zz^2, delta^2, g_zz*delta} plus an intercept.
/// Coherent grid points use the exact propagator; decoherent points use
/// the Lindblad channel fidelity.
ErrorBudget error_budget(const BudgetSweepSpec& spec);

}  // namespace qisd
