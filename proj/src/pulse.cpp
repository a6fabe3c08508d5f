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

#include "qisd/pulse.hpp"

#include <cmath>
#include <stdexcept>

namespace qisd {

namespace {
const Complex kI(0.0, 1.0);
}

double mhz_to_angular(double mhz) { return 2 * kPi * mhz * 1e6; }

PulseParams PulseParams::from_mhz(double gyy_mhz, double gzz_mhz,
                                  double delta_mhz, double duration_s) {
  PulseParams p;
  p.g_yy = mhz_to_angular(gyy_mhz);
  p.g_zz = mhz_to_angular(gzz_mhz);
  p.delta = mhz_to_angular(delta_mhz);
  p.duration = duration_s;
  if (p.g_yy == 0) throw std::invalid_argument("g_yy must be nonzero");
  if (p.duration <= 0) throw std::invalid_argument("duration must be positive");
  return p;
}

PulseParams PulseParams::sqisw_point_mhz(double gyy_mhz, double gzz_mhz,
                                         double delta_mhz) {
  const double gyy = mhz_to_angular(gyy_mhz);
  return from_mhz(gyy_mhz, gzz_mhz, delta_mhz, kPi / std::abs(gyy));
}

DecoherenceParams DecoherenceParams::from_times_us(double t1_us,
                                                   double tphi_us) {
  DecoherenceParams d;
  d.gamma1 = t1_us > 0 ? 1.0 / (t1_us * 1e-6) : 0.0;
  d.gamma_phi = tphi_us > 0 ? 1.0 / (tphi_us * 1e-6) : 0.0;
  return d;
}

Matrix4 rotated_hamiltonian(const PulseParams& p) {
  Matrix4 h = Matrix4::Zero();
  h(0, 0) = p.g_zz / 4;
  h(1, 1) = p.delta - p.g_zz / 4;
  h(2, 2) = -p.g_zz / 4;
  h(3, 3) = p.delta + p.g_zz / 4;
  h(1, 2) = h(2, 1) = p.g_yy / 4;
  return h;
}

Matrix4 coherent_unitary(const PulseParams& p) {
  const Matrix4 h = rotated_hamiltonian(p);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(h.real());
  const Eigen::Matrix4d v = es.eigenvectors();
  Eigen::Vector4cd ph;
  for (int k = 0; k < 4; ++k)
    ph(k) = std::exp(-kI * es.eigenvalues()(k) * p.duration);
  return v.cast<Complex>() * ph.asDiagonal() * v.transpose().cast<Complex>();
}

double coherent_infidelity(const PulseParams& p) {
  PulseParams q = p;
  q.duration = kPi / std::abs(p.g_yy);
  const Matrix4 u = coherent_unitary(q);
  const Matrix4 target =
      p.g_yy > 0 ? named_gate("SQiSWdg") : named_gate("SQiSW");
  return 1.0 - average_gate_fidelity(u, target);
}

namespace {

Matrix4 lindblad_rhs(const Matrix4& rho, const Matrix4& h,
                     const DecoherenceParams& dec) {
  static const Matrix2 sm = [] {
    Matrix2 m;
    m << 0, 1, 0, 0;
    return m;
  }();
  static const Matrix4 l1 = kron2(sm, Matrix2::Identity());
  static const Matrix4 l2 = kron2(Matrix2::Identity(), sm);
  static const Matrix4 n1 = l1.adjoint() * l1;
  static const Matrix4 n2 = l2.adjoint() * l2;
  static const Matrix4 z1 = kron2(pauli_z(), Matrix2::Identity());
  static const Matrix4 z2 = kron2(Matrix2::Identity(), pauli_z());

  Matrix4 out = -kI * (h * rho - rho * h);
  out += dec.gamma1 * (l1 * rho * l1.adjoint() - 0.5 * (n1 * rho + rho * n1));
  out += dec.gamma1 * (l2 * rho * l2.adjoint() - 0.5 * (n2 * rho + rho * n2));
  out += 0.5 * dec.gamma_phi * (z1 * rho * z1 - rho);
  out += 0.5 * dec.gamma_phi * (z2 * rho * z2 - rho);
  return out;
}

}  // namespace

Matrix4 lindblad_evolve(const Matrix4& h, const DecoherenceParams& dec,
                        const Matrix4& rho0, double t, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be positive");
  const double dt = t / steps;
  Matrix4 rho = rho0;
  for (int s = 0; s < steps; ++s) {
    const Matrix4 k1 = lindblad_rhs(rho, h, dec);
    const Matrix4 k2 = lindblad_rhs(rho + 0.5 * dt * k1, h, dec);
    const Matrix4 k3 = lindblad_rhs(rho + 0.5 * dt * k2, h, dec);
    const Matrix4 k4 = lindblad_rhs(rho + dt * k3, h, dec);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

Channel lindblad_channel(const PulseParams& p, const DecoherenceParams& dec,
                         int steps) {
  const Matrix4 h = rotated_hamiltonian(p);
  const double t = p.duration;
  return [h, dec, t, steps](const Matrix4& rho) {
    return lindblad_evolve(h, dec, rho, t, steps);
  };
}

namespace {

// (V x I)|Omega> with |Omega> = sum_i |ii>/2: component (r,i) = V(r,i)/2
Eigen::Matrix<Complex, 16, 1> choi_vector(const Matrix4& v) {
  Eigen::Matrix<Complex, 16, 1> out;
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 4; ++r) out(4 * r + i) = v(r, i) / 2.0;
  return out;
}

// Choi state rho_E = (E x I)|Omega><Omega| assembled from E on the matrix
// units (linear combinations of the Pauli spanning set).
Eigen::MatrixXcd choi_state(const Channel& channel) {
  Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Matrix4 eij = Matrix4::Zero();
      eij(i, j) = 1.0;
      const Matrix4 out = channel(eij);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          choi(4 * r + i, 4 * c + j) += out(r, c) / 4.0;
    }
  return choi;
}

}  // namespace

Eigen::MatrixXcd channel_chi_matrix(const Channel& channel) {
  // expressed in the orthonormal basis {(P_m x I)|Omega>} the Choi state
  // is exactly the chi matrix in the normalized Pauli basis
  const Eigen::MatrixXcd choi = choi_state(channel);
  Eigen::MatrixXcd basis(16, 16);
  for (int m = 0; m < 16; ++m) basis.col(m) = choi_vector(pauli_string2(m));
  return basis.adjoint() * choi * basis;
}

ProcessFidelity channel_process_fidelity(const Channel& channel,
                                         const Matrix4& target) {
  // linearity / trace preservation spot check on the spanning set
  for (int m = 0; m < 16; ++m) {
    const Matrix4 p = pauli_string2(m);
    const Complex tr = channel(p).trace();
    const Complex expect = p.trace();
    if (std::abs(tr - expect) > 1e-8)
      throw std::invalid_argument("channel is not trace preserving");
  }
  {
    const Matrix4 a = pauli_string2(1), b = pauli_string2(6);
    const Matrix4 lhs = channel(a + 0.5 * b);
    const Matrix4 rhs = channel(a) + 0.5 * channel(b);
    if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-8)
      throw std::invalid_argument("channel is not linear");
  }
  const Eigen::MatrixXcd choi = choi_state(channel);
  const auto tvec = choi_vector(target);
  const double fp = ((tvec.adjoint() * choi * tvec)(0, 0)).real();
  ProcessFidelity out;
  out.F_p = fp;
  out.F_avg = (4.0 * fp + 1.0) / 5.0;
  return out;
}

double ErrorBudget::optimal_delta(double g_zz) const {
  if (c_delta2 <= 0) return 0.0;
  return -c_gzz_delta * g_zz / (2.0 * c_delta2);
}

ErrorBudget::Attribution ErrorBudget::attribute(double g_zz, double delta_p,
                                                double gamma1,
                                                double gamma_phi) const {
  Attribution a;
  const double dstar = optimal_delta(g_zz);
  a.stray_coupling = c_delta2 * dstar * dstar + c_gzz_delta * g_zz * dstar +
                     c_gzz2 * g_zz * g_zz;
  a.detuning_precision = c_delta2 * delta_p * delta_p;
  a.dissipation = c_gamma1 * gamma1;
  a.dephasing = c_gamma_phi * gamma_phi;
  return a;
}

BudgetSweepSpec BudgetSweepSpec::defaults() {
  BudgetSweepSpec s;
  for (int i = 0; i <= 8; ++i) s.gzz_mhz.push_back(-0.6 + i * 0.15);
  for (int i = 0; i <= 8; ++i) s.delta_mhz.push_back(-0.4 + i * 0.1);
  s.t1_us = {25, 50, 100};
  s.tphi_us = {25, 50, 100};
  return s;
}

ErrorBudget error_budget(const BudgetSweepSpec& spec) {
  const Matrix4 target = named_gate("SQiSWdg");
  std::vector<Eigen::Matrix<double, 6, 1>> rows;
  std::vector<double> vals;

  // coherent grid: exact propagator
  for (double g : spec.gzz_mhz)
    for (double d : spec.delta_mhz) {
      const PulseParams p = PulseParams::sqisw_point_mhz(spec.gyy_mhz, g, d);
      const double e = coherent_infidelity(p);
      Eigen::Matrix<double, 6, 1> row;
      row << 0.0, 0.0, p.g_zz * p.g_zz, p.delta * p.delta, p.g_zz * p.delta,
          1.0;
      rows.push_back(row);
      vals.push_back(e);
    }
  // decoherence line: Lindblad channel at zero coherent error
  for (double t1 : spec.t1_us)
    for (double tphi : spec.tphi_us) {
      const PulseParams p = PulseParams::sqisw_point_mhz(spec.gyy_mhz, 0, 0);
      const DecoherenceParams dec = DecoherenceParams::from_times_us(t1, tphi);
      const double e =
          1.0 - channel_process_fidelity(
                    lindblad_channel(p, dec, spec.lindblad_steps), target)
                    .F_avg;
      Eigen::Matrix<double, 6, 1> row;
      row << dec.gamma1, dec.gamma_phi, 0.0, 0.0, 0.0, 1.0;
      rows.push_back(row);
      vals.push_back(e);
    }

  Eigen::MatrixXd a(rows.size(), 6);
  Eigen::VectorXd y(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    a.row(i) = rows[i].transpose();
    y(i) = vals[i];
  }
  const auto svd = a.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.rank() < 6) throw std::runtime_error("rank-deficient design matrix");
  const Eigen::VectorXd coef = svd.solve(y);
  ErrorBudget out;
  out.c_gamma1 = coef(0);
  out.c_gamma_phi = coef(1);
  out.c_gzz2 = coef(2);
  out.c_delta2 = coef(3);
  out.c_gzz_delta = coef(4);
  out.intercept = coef(5);
  const Eigen::VectorXd res = a * coef - y;
  out.residual_rms = std::sqrt(res.squaredNorm() / res.size());
  return out;
}

}  // namespace qisd
