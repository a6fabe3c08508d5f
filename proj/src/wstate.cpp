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

#include "qisd/wstate.hpp"

#include <cmath>
#include <stdexcept>

namespace qisd {

GateCircuit w_like_chain_circuit(int n) {
  if (n < 2 || n > 12) throw std::invalid_argument("n out of range");
  GateCircuit c;
  c.qubits = n;
  std::vector<Matrix2> first(n, Matrix2::Identity());
  first[0] = pauli_x();
  c.add_local(first);
  for (int i = 0; i + 1 < n; ++i) c.add_two_qubit("SQiSW", i, i + 1);
  return c;
}

VectorX w_like_chain_state(int n) { return apply_circuit(w_like_chain_circuit(n)); }

VectorX w_state(int n) {
  VectorX psi = VectorX::Zero(Eigen::Index(1) << n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) psi(Eigen::Index(1) << (n - 1 - i)) = a;
  return psi;
}

VectorX ghz_state(int n) {
  VectorX psi = VectorX::Zero(Eigen::Index(1) << n);
  const double a = 1.0 / std::sqrt(2.0);
  psi(0) = a;
  psi(psi.size() - 1) = a;
  return psi;
}

Matrix4 two_qubit_marginal(const VectorX& psi, int n, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("bad qubit pair");
  const int sa = n - 1 - a, sb = n - 1 - b;
  Matrix4 rho = Matrix4::Zero();
  const Eigen::Index dim = Eigen::Index(1) << n;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const int ia = (i >> sa) & 1, ib = (i >> sb) & 1;
    for (int ja = 0; ja < 2; ++ja)
      for (int jb = 0; jb < 2; ++jb) {
        Eigen::Index j = i;
        j = (j & ~(Eigen::Index(1) << sa)) | (Eigen::Index(ja) << sa);
        j = (j & ~(Eigen::Index(1) << sb)) | (Eigen::Index(jb) << sb);
        rho(2 * ia + ib, 2 * ja + jb) += psi(i) * std::conj(psi(j));
      }
  }
  return rho;
}

double partial_transpose_min_eigenvalue(const Matrix4& rho) {
  // transpose the second subsystem: swap column index pairs within blocks
  Matrix4 pt;
  for (int r0 = 0; r0 < 2; ++r0)
    for (int r1 = 0; r1 < 2; ++r1)
      for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1)
          pt(2 * r0 + c1, 2 * c0 + r1) = rho(2 * r0 + r1, 2 * c0 + c1);
  Eigen::SelfAdjointEigenSolver<Matrix4> es(pt);
  return es.eigenvalues().minCoeff();
}

bool is_w_like(const VectorX& psi, int n) {
  if (n < 2 || n > 12) throw std::invalid_argument("n out of range");
  if (psi.size() != (Eigen::Index(1) << n))
    throw std::invalid_argument("state size mismatch");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Matrix4 rho = two_qubit_marginal(psi, n, a, b);
      if (partial_transpose_min_eigenvalue(rho) >= -1e-9) return false;
    }
  return true;
}

}  // namespace qisd
