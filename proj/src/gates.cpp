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

#include "qisd/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qisd {

namespace {
const Complex kI(0.0, 1.0);
const double kInvSqrt2 = 0.70710678118654752440084436210485;
}  // namespace

Matrix2 pauli_i() { return Matrix2::Identity(); }

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix2 hadamard() {
  Matrix2 m;
  m << 1, 1, 1, -1;
  return m * kInvSqrt2;
}

Matrix2 rx(double theta) {
  Matrix2 m;
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, kI * s, kI * s, c;
  return m;
}

Matrix2 ry(double theta) {
  Matrix2 m;
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, s, -s, c;
  return m;
}

Matrix2 rz(double theta) {
  Matrix2 m;
  m << std::exp(kI * (theta / 2)), 0, 0, std::exp(-kI * (theta / 2));
  return m;
}

Matrix4 kron2(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

MatrixX kron(const MatrixX& a, const MatrixX& b) {
  MatrixX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix4 pauli_string2(int n) {
  const Matrix2 p[4] = {pauli_i(), pauli_x(), pauli_y(), pauli_z()};
  return kron2(p[(n >> 2) & 3], p[n & 3]);
}

bool is_unitary(const MatrixX& u, double tol) {
  if (u.rows() != u.cols()) return false;
  MatrixX d = u * u.adjoint() - MatrixX::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() < tol;
}

void require_unitary(const MatrixX& u, double tol) {
  if (!is_unitary(u, tol)) throw std::invalid_argument("not unitary");
}

Matrix2 to_special_unitary(const Matrix2& u) {
  return u / std::sqrt(u.determinant());
}

Matrix4 to_special_unitary(const Matrix4& u) {
  return u / std::pow(u.determinant(), 0.25);
}

Matrix4 named_gate(const std::string& name) {
  Matrix4 m = Matrix4::Identity();
  if (name == "I") return m;
  if (name == "CNOT") {
    m.setZero();
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    return m;
  }
  if (name == "CZ") {
    m(3, 3) = -1;
    return m;
  }
  if (name == "SQiSW" || name == "SQiSW\xe2\x80\xa0" || name == "SQiSWdg" ||
      name == "SQiSW†") {
    m.setZero();
    m(0, 0) = m(3, 3) = 1;
    m(1, 1) = m(2, 2) = kInvSqrt2;
    m(1, 2) = m(2, 1) = kI * kInvSqrt2;
    if (name != "SQiSW") return m.adjoint();
    return m;
  }
  if (name == "iSWAP" || name == "iSWAPdg" || name == "iSWAP†") {
    m.setZero();
    m(0, 0) = m(3, 3) = 1;
    m(1, 2) = m(2, 1) = kI;
    if (name != "iSWAP") return m.adjoint();
    return m;
  }
  if (name == "SWAP" || name == "SWAPdg" || name == "SWAP†") {
    m.setZero();
    m(0, 0) = m(3, 3) = m(1, 2) = m(2, 1) = 1;
    return m;
  }
  if (name == "B") {
    // canonical representative exp(i(pi/4 XX + pi/8 YY))
    const double x = kPi / 4, y = kPi / 8;
    Matrix4 out = Matrix4::Zero();
    // block closed form: acts on {|00>,|11>} and {|01>,|10>} subspaces
    out(0, 0) = out(3, 3) = std::cos(x - y);
    out(0, 3) = out(3, 0) = kI * std::sin(x - y);
    out(1, 1) = out(2, 2) = std::cos(x + y);
    out(1, 2) = out(2, 1) = kI * std::sin(x + y);
    return out;
  }
  throw std::invalid_argument("unknown gate");
}

MatrixX haar_random_unitary(int dim, RngStream& rng) {
  if (dim != 2 && dim != 4) throw std::invalid_argument("dim must be 2 or 4");
  MatrixX a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      a(i, j) = Complex(rng.next_normal(), rng.next_normal());
  Eigen::HouseholderQR<MatrixX> qr(a);
  MatrixX q = qr.householderQ() * MatrixX::Identity(dim, dim);
  MatrixX r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  // det normalization: principal dim-th root
  Complex det = q.determinant();
  q *= std::pow(det, -1.0 / dim);
  return q;
}

Matrix4 haar_su4(RngStream& rng) { return Matrix4(haar_random_unitary(4, rng)); }
Matrix2 haar_su2(RngStream& rng) { return Matrix2(haar_random_unitary(2, rng)); }

double average_gate_fidelity(const Matrix4& u, const Matrix4& v) {
  const double t = std::abs((v.adjoint() * u).trace());
  return (t * t + 4.0) / 20.0;
}

namespace {

// |<P_n, W>| / 4 maximized over the 16 Pauli strings
bool proportional_to_pauli(const Matrix4& w) {
  for (int n = 0; n < 16; ++n) {
    const double overlap = std::abs((pauli_string2(n).adjoint() * w).trace()) / 4.0;
    if (overlap > 1.0 - 1e-9) return true;
  }
  return false;
}

bool conjugates_paulis_to_paulis(const Matrix4& u) {
  for (int n = 1; n < 16; ++n) {
    const Matrix4 w = u * pauli_string2(n) * u.adjoint();
    if (!proportional_to_pauli(w)) return false;
  }
  return true;
}

}  // namespace

CliffordHierarchy clifford_hierarchy_checks(const Matrix4& u) {
  CliffordHierarchy out;
  out.is_clifford = conjugates_paulis_to_paulis(u);
  out.in_level_3 = true;
  for (int n = 1; n < 16 && out.in_level_3; ++n) {
    const Matrix4 w = u * pauli_string2(n) * u.adjoint();
    if (!conjugates_paulis_to_paulis(w)) out.in_level_3 = false;
  }
  return out;
}

}  // namespace qisd
